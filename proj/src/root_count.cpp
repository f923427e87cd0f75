#include "recprs/root_count.hpp"

#include "recprs/errors.hpp"

namespace recprs {

int sign_variations(std::span<const Rational> values) {
    int changes = 0;
    int prev = 0;
    for (const auto& v : values) {
        const int s = sign(v);
        if (s == 0) throw ZeroEntry("sign variation of a sequence containing zero");
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

LambdaPair lambda_pair(const PrsLevel& level) {
    LambdaPair out;
    for (int i = 1; i <= level.length(); ++i) {
        const Rational& lc = level.c(i);
        out.at_plus_inf.push_back(lc);
        out.at_minus_inf.push_back(level.n(i) % 2 == 0 ? lc : Rational(-lc));
    }
    return out;
}

RootCount count_real_roots_with_multiplicity(const RecursivePRS& sturm) {
    RootCount out;
    for (const auto& level : sturm.levels) {
        for (std::size_t s = 0; s < level.alphas.size(); ++s) {
            if (level.alphas[s] != 1 || level.betas[s] != -1)
                throw InvalidRule("root counting needs the Sturm division rule");
        }
        const LambdaPair lp = lambda_pair(level);
        const int v = sign_variations(lp.at_minus_inf) - sign_variations(lp.at_plus_inf);
        out.per_level.push_back(v);
        out.total += v;
    }
    return out;
}

RootCount count_real_roots_with_multiplicity(const Polynomial& P) {
    return count_real_roots_with_multiplicity(recursive_sturm(P));
}

}  // namespace recprs
