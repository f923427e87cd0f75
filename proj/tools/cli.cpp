#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "recprs/corpus.hpp"
#include "recprs/errors.hpp"
#include "recprs/parser.hpp"
#include "recprs/prs.hpp"
#include "recprs/rec_subres.hpp"
#include "recprs/report.hpp"
#include "recprs/root_count.hpp"
#include "recprs/subres.hpp"

namespace recprs::cli {

namespace {

using Json = json::Json;

constexpr std::size_t kMaxTextMatrixCols = 40;

struct Options {
    std::string p, f, g;
    std::string rule = "sturm";
    std::string format = "text";
    std::optional<long> seed;
    int count = 10;
    std::optional<int> k, j;
    bool chain = false;
    bool matrix = false;
    bool all = false;
    std::string claim;
};

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read input file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// `value` is an expression or @file. A file holds one expression, or JSON: a
// coefficient array, {"coeffs": [...]}, or a previous report whose "input"
// object carries the polynomial under `key`.
Polynomial load_input(const std::string& value, const std::string& key, const std::string& flag) {
    std::string text = value;
    if (!value.empty() && value[0] == '@') text = read_file(value.substr(1));
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
        Json doc;
        try {
            doc = Json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw UsageError(flag + ": malformed JSON input: " + e.what());
        }
        try {
            if (doc.is_array()) return json::polynomial_from(doc);
            if (doc.contains("coeffs")) return json::polynomial_from(doc.at("coeffs"));
            if (doc.contains("input") && doc.at("input").contains(key))
                return json::polynomial_from(doc.at("input").at(key));
        } catch (const std::invalid_argument& e) {
            throw UsageError(flag + ": " + e.what());
        }
        throw UsageError(flag + ": JSON input has no polynomial for '" + key + "'");
    }
    try {
        return parse_polynomial(text);
    } catch (const SyntaxError& e) {
        throw UsageError(flag + ": parse error at " + std::string(e.what()));
    }
}

struct Inputs {
    Polynomial F;
    Polynomial G;
    Json json;
};

// (F, G) from -f/-g, or (P, P') from -p.
Inputs resolve_pair(const Options& o) {
    Inputs in;
    if (!o.f.empty() || !o.g.empty()) {
        if (o.f.empty() || o.g.empty()) throw UsageError("both -f and -g are required");
        in.F = load_input(o.f, "F", "-f");
        in.G = load_input(o.g, "G", "-g");
    } else if (!o.p.empty()) {
        in.F = load_input(o.p, "P", "-p");
        in.G = derivative(in.F);
        in.json["P"] = json::polynomial(in.F);
    } else {
        throw UsageError("an input is required: -p <expr> or -f <expr> -g <expr>");
    }
    in.json["F"] = json::polynomial(in.F);
    in.json["G"] = json::polynomial(in.G);
    return in;
}

std::string rat(const Rational& r) { return r.get_str(); }

void print_matrix_text(std::ostream& out, const ExactMatrix& m) {
    if (m.cols() > kMaxTextMatrixCols) {
        out << "matrix " << m.rows() << "x" << m.cols() << " (entries with --format json)\n";
        return;
    }
    std::vector<std::size_t> width(m.cols(), 1);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) width[c] = std::max(width[c], rat(m(r, c)).size());
    out << "matrix " << m.rows() << "x" << m.cols() << "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << "  [";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const std::string s = rat(m(r, c));
            out << (c ? " " : "") << std::string(width[c] - s.size(), ' ') << s;
        }
        out << "]\n";
    }
}

void print_level_text(std::ostream& out, const PrsLevel& level, const std::string& tag) {
    for (int i = 1; i <= level.length(); ++i) {
        out << "P" << tag << "_" << i << " = " << level.element(i) << "\n";
        if (i >= 3) out << "    alpha = " << rat(level.alpha(i)) << ", beta = " << rat(level.beta(i)) << "\n";
    }
}

void print_report_text(std::ostream& out, const VerificationReport& report) {
    out << (report.passed() ? "PASS " : "FAIL ") << report.subject << " (" << report.checks.size() << " checks)\n";
    for (const auto& c : report.checks) {
        if (c.pass) continue;
        out << "  FAIL " << c.claim << " at k=" << c.k << " j=" << c.j << "\n";
        out << "    lhs = " << c.lhs << "\n    rhs = " << c.rhs << "\n";
        if (c.factor) out << "    factor = " << rat(*c.factor) << "\n";
    }
}

Json base_json(const std::string& command, const Options& o) {
    Json out;
    out["command"] = command;
    out["rule"] = o.rule;
    return out;
}

void emit_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

int cmd_prs(const Options& o, std::ostream& out) {
    const Inputs in = resolve_pair(o);
    const PrsLevel level = prs(in.F, in.G, DivisionRule::from_name(o.rule));
    if (o.format == "json") {
        Json doc = base_json("prs", o);
        doc["input"] = in.json;
        doc["result"] = json::prs_level(level);
        emit_json(out, doc);
    } else {
        print_level_text(out, level, "");
    }
    return kOk;
}

int cmd_rprs(const Options& o, std::ostream& out) {
    const Inputs in = resolve_pair(o);
    const RecursivePRS rp = rprs(in.F, in.G, DivisionRule::from_name(o.rule));
    if (o.format == "json") {
        Json doc = base_json("rprs", o);
        doc["input"] = in.json;
        doc["result"] = json::recursive_prs(rp);
        emit_json(out, doc);
        return kOk;
    }
    out << "levels: " << rp.t() << (rp.complete ? " (complete)" : "") << "\nj:";
    for (int jv : rp.j_values) out << " " << jv;
    out << "\n";
    for (int k = 1; k <= rp.t(); ++k) {
        out << "level " << k << " (gamma = " << rat(rp.gammas[static_cast<std::size_t>(k - 1)]) << ")\n";
        print_level_text(out, rp.level(k), "^(" + std::to_string(k) + ")");
    }
    return kOk;
}

int cmd_sturm_count(const Options& o, std::ostream& out) {
    if (o.p.empty()) throw UsageError("sturm-count needs -p <expr>");
    const Polynomial P = load_input(o.p, "P", "-p");
    const RootCount rc = count_real_roots_with_multiplicity(P);
    if (o.format == "json") {
        Json doc;
        doc["command"] = "sturm-count";
        doc["input"]["P"] = json::polynomial(P);
        doc["result"] = json::root_count(rc);
        emit_json(out, doc);
        return kOk;
    }
    out << "total: " << rc.total << "\nper-level:";
    for (std::size_t i = 0; i < rc.per_level.size(); ++i) out << (i ? "," : " ") << rc.per_level[i];
    out << "\n";
    return kOk;
}

int cmd_subres(const Options& o, std::ostream& out) {
    const Inputs in = resolve_pair(o);
    if (!o.chain && !o.j) throw UsageError("subres needs -j <index> or --chain");
    Json doc = base_json("subres", o);
    doc.erase("rule");
    doc["input"] = in.json;
    if (o.chain) {
        const SubresChain chain = subresultant_chain(in.F, in.G);
        Json entries = Json::array();
        for (const auto& [jj, s] : chain.entries) {
            if (o.format == "text") out << "S_" << jj << " = " << s << "\n";
            entries.push_back(Json{{"j", jj}, {"S", json::polynomial(s)}});
        }
        doc["result"] = entries;
    } else {
        const Polynomial s = subresultant(in.F, in.G, *o.j);
        if (o.format == "text") out << "S_" << *o.j << " = " << s << "\n";
        doc["j"] = *o.j;
        doc["result"] = json::polynomial(s);
    }
    if (o.format == "json") emit_json(out, doc);
    return kOk;
}

int cmd_recsubres(const Options& o, std::ostream& out) {
    const Inputs in = resolve_pair(o);
    if (!o.k || !o.j) throw UsageError("recsubres needs -k <level> and -j <index>");
    RecSubresContext ctx(rprs(in.F, in.G, DivisionRule::from_name(o.rule)));
    const Polynomial s = ctx.rec_subresultant(*o.k, *o.j);
    const SimilarityFactors f = ctx.similarity_factors(*o.k, *o.j);
    if (o.format == "json") {
        Json doc = base_json("recsubres", o);
        doc["input"] = in.json;
        doc["k"] = *o.k;
        doc["j"] = *o.j;
        doc["result"] = json::polynomial(s);
        doc["factors"] = json::similarity_factors(f);
        if (o.matrix) doc["matrix"] = json::matrix(ctx.matrix(*o.k, *o.j).matrix);
        emit_json(out, doc);
        return kOk;
    }
    out << "S_(" << *o.k << "," << *o.j << ") = " << s << "\n";
    out << "u = " << f.u << ", B = " << rat(f.B) << ", b = " << f.b << ", r = " << rat(f.r) << ", R = " << rat(f.R)
        << "\n";
    if (o.matrix) print_matrix_text(out, ctx.matrix(*o.k, *o.j).matrix);
    return kOk;
}

int cmd_dims(const Options& o, std::ostream& out) {
    const Inputs in = resolve_pair(o);
    if (!o.k || !o.j) throw UsageError("dims needs -k <level> and -j <index>");
    const RecursivePRS rp = rprs(in.F, in.G, DivisionRule::from_name(o.rule));
    const MatrixDims d = rec_subres_dims(rp.m(), rp.n(), rp.j_values, *o.k, *o.j);
    if (o.format == "json") {
        Json doc = base_json("dims", o);
        doc["input"] = in.json;
        doc["j_values"] = rp.j_values;
        doc["k"] = *o.k;
        doc["j"] = *o.j;
        doc["result"] = Json{{"rows", d.rows}, {"cols", d.cols}};
        emit_json(out, doc);
    } else {
        out << "M^(" << *o.k << "," << *o.j << "): " << d.rows << " x " << d.cols << "\n";
    }
    return kOk;
}

std::vector<VerificationReport> verify_one(const Options& o, const Polynomial& F, const Polynomial& G, bool all) {
    std::vector<VerificationReport> reports;
    if (o.claim == "fundamental") {
        if (all) {
            for (const char* name : {"sturm", "monic", "primitive", "subresultant"})
                reports.push_back(verify_fundamental_theorem(F, G, DivisionRule::from_name(name)));
        } else {
            reports.push_back(verify_fundamental_theorem(F, G, DivisionRule::from_name(o.rule)));
        }
        return reports;
    }
    RecSubresContext ctx(rprs(F, G, DivisionRule::from_name(o.rule)));
    if (o.claim == "lemma1") {
        if (all) {
            reports.push_back(ctx.verify_similarity_all());
        } else {
            if (!o.k || !o.j) throw UsageError("verify lemma1 needs -k and -j, or --all");
            reports.push_back(ctx.verify_similarity(*o.k, *o.j));
        }
    } else {
        if (all) {
            for (int k = 1; k <= ctx.rprs().t(); ++k) reports.push_back(ctx.verify_recursive_fundamental(k));
        } else {
            if (!o.k) throw UsageError("verify theorem2 needs -k, or --all");
            reports.push_back(ctx.verify_recursive_fundamental(*o.k));
        }
    }
    return reports;
}

int cmd_verify(const Options& o, std::ostream& out) {
    struct Case {
        Polynomial F, G;
        Json input;
        std::vector<VerificationReport> reports;
    };
    std::vector<Case> cases;
    if (o.seed) {
        corpus::Rng rng(static_cast<std::uint64_t>(*o.seed));
        for (int i = 0; i < o.count; ++i) {
            Case c;
            if (o.claim == "fundamental") {
                const int deg_f = static_cast<int>(corpus::draw(rng, 4, 8));
                const int gcd_deg = static_cast<int>(corpus::draw(rng, 0, 3));
                std::tie(c.F, c.G) = corpus::random_pair_with_gcd(rng, deg_f, gcd_deg, 9);
            } else {
                c.F = corpus::random_multiplicity_case(rng, 10, 5).P;
                c.G = derivative(c.F);
                c.input["P"] = json::polynomial(c.F);
            }
            c.input["F"] = json::polynomial(c.F);
            c.input["G"] = json::polynomial(c.G);
            cases.push_back(std::move(c));
        }
    } else {
        Inputs in = resolve_pair(o);
        cases.push_back({in.F, in.G, in.json, {}});
    }

    bool pass = true;
    Json docs = Json::array();
    for (auto& c : cases) {
        c.reports = verify_one(o, c.F, c.G, o.all || o.seed.has_value());
        for (const auto& r : c.reports) {
            pass = pass && r.passed();
            if (o.format == "text") print_report_text(out, r);
        }
    }
    if (o.format == "json") {
        Json doc;
        doc["command"] = "verify";
        doc["claim"] = o.claim;
        doc["rule"] = o.rule;
        if (o.seed) doc["seed"] = *o.seed;
        Json items = Json::array();
        for (const auto& c : cases) {
            Json item;
            item["input"] = c.input;
            Json reps = Json::array();
            for (const auto& r : c.reports) reps.push_back(json::verification(r));
            item["reports"] = reps;
            items.push_back(std::move(item));
        }
        doc["cases"] = items;
        doc["pass"] = pass;
        emit_json(out, doc);
    } else {
        out << (pass ? "all checks passed" : "verification FAILED") << "\n";
    }
    return pass ? kOk : kVerificationFailed;
}

void add_common(CLI::App* sub, Options& o, bool with_rule = true) {
    sub->add_option("-p", o.p, "Polynomial P (expression or @file); G defaults to P'");
    sub->add_option("-f", o.f, "Polynomial F (expression or @file)");
    sub->add_option("-g", o.g, "Polynomial G (expression or @file)");
    if (with_rule)
        sub->add_option("--rule", o.rule, "Division rule")
            ->check(CLI::IsMember({"sturm", "monic", "primitive", "subresultant"}));
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Recursive polynomial remainder sequences and subresultants over the rationals", "recprs"};
    app.require_subcommand(1);

    auto* prs_cmd = app.add_subcommand("prs", "Polynomial remainder sequence of (F, G)");
    add_common(prs_cmd, o);
    auto* rprs_cmd = app.add_subcommand("rprs", "Recursive PRS of (F, G)");
    add_common(rprs_cmd, o);
    auto* count_cmd = app.add_subcommand("sturm-count", "Real roots of P counted with multiplicity");
    add_common(count_cmd, o, false);
    count_cmd->add_option("--rule", o.rule, "Ignored: root counting always uses the Sturm rule");
    auto* subres_cmd = app.add_subcommand("subres", "Subresultants S_j(F, G)");
    add_common(subres_cmd, o, false);
    subres_cmd->add_option("-j", o.j, "Subresultant index");
    subres_cmd->add_flag("--chain", o.chain, "All S_j for j = 0 .. deg G - 1");
    auto* rec_cmd = app.add_subcommand("recsubres", "Recursive subresultant of index (k, j)");
    add_common(rec_cmd, o);
    rec_cmd->add_option("-k", o.k, "Level");
    rec_cmd->add_option("-j", o.j, "Index");
    rec_cmd->add_flag("--matrix", o.matrix, "Also emit the recursive subresultant matrix");
    auto* verify_cmd = app.add_subcommand("verify", "Check subresultant identities exactly");
    add_common(verify_cmd, o);
    verify_cmd->add_option("claim", o.claim, "fundamental | lemma1 | theorem2")
        ->required()
        ->check(CLI::IsMember({"fundamental", "lemma1", "theorem2"}));
    verify_cmd->add_option("-k", o.k, "Level");
    verify_cmd->add_option("-j", o.j, "Index");
    verify_cmd->add_flag("--all", o.all, "Every applicable rule, level or index");
    verify_cmd->add_option("--seed", o.seed, "Verify a random corpus drawn from this seed instead of an input");
    verify_cmd->add_option("--count", o.count, "Corpus size for --seed")->check(CLI::Range(1, 100000));
    auto* dims_cmd = app.add_subcommand("dims", "Dimensions of the recursive subresultant matrix M^(k,j)");
    add_common(dims_cmd, o);
    dims_cmd->add_option("-k", o.k, "Level")->required();
    dims_cmd->add_option("-j", o.j, "Index")->required();

    std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        for (auto* sub : app.get_subcommands()) err << sub->help();
        return kUsageError;
    }

    try {
        if (prs_cmd->parsed()) return cmd_prs(o, out);
        if (rprs_cmd->parsed()) return cmd_rprs(o, out);
        if (count_cmd->parsed()) return cmd_sturm_count(o, out);
        if (subres_cmd->parsed()) return cmd_subres(o, out);
        if (rec_cmd->parsed()) return cmd_recsubres(o, out);
        if (verify_cmd->parsed()) return cmd_verify(o, out);
        if (dims_cmd->parsed()) return cmd_dims(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace recprs::cli
