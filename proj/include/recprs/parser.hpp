#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "recprs/errors.hpp"
#include "recprs/polynomial.hpp"

namespace recprs {

/// Parse failure with a 1-based source position and the tokens that would
/// have been accepted there.
class SyntaxError : public Error {
   public:
    SyntaxError(const std::string& message, int line, int column, std::vector<std::string> expected);

    int line() const { return line_; }
    int column() const { return column_; }
    const std::vector<std::string>& expected() const { return expected_; }

   private:
    int line_;
    int column_;
    std::vector<std::string> expected_;
};

class NonIntegerExponent : public SyntaxError {
   public:
    using SyntaxError::SyntaxError;
};

class NegativeExponent : public SyntaxError {
   public:
    using SyntaxError::SyntaxError;
};

/// Grammar, with no implicit multiplication:
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' INT)*
///   primary := INT ('/' INT)? | 'x' | '(' expr ')'
Polynomial parse_polynomial(std::string_view text);

}  // namespace recprs
