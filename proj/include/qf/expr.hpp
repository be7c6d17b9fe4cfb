#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qf/form.hpp"

namespace qf {

/// Parse failure with 1-based position information, formatted as "line:col: message".
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& message)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + message),
          line_(line),
          col_(col) {}

    int line() const noexcept { return line_; }
    int col() const noexcept { return col_; }

private:
    int line_;
    int col_;
};

/**
 * Syntax tree of the form expression language:
 *
 *   expr    := term (("+" | "perp") term)*
 *   term    := factor (("*" | "tensor") factor)*
 *   factor  := INT "x" factor | "<" entry ("," entry)* ">" | "H" | "0form"
 *            | func | "(" expr ")"
 *   func    := ("S" | "L") "^" INT "(" expr ")"
 *            | ("TS" | "qS") "(" INT ["," IDENT "," IDENT] ")"
 *   entry   := ["-"] unit ("*" unit)*        where unit := IDENT | INT
 *
 * Perp/Tensor children are flat (never singleton); integer entries are reduced to
 * their square class at parse time.
 */
struct FormExpr {
    enum class Kind { Literal, Hyp, Zero, Repeat, Perp, Tensor, Sym, Ext, Trace, TraceResidue };

    Kind kind = Kind::Zero;
    std::vector<FormExpr> children;            // Perp/Tensor >= 2, Repeat/Sym/Ext exactly 1
    std::vector<SquareClass> literal_entries;  // Literal
    BigInt count = 0;                          // Repeat
    long long power = 0;                       // Sym/Ext
    long long degree = 0;                      // Trace/TraceResidue
    std::optional<std::pair<std::string, std::string>> generators;  // Trace/TraceResidue

    bool operator==(const FormExpr& rhs) const;

    static FormExpr literal(std::vector<SquareClass> entries);
    static FormExpr hyp();
    static FormExpr zero();
    static FormExpr repeat(BigInt count, FormExpr f);
    static FormExpr perp(std::vector<FormExpr> children);
    static FormExpr tensor(std::vector<FormExpr> children);
    static FormExpr sym(long long k, FormExpr f);
    static FormExpr ext(long long k, FormExpr f);
    static FormExpr trace(long long n,
                          std::optional<std::pair<std::string, std::string>> gens = std::nullopt);
    static FormExpr trace_residue(
        long long n, std::optional<std::pair<std::string, std::string>> gens = std::nullopt);
};

/// Throws ParseError. The full input must be consumed.
FormExpr parse_expr(std::string_view text);

/// Canonical rendering; parse_expr(print_expr(e)) == e for every tree this produces.
std::string print_expr(const FormExpr& e);

/// Evaluate to a diagonal form. Domain violations throw std::domain_error.
DiagonalForm evaluate(const FormExpr& e);

}  // namespace qf
