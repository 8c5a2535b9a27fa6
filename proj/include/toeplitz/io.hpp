#pragma once

// JSON input for symbols and JSON output for subset-sum breakdowns.
//   parameter form: {"a": [...], "b": [...], "c": [...], "d": [...]}
//   zero/pole form: {"c0": ..., "r": [...], "rho": [...], "delta": [...]}
// Scalars are strings in the parse_scalar grammar; plain JSON numbers are
// accepted and read exactly from their decimal text.

#include <optional>
#include <string>
#include <string_view>

#include "toeplitz/scalar.hpp"
#include "toeplitz/symbol.hpp"
#include "toeplitz/th_formula.hpp"

namespace toeplitz {

struct SymbolInput {
    std::optional<RationalSymbol<GaussianRational>> bc;
    std::optional<DayForm<GaussianRational>> day;
};

SymbolInput parse_symbol_json(std::string_view text);

// Inline JSON when the source starts with '{', otherwise a file path.
SymbolInput load_symbol(const std::string& source);

std::string symbol_json(const RationalSymbol<GaussianRational>& s);

// [{"S": [1, 3], "T": [1, 2], "value": "..."}, ...] with 1-based positions:
// S indexes E = A + D (a's first), T indexes B.
std::string terms_json(const ThResult<GaussianRational>& r);
std::string terms_json(const ThResult<ComplexFloat>& r);

}  // namespace toeplitz
