#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pte/solution.hpp"

namespace pte {

// One solution per line: `n=<int>; X=(a,b),(a,b),...; Y=(a,b),...`
// Whitespace around separators is ignored and elements may appear in any
// order. An optional `k=<int>;` segment carries a non-ideal claimed degree;
// without it a line claims the ideal degree n-1.
std::vector<PteSolution> parse_solutions(std::string_view text);
PteSolution parse_solution_line(std::string_view line);

std::string emit_solution(const PteSolution& s);
// One line per solution in canonical order (by size, then text), independent
// of the order solutions were found in.
std::string emit_solutions(const std::vector<PteSolution>& list);

// Factored form `(a,b)^e*(c,d)^f` in canonical prime order; "1" for the empty
// product. Parsing accepts an optional leading unit literal such as
// `(0,-1)*...` on claimed-constant data.
std::string format_factored(const GFactorization& f);
GFactorization parse_factored(std::string_view text);

}  // namespace pte
