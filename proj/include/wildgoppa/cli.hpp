#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wildgoppa/codes.hpp"

namespace wildgoppa {

struct TableCell {
    std::uint64_t q = 0;
    unsigned t = 0;              // degree of g
    std::uint64_t exponent = 0;  // G = g^exponent
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t designed_distance = 0;
    std::optional<std::size_t> min_distance;  // exact, when enumeration fits the budget
};

/// Gamma(F_{q^2}, g^(q+1)) with g the first irreducible of degree t, for
/// q in {5, 7, 8, 9} and 3 <= t <= q - 2, in (q, t) order.
std::vector<TableCell> build_table1(std::uint64_t budget, unsigned jobs);
/// Gamma(F_{q^3} \ {0}, x^(q^2+q+1)) and Gamma(F_{q^3} \ {0}, x^(q^2+q)) for
/// q in {4, 5, 7, 8}, in (q, exponent descending) order.
std::vector<TableCell> build_table2(std::uint64_t budget, unsigned jobs);

/// Field triple (p, a, m) used for F_{q^m} in the tables.
struct TowerParams {
    unsigned p, a, m;
};
TowerParams tower_for(std::uint64_t q, unsigned m);

enum ExitCode : int { kExitOk = 0, kExitInput = 2, kExitFalsified = 3, kExitBudget = 4 };

/// Entry point of the goppa command line tool. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wildgoppa
