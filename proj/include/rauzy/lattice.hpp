#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rauzy/bigint.hpp"

namespace rauzy {

using IntVec = std::vector<BigInt>;

// Row Hermite normal form of the lattice generated by `gens` (vectors of length
// n); returns the non-zero rows, upper triangular with positive pivots and
// entries above each pivot reduced into [0, pivot).
std::vector<IntVec> hnf(std::vector<IntVec> gens, int n);

// LLL reduction (delta = 0.99) of the rows of `basis`; returns the unimodular
// transform U with reduced = U * basis and overwrites basis.
std::vector<std::vector<std::int64_t>> lll_reduce(std::vector<std::vector<long double>>& basis);

// Calls `visit` with integer coefficient vectors k such that
// || sum_i k_i basis_i - center ||^2 <= radius2. Stops early when visit returns false.
void enumerate_ball(const std::vector<std::vector<long double>>& basis, const std::vector<long double>& center,
                    long double radius2, const std::function<bool(const std::vector<std::int64_t>&)>& visit);

}  // namespace rauzy
