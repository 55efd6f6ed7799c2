// SPDX-License-Identifier: Apache-2.0
// Brute-force reference results for the test suites. Everything here
// enumerates integer tuples directly in 64-bit arithmetic and never calls
// into the interval or propagation code under test.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

// Inclusive finite interval for enumeration.
struct Range {
  std::int64_t lo;
  std::int64_t hi;
  bool empty() const { return lo > hi; }
};

// Exact member set of X op Y for op in {+,-,*}; sorted ascending.
std::vector<std::int64_t> add_set(Range x, Range y);
std::vector<std::int64_t> sub_set(Range x, Range y);
std::vector<std::int64_t> mul_set(Range x, Range y);

// {u | exists x in X, y in Y with u*y = x}, probed over [ulo..uhi].
std::vector<std::int64_t> div_set(Range x, Range y, std::int64_t ulo,
                                  std::int64_t uhi);

// {x^n | x in X} and {v | v^n in X} (latter probed over [vlo..vhi]).
std::vector<std::int64_t> pow_set(Range x, unsigned n);
std::vector<std::int64_t> root_set(Range x, unsigned n, std::int64_t vlo,
                                   std::int64_t vhi);

std::optional<std::pair<std::int64_t, std::int64_t>> hull(
    const std::vector<std::int64_t>& s);

// --- benchmark solution sets ------------------------------------------------

// (x1, x2, x3, x4, n): four different positive cubes summing to n <= 1000.
std::vector<std::array<std::int64_t, 5>> cubes_solutions();

// (A..I): the fractions puzzle over distinct nonzero digits.
std::vector<std::array<std::int64_t, 9>> fractions_solutions();

// (b, T, O, K, Y): KYOTO*3 = TOKYO in base b, 2 <= b <= 100, digits < b,
// K,T nonzero, letters pairwise distinct.
std::vector<std::array<std::int64_t, 5>> kyoto_solutions();

// Maximum of 2xy - z subject to x^3 + y^2 = z^3 over [1..hi]^3.
std::optional<std::int64_t> opt_max(std::int64_t hi);

}  // namespace oracle
