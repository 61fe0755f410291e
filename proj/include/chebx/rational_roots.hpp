/*
   Copyright 2026 The chebx authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CHEBX_RATIONAL_ROOTS_HPP
#define CHEBX_RATIONAL_ROOTS_HPP

#include <cstddef>
#include <vector>

#include "chebx/chebyshev.hpp"
#include "chebx/poly.hpp"
#include "chebx/rat.hpp"

namespace chebx {

/// All rational roots of p, exact and complete by the rational root
/// theorem: after stripping the X^v factor, every candidate
/// +-(divisor of constant term)/(divisor of leading coefficient) in lowest
/// terms is screened by a modular evaluation and survivors are confirmed
/// with exact arithmetic. Returned sorted ascending, each root once (the
/// inputs here are squarefree, so multiplicities are not reported).
/// Divisor enumeration factors by trial division, which is instant for the
/// constants arising here (at most n, and powers of two). Throws
/// ZeroPolynomial.
std::vector<Rat> rational_roots_generic(const IntPoly& p);

/// The classification the suite checks against:
///   T_n:  {0} for odd n, otherwise none
///   U_n:  {0} for odd n, plus {-1/2, 1/2} exactly when n = 2 (mod 3)
///   T*_n: {1/2} for odd n (T*_n(1/2) = T_n(0)), otherwise none
/// pre: n >= 1.
std::vector<Rat> expected_rational_roots(ChebKind kind, std::size_t n);

struct RationalRootReport {
    ChebKind kind;
    std::size_t n;
    std::vector<Rat> computed;  // sorted ascending
    std::vector<Rat> expected;  // sorted ascending
    bool agrees;                // computed == expected, via both search paths
};

/// Runs the generic search twice, once on the raw polynomial and once on
/// its monic transform with the candidates mapped back through the
/// scaling, and compares both against the expected classification. agrees
/// is true only when all three sets coincide. pre: n >= 1.
RationalRootReport cross_check(ChebKind kind, std::size_t n, ChebCache& cache = default_cache());

}  // namespace chebx

#endif  // CHEBX_RATIONAL_ROOTS_HPP
