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

#ifndef CHEBX_ROOTS_HPP
#define CHEBX_ROOTS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "chebx/poly.hpp"

namespace chebx {

/// Sign-normalized primitive remainder sequence p, p', -rem, ... Each
/// element has strictly smaller degree than the one before; for
/// squarefree p the last element is a nonzero constant. The difference in
/// sign variations between two non-root points a < b counts the distinct
/// real roots in (a, b].
struct SturmChain {
    std::vector<IntPoly> polys;

    /// Number of sign changes in the chain evaluated at x (zeros skipped).
    /// Well defined at every rational x; meaningful for root counting when
    /// x is not a root of the first element.
    std::size_t variations(const Rat& x) const;
};

/// True exactly when gcd(p, p') has degree 0, i.e. all roots are simple.
/// Throws ZeroPolynomial for p = 0; pre: degree >= 1.
bool is_squarefree(const IntPoly& p);

/// Builds the chain by repeated pseudo-remainders. Pseudo-division scales
/// by lc^(delta+1), which may be negative; the builder tracks that sign
/// and orients each stored element so it is a *positive* rational multiple
/// of the textbook remainder, then strips the (positive) content. Getting
/// this orientation wrong silently corrupts every count, so it is covered
/// by a dedicated oracle test against a naive rational-arithmetic chain.
/// Throws NotSquarefree / ZeroPolynomial.
SturmChain sturm_chain(const IntPoly& p);

/// Distinct real roots of the chain's polynomial in (a, b], as
/// variations(a) - variations(b). pre: a < b; throws EndpointIsRoot when
/// either endpoint zeroes the first chain element.
std::size_t count_roots(const SturmChain& chain, const Rat& a, const Rat& b);

/// Interval certified to contain exactly one root of a target polynomial:
/// either an open interval (lo, hi) over which the target changes sign, or
/// an exact rational root (lo = hi = exact).
struct IsolInterval {
    Rat lo;
    Rat hi;
    std::optional<Rat> exact;

    bool is_exact() const { return exact.has_value(); }
    Rat width() const { return hi - lo; }
};

/// Isolates every root of squarefree p in (a, b): returns
/// count_roots(p, a, b) pairwise-disjoint intervals in ascending order.
/// Bisection midpoints are tested exactly, so a rational root hit by the
/// dyadic midpoint chain is reported as an exact point and divided out
/// before the two open sides are isolated against the quotient. Starting
/// from dyadic endpoints every emitted bound is dyadic.
/// Throws NotSquarefree, EndpointIsRoot, ZeroPolynomial.
std::vector<IsolInterval> isolate_roots(const IntPoly& p, const Rat& a, const Rat& b);

/// Bisects iv until hi - lo <= width or the midpoint lands exactly on the
/// root. The sign of p at the retained endpoints never changes, so the
/// certificate survives refinement. Exact intervals come back unchanged.
/// pre: iv was produced for p; width > 0.
IsolInterval refine(const IntPoly& p, const IsolInterval& iv, const Rat& width);

}  // namespace chebx

#endif  // CHEBX_ROOTS_HPP
