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

#ifndef CHEBX_QUADEXT_HPP
#define CHEBX_QUADEXT_HPP

#include <cstddef>

#include "chebx/chebyshev.hpp"
#include "chebx/rat.hpp"

namespace chebx {

/// Element a + b*s of the quotient ring Q[s]/(s^2 - d), written against a
/// fixed discriminant d. The discriminant stays formal: d may be negative
/// or even a rational square, so the ring is not always a field and
/// inversion checks the norm explicitly. This keeps one uniform code path
/// with no real or complex embedding anywhere.
struct QuadExtElem {
    Rat a;
    Rat b;
    Rat d;

    static QuadExtElem from_rat(const Rat& value, const Rat& d) { return {value, Rat(0), d}; }
    static QuadExtElem sqrt_disc(const Rat& d) { return {Rat(0), Rat(1), d}; }

    bool is_rational() const { return b.is_zero(); }

    friend bool operator==(const QuadExtElem& x, const QuadExtElem& y) {
        return x.d == y.d && x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const QuadExtElem& x, const QuadExtElem& y) { return !(x == y); }
};

/// a^2 - d b^2; multiplicative, and nonzero exactly when the element is
/// invertible.
Rat qe_norm(const QuadExtElem& x);

QuadExtElem qe_add(const QuadExtElem& x, const QuadExtElem& y);
QuadExtElem qe_sub(const QuadExtElem& x, const QuadExtElem& y);
/// (a1 a2 + d b1 b2, a1 b2 + a2 b1). Throws MismatchedDiscriminant when
/// the operands live in different extensions.
QuadExtElem qe_mul(const QuadExtElem& x, const QuadExtElem& y);
/// Conjugate over norm. Throws ZeroDivisor when the norm vanishes (which
/// happens for nonzero elements when d is a rational square).
QuadExtElem qe_inv(const QuadExtElem& x);
/// Binary exponentiation; negative exponents go through qe_inv.
QuadExtElem qe_pow(const QuadExtElem& x, long e);

/// Value of the degree-k polynomial of the given kind at w, computed from
/// the closed forms
///
///   t_k = (r^{2k} + 1) / (2 r^k)
///   u_k = (r^{2k+2} - 1) / (r^k (r^2 - 1))
///
/// where r = w + s in Q[s]/(s^2 - d) with d = w^2 - 1. Every inversion
/// involved has nonzero norm once w is not 1 or -1 (norm r = 1,
/// norm(r -+ 1) = 2(1 -+ w)), so the computation is total on the allowed
/// inputs. The result must come out rational; a surviving s-component
/// throws InternalNonRationalResult since it can only mean broken
/// arithmetic. Throws ExcludedPoint for w in {-1, 1} and UnsupportedKind
/// for the shifted kind.
Rat closed_form_value(ChebKind kind, const Rat& w, std::size_t k);

/// Checks the rotation structure of j = -1/2 + s/2 in Q[s]/(s^2 + 3):
/// j^3 = 1 with j, j^2 != 1, and j^{2n} != -1 over one full period of
/// (j^{2n}), which rules -1/2 out as a root of any T_n.
bool j_power_period();

}  // namespace chebx

#endif  // CHEBX_QUADEXT_HPP
