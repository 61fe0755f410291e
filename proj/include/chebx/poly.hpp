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

#ifndef CHEBX_POLY_HPP
#define CHEBX_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chebx/errors.hpp"
#include "chebx/int.hpp"
#include "chebx/rat.hpp"

namespace chebx {

/// Dense univariate polynomial over arbitrary-precision integers.
///
/// Coefficients are stored in ascending degree order: coeffs()[k] is the
/// coefficient of X^k. Canonical form is maintained by every operation:
/// the vector is either empty (the zero polynomial) or ends in a nonzero
/// leading coefficient, so equality is plain structural equality.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<Int> coeffs) : c_(coeffs) { trim(); }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly({Int(1)}); }
    static IntPoly x() { return IntPoly({Int(0), Int(1)}); }
    static IntPoly constant(Int c);
    /// c * X^k
    static IntPoly monomial(Int c, std::size_t k);

    bool is_zero() const { return c_.empty(); }
    /// Degree, or nullopt for the zero polynomial (whose degree is not
    /// a number).
    std::optional<std::size_t> degree() const;
    const std::vector<Int>& coeffs() const { return c_; }
    /// Coefficient of X^k; zero beyond the degree.
    const Int& coeff(std::size_t k) const;
    const Int& leading() const;  // pre: nonzero polynomial

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const Int& s, const IntPoly& p);
    friend IntPoly operator*(const IntPoly& p, const Int& s) { return s * p; }

    /// Human-readable form in descending powers, e.g. "8*X^4 - 8*X^2 + 1".
    std::string to_string() const;

  private:
    void trim();
    std::vector<Int> c_;
};

IntPoly derivative(const IntPoly& p);

/// Exact substitution p(q(X)), accumulated Horner-style over the
/// coefficients of p.
IntPoly compose(const IntPoly& p, const IntPoly& q);

/// Exact value p(x). Evaluated homogeneously over the integers as
/// (sum coeffs[k] num^k den^(deg-k)) / den^deg and reduced once at the
/// end, so no intermediate rational normalization happens.
Rat eval_rat(const IntPoly& p, const Rat& x);

/// Exact value p(n) over the integers.
Int eval_int(const IntPoly& p, const Int& n);

/// Sign of p(x) in {-1, 0, +1}, computed from the homogeneous integer
/// value without forming the quotient.
int sign_at(const IntPoly& p, const Rat& x);

/// Quotient s with p = q * s. Integer long division with an explicit
/// failure path: throws NotDivisible as soon as a coefficient step does
/// not divide exactly or a nonzero remainder survives. Throws
/// ZeroPolynomial for q = 0.
IntPoly exact_div(const IntPoly& p, const IntPoly& q);

/// Splits p into (content, primitive part): content > 0, p = content * q,
/// the coefficients of q have gcd 1 and q keeps the sign of p's leading
/// coefficient. Throws ZeroPolynomial for p = 0.
std::pair<Int, IntPoly> content_primitive(const IntPoly& p);

/// Pseudo-remainder of a by b: the remainder of lc(b)^(deg a - deg b + 1)
/// * a divided by b, which stays over the integers. pre: b nonzero.
/// Returns a unchanged when deg a < deg b.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient, computed by the
/// primitive pseudo-remainder sequence (the primitive part is taken after
/// every step, which keeps coefficient growth linear). A degree-0 result
/// (always the constant 1) means the inputs are coprime. Throws BothZero
/// when both inputs vanish.
IntPoly gcd_poly(const IntPoly& p, const IntPoly& q);

}  // namespace chebx

#endif  // CHEBX_POLY_HPP
