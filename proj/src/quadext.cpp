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

#include "chebx/quadext.hpp"

#include "chebx/errors.hpp"

namespace chebx {

namespace {

void require_same_disc(const QuadExtElem& x, const QuadExtElem& y) {
    if (x.d != y.d) throw MismatchedDiscriminant();
}

}  // namespace

Rat qe_norm(const QuadExtElem& x) { return x.a * x.a - x.d * x.b * x.b; }

QuadExtElem qe_add(const QuadExtElem& x, const QuadExtElem& y) {
    require_same_disc(x, y);
    return {x.a + y.a, x.b + y.b, x.d};
}

QuadExtElem qe_sub(const QuadExtElem& x, const QuadExtElem& y) {
    require_same_disc(x, y);
    return {x.a - y.a, x.b - y.b, x.d};
}

QuadExtElem qe_mul(const QuadExtElem& x, const QuadExtElem& y) {
    require_same_disc(x, y);
    return {x.a * y.a + x.d * x.b * y.b, x.a * y.b + y.a * x.b, x.d};
}

QuadExtElem qe_inv(const QuadExtElem& x) {
    const Rat n = qe_norm(x);
    if (n.is_zero()) throw ZeroDivisor();
    return {x.a / n, -x.b / n, x.d};
}

namespace {

QuadExtElem qe_pow_u(const QuadExtElem& x, unsigned long k) {
    QuadExtElem acc = QuadExtElem::from_rat(Rat(1), x.d);
    QuadExtElem base = x;
    while (k > 0) {
        if (k & 1) acc = qe_mul(acc, base);
        base = qe_mul(base, base);
        k >>= 1;
    }
    return acc;
}

}  // namespace

QuadExtElem qe_pow(const QuadExtElem& x, long e) {
    if (e < 0) return qe_pow_u(qe_inv(x), static_cast<unsigned long>(-e));
    return qe_pow_u(x, static_cast<unsigned long>(e));
}

Rat closed_form_value(ChebKind kind, const Rat& w, std::size_t k) {
    if (kind == ChebKind::ShiftedFirstKind) {
        throw UnsupportedKind("closed forms cover the first and second kinds");
    }
    if (w == Rat(1) || w == Rat(-1)) throw ExcludedPoint();

    const Rat d = w * w - Rat(1);
    const QuadExtElem one = QuadExtElem::from_rat(Rat(1), d);
    const QuadExtElem r{w, Rat(1), d};  // root of Y^2 - 2wY + 1 picked as w + s

    const QuadExtElem rk = qe_pow_u(r, static_cast<unsigned long>(k));
    const QuadExtElem r2k = qe_mul(rk, rk);

    QuadExtElem value;
    if (kind == ChebKind::FirstKind) {
        // (r^{2k} + 1) / (2 r^k); norm(2 r^k) = 4 norm(r)^k = 4
        const QuadExtElem num = qe_add(r2k, one);
        QuadExtElem den = rk;
        den.a = den.a * Rat(2);
        den.b = den.b * Rat(2);
        value = qe_mul(num, qe_inv(den));
    } else {
        // (r^{2k+2} - 1) / (r^k (r^2 - 1)); norm(r^2 - 1) = -4d != 0
        const QuadExtElem r2 = qe_mul(r, r);
        const QuadExtElem num = qe_sub(qe_mul(r2k, r2), one);
        const QuadExtElem den = qe_mul(rk, qe_sub(r2, one));
        value = qe_mul(num, qe_inv(den));
    }
    if (!value.is_rational()) throw InternalNonRationalResult();
    return value.a;
}

bool j_power_period() {
    const Rat d(-3);
    const QuadExtElem one = QuadExtElem::from_rat(Rat(1), d);
    const QuadExtElem minus_one = QuadExtElem::from_rat(Rat(-1), d);
    const QuadExtElem j{Rat(-1, 2), Rat(1, 2), d};

    const QuadExtElem j2 = qe_mul(j, j);
    const QuadExtElem j3 = qe_mul(j2, j);
    if (j3 != one) return false;
    if (j == one || j2 == one) return false;
    if (j2 != QuadExtElem{Rat(-1, 2), Rat(-1, 2), d}) return false;
    // (j^{2n}) cycles with period 3, so checking one period rules out -1.
    for (long n = 0; n <= 2; ++n) {
        if (qe_pow(j, 2 * n) == minus_one) return false;
    }
    return true;
}

}  // namespace chebx
