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

#include "chebx/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace chebx {

namespace {
const Int kZero(0);
}

void IntPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    if (sgn(c) != 0) p.c_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(Int c, std::size_t k) {
    IntPoly p;
    if (sgn(c) != 0) {
        p.c_.assign(k, kZero);
        p.c_.push_back(std::move(c));
    }
    return p;
}

std::optional<std::size_t> IntPoly::degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
}

const Int& IntPoly::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : kZero;
}

const Int& IntPoly::leading() const {
    if (c_.empty()) throw ZeroPolynomial();
    return c_.back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), kZero);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), kZero);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (Int& v : r.c_) v = -v;
    return r;
}

// Schoolbook product. Quadratic, which is fine at the degrees handled
// here; the coefficient sizes dominate anyway.
IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, kZero);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(c));
}

IntPoly operator*(const Int& s, const IntPoly& p) {
    if (sgn(s) == 0 || p.is_zero()) return IntPoly();
    IntPoly r(p);
    for (Int& v : r.c_) v *= s;
    return r;
}

IntPoly derivative(const IntPoly& p) {
    if (p.is_zero() || *p.degree() == 0) return IntPoly();
    std::vector<Int> c(p.coeffs().size() - 1, kZero);
    for (std::size_t k = 1; k < p.coeffs().size(); ++k) c[k - 1] = Int(k) * p.coeffs()[k];
    return IntPoly(std::move(c));
}

IntPoly compose(const IntPoly& p, const IntPoly& q) {
    IntPoly acc;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc * q + IntPoly::constant(p.coeffs()[i]);
    }
    return acc;
}

Int eval_int(const IntPoly& p, const Int& n) {
    Int acc = 0;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc *= n;
        acc += p.coeffs()[i];
    }
    return acc;
}

namespace {

// Homogeneous numerator: sum coeffs[k] num^k den^(deg-k). The value of
// p(num/den) is this over den^deg.
Int homogeneous_value(const IntPoly& p, const Int& num, const Int& den) {
    if (p.is_zero()) return Int(0);
    const auto& c = p.coeffs();
    Int acc = c.back();
    Int den_pow = 1;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        den_pow *= den;
        acc *= num;
        mpz_addmul(acc.get_mpz_t(), c[i].get_mpz_t(), den_pow.get_mpz_t());
    }
    return acc;
}

}  // namespace

Rat eval_rat(const IntPoly& p, const Rat& x) {
    if (p.is_zero()) return Rat(0);
    const Int num = x.num();
    const Int den = x.den();
    Int top = homogeneous_value(p, num, den);
    return Rat(top, pow_int(den, static_cast<unsigned long>(*p.degree())));
}

int sign_at(const IntPoly& p, const Rat& x) {
    if (p.is_zero()) return 0;
    return sgn(homogeneous_value(p, x.num(), x.den()));
}

IntPoly exact_div(const IntPoly& p, const IntPoly& q) {
    if (q.is_zero()) throw ZeroPolynomial();
    if (p.is_zero()) return IntPoly();
    if (*p.degree() < *q.degree()) throw NotDivisible();

    std::vector<Int> rem = p.coeffs();
    const std::size_t dq = *q.degree();
    std::vector<Int> quot(rem.size() - dq, kZero);
    for (std::size_t i = quot.size(); i-- > 0;) {
        Int& head = rem[i + dq];
        if (sgn(head) != 0) {
            if (!divides(q.leading(), head)) throw NotDivisible();
            quot[i] = exact_quotient(head, q.leading());
            for (std::size_t j = 0; j <= dq; ++j) {
                mpz_submul(rem[i + j].get_mpz_t(), quot[i].get_mpz_t(), q.coeffs()[j].get_mpz_t());
            }
        }
        assert(sgn(rem[i + dq]) == 0);
    }
    for (const Int& v : rem) {
        if (sgn(v) != 0) throw NotDivisible();
    }
    return IntPoly(std::move(quot));
}

std::pair<Int, IntPoly> content_primitive(const IntPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    Int content = 0;
    for (const Int& v : p.coeffs()) {
        content = gcd(content, v);
        if (content == 1) break;
    }
    std::vector<Int> c = p.coeffs();
    if (content != 1) {
        for (Int& v : c) v = exact_quotient(v, content);
    }
    return {std::move(content), IntPoly(std::move(c))};
}

IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw ZeroPolynomial();
    if (a.is_zero() || *a.degree() < *b.degree()) return a;

    const std::size_t da = *a.degree();
    const std::size_t db = *b.degree();
    const Int& lb = b.leading();
    std::vector<Int> r = a.coeffs();
    // Eliminates the top term deg a - deg b + 1 times; every step scales
    // the rest of the remainder by lc(b), which realizes the uniform
    // lc(b)^(deg a - deg b + 1) pseudo-division multiplier without ever
    // leaving the integers.
    for (std::size_t top = da;; --top) {
        Int head = std::move(r[top]);
        r[top] = 0;
        for (std::size_t j = 0; j < top; ++j) r[j] *= lb;
        if (sgn(head) != 0) {
            const std::size_t off = top - db;
            for (std::size_t j = 0; j < db; ++j) {
                mpz_submul(r[off + j].get_mpz_t(), head.get_mpz_t(), b.coeffs()[j].get_mpz_t());
            }
        }
        if (top == db) break;
    }
    return IntPoly(std::move(r));
}

IntPoly gcd_poly(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() && q.is_zero()) throw BothZero();

    auto positive_primitive = [](const IntPoly& v) {
        IntPoly prim = content_primitive(v).second;
        return sgn(prim.leading()) < 0 ? -prim : prim;
    };
    if (p.is_zero()) return positive_primitive(q);
    if (q.is_zero()) return positive_primitive(p);

    IntPoly a = content_primitive(p).second;
    IntPoly b = content_primitive(q).second;
    if (*a.degree() < *b.degree()) std::swap(a, b);

    // Primitive pseudo-remainder sequence.
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b);
        a = std::move(b);
        b = r.is_zero() ? std::move(r) : content_primitive(r).second;
    }
    return sgn(a.leading()) < 0 ? -a : a;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Int& v = c_[k];
        if (sgn(v) == 0) continue;
        Int mag = abs(v);
        if (first) {
            if (sgn(v) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(v) < 0 ? " - " : " + ");
        }
        if (mag != 1 || k == 0) os << mag.get_str();
        if (k > 0) {
            if (mag != 1) os << "*";
            os << "X";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace chebx
