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

#include "chebx/chebyshev.hpp"

#include <stdexcept>

namespace chebx {

std::string to_string(ChebKind kind) {
    switch (kind) {
        case ChebKind::FirstKind: return "T";
        case ChebKind::SecondKind: return "U";
        case ChebKind::ShiftedFirstKind: return "Tstar";
    }
    throw std::invalid_argument("unknown kind");
}

namespace {

void extend_ladder(std::deque<IntPoly>& ladder, const IntPoly& p1, std::size_t n) {
    if (ladder.empty()) {
        ladder.push_back(IntPoly::one());
        ladder.push_back(p1);
    }
    const IntPoly two_x = IntPoly::monomial(Int(2), 1);
    while (ladder.size() <= n) {
        const std::size_t k = ladder.size();
        ladder.push_back(two_x * ladder[k - 1] - ladder[k - 2]);
    }
}

}  // namespace

void ChebCache::extend_locked(std::size_t n) {
    extend_ladder(t_, IntPoly::x(), n);
    extend_ladder(u_, IntPoly::monomial(Int(2), 1), n);
}

const IntPoly& ChebCache::first_kind(std::size_t n) {
    std::scoped_lock lock(mu_);
    if (t_.size() <= n) extend_locked(n);
    return t_[n];
}

const IntPoly& ChebCache::second_kind(std::size_t n) {
    std::scoped_lock lock(mu_);
    if (u_.size() <= n) extend_locked(n);
    return u_[n];
}

const IntPoly& ChebCache::shifted_first_kind(std::size_t n) {
    std::scoped_lock lock(mu_);
    if (t_.size() <= n) extend_locked(n);
    const IntPoly shift{Int(-1), Int(2)};  // 2X - 1
    while (ts_.size() <= n) {
        ts_.push_back(compose(t_[ts_.size()], shift));
    }
    return ts_[n];
}

const IntPoly& ChebCache::get(ChebKind kind, std::size_t n) {
    switch (kind) {
        case ChebKind::FirstKind: return first_kind(n);
        case ChebKind::SecondKind: return second_kind(n);
        case ChebKind::ShiftedFirstKind: return shifted_first_kind(n);
    }
    throw std::invalid_argument("unknown kind");
}

void ChebCache::corrupt_first_kind(std::size_t n) {
    first_kind(n);  // make sure the entry exists
    std::scoped_lock lock(mu_);
    std::vector<Int> c = t_[n].coeffs();
    c[0] += 1;
    t_[n] = IntPoly(std::move(c));
}

ChebCache& default_cache() {
    static ChebCache cache;
    return cache;
}

IntPoly gen_recurrence(ChebKind kind, std::size_t n, ChebCache& cache) {
    return cache.get(kind, n);
}

IntPoly gen_closed_form(ChebKind kind, std::size_t n) {
    if (kind == ChebKind::ShiftedFirstKind) {
        throw UnsupportedKind("no closed form for the shifted kind; compose the first kind with 2X - 1");
    }
    if (n == 0) {
        throw UnsupportedKind("closed form defined for n >= 1; use gen_recurrence for n = 0");
    }
    std::vector<Int> c(n + 1, Int(0));
    for (unsigned long k = 0; k <= n / 2; ++k) {
        const unsigned long j = n - 2 * k;  // degree of this term
        Int coeff;
        if (kind == ChebKind::SecondKind) {
            coeff = pow_int(Int(2), j) * binomial(n - k, k);
        } else {
            // (n / (n-k)) C(n-k, k) = C(n-k, k) + C(n-k-1, k-1) keeps the
            // arithmetic integral; the j = 0 term (even n) carries the
            // single exact halving.
            Int pair = binomial(n - k, k);
            if (k >= 1) pair += binomial(n - k - 1, k - 1);
            if (j >= 1) {
                coeff = pow_int(Int(2), j - 1) * pair;
            } else {
                if (!divides(Int(2), pair)) throw NonIntegralCoefficient();
                coeff = exact_quotient(pair, Int(2));
            }
        }
        if (k % 2 == 1) coeff = -coeff;
        c[j] = coeff;
    }
    return IntPoly(std::move(c));
}

namespace {

// p(X / 2^shift_bits) scaled by pre, checking that each resulting
// coefficient stays integral.
IntPoly scale_down(const IntPoly& p, const Int& pre, unsigned long shift_bits) {
    std::vector<Int> c(p.coeffs().size(), Int(0));
    for (std::size_t j = 0; j < c.size(); ++j) {
        Int v = pre * p.coeffs()[j];
        const Int den = pow_int(Int(2), shift_bits * static_cast<unsigned long>(j));
        if (!divides(den, v)) throw NonIntegralCoefficient();
        c[j] = exact_quotient(v, den);
    }
    return IntPoly(std::move(c));
}

}  // namespace

IntPoly monic_transform(ChebKind kind, std::size_t n, ChebCache& cache) {
    if (n == 0) throw std::invalid_argument("monic transform defined for n >= 1");
    const IntPoly& p = cache.get(kind, n);
    IntPoly m;
    switch (kind) {
        case ChebKind::FirstKind: m = scale_down(p, Int(2), 1); break;
        case ChebKind::SecondKind: m = scale_down(p, Int(1), 1); break;
        case ChebKind::ShiftedFirstKind: m = scale_down(p, Int(2), 2); break;
    }
    if (m.is_zero() || m.leading() != 1) throw NonIntegralCoefficient();
    return m;
}

Rat value_at_one(ChebKind kind, std::size_t n, ChebCache& cache) {
    if (kind == ChebKind::ShiftedFirstKind) {
        throw UnsupportedKind("value_at_one covers the first and second kinds");
    }
    return eval_rat(cache.get(kind, n), Rat(1));
}

}  // namespace chebx
