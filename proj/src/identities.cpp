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

#include "chebx/identities.hpp"

#include <algorithm>
#include <stdexcept>

namespace chebx {

std::string to_string(IdentityId id) {
    switch (id) {
        case IdentityId::Eq1: return "eq1";
        case IdentityId::Eq2: return "eq2";
        case IdentityId::Eq3: return "eq3";
        case IdentityId::Eq4: return "eq4";
        case IdentityId::Eq5: return "eq5";
        case IdentityId::Ode: return "ode";
        case IdentityId::Coprime: return "coprime";
        case IdentityId::ShiftSquare: return "shiftsquare";
    }
    throw std::invalid_argument("unknown identity");
}

IdentityId identity_from_token(const std::string& token) {
    for (IdentityId id : kAllIdentities) {
        if (to_string(id) == token) return id;
    }
    throw std::invalid_argument("unknown identity selector: '" + token + "'");
}

namespace {

const IntPoly& one_minus_x2() {
    static const IntPoly p{Int(1), Int(0), Int(-1)};
    return p;
}

IntPoly residual(IdentityId id, std::size_t n, ChebCache& c) {
    const IntPoly x = IntPoly::x();
    const Int np1(static_cast<unsigned long>(n + 1));
    switch (id) {
        case IdentityId::Eq1:
            return c.first_kind(n + 1) - (c.second_kind(n + 1) - x * c.second_kind(n));
        case IdentityId::Eq2:
            return derivative(c.first_kind(n + 1)) - np1 * c.second_kind(n);
        case IdentityId::Eq3:
            return c.first_kind(n + 2) -
                   (x * c.first_kind(n + 1) - one_minus_x2() * c.second_kind(n));
        case IdentityId::Eq4:
            return one_minus_x2() * derivative(c.first_kind(n + 1)) +
                   np1 * (x * c.first_kind(n + 1) - c.first_kind(n));
        case IdentityId::Eq5:
            return np1 * c.first_kind(n + 1) -
                   (x * c.second_kind(n) - one_minus_x2() * derivative(c.second_kind(n)));
        case IdentityId::Ode: {
            const IntPoly& t = c.first_kind(n);
            const Int n2 = Int(static_cast<unsigned long>(n)) * Int(static_cast<unsigned long>(n));
            return one_minus_x2() * derivative(derivative(t)) - x * derivative(t) + n2 * t;
        }
        case IdentityId::ShiftSquare: {
            const IntPoly x2 = IntPoly::monomial(Int(1), 2);
            return compose(c.shifted_first_kind(n), x2) - c.first_kind(2 * n);
        }
        case IdentityId::Coprime:
            break;  // handled by the caller, not a residual identity
    }
    throw std::invalid_argument("unknown identity");
}

}  // namespace

CheckReport check_identity(IdentityId id, std::size_t n, ChebCache& cache) {
    if (id == IdentityId::Coprime) {
        IntPoly g = gcd_poly(cache.first_kind(n), cache.first_kind(n + 1));
        if (*g.degree() == 0) return {id, n, true, std::nullopt};
        return {id, n, false, std::move(g)};
    }
    IntPoly r = residual(id, n, cache);
    if (r.is_zero()) return {id, n, true, std::nullopt};
    return {id, n, false, std::move(r)};
}

std::vector<CheckReport> run_suite(std::size_t max_n, ChebCache& cache) {
    if (max_n < 1) throw std::invalid_argument("max_n must be >= 1");
    std::vector<CheckReport> reports;
    for (IdentityId id : kAllIdentities) {
        const std::size_t hi = id == IdentityId::ShiftSquare ? (max_n + 1) / 2 : max_n;
        for (std::size_t n = 0; n <= hi; ++n) {
            reports.push_back(check_identity(id, n, cache));
        }
    }
    return reports;
}

bool all_passed(const std::vector<CheckReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const CheckReport& r) { return r.passed; });
}

}  // namespace chebx
