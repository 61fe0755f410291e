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

#ifndef CHEBX_IDENTITIES_HPP
#define CHEBX_IDENTITIES_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chebx/chebyshev.hpp"
#include "chebx/poly.hpp"

namespace chebx {

/// The fixed catalogue of identities the suite verifies, each as an exact
/// equality in the polynomial ring (never a sampled evaluation):
///
///   Eq1          T_{n+1} = U_{n+1} - X U_n
///   Eq2          T'_{n+1} = (n+1) U_n
///   Eq3          T_{n+2} = X T_{n+1} - (1 - X^2) U_n
///   Eq4          (1 - X^2) T'_{n+1} + (n+1)(X T_{n+1} - T_n) = 0
///   Eq5          (n+1) T_{n+1} = X U_n - (1 - X^2) U'_n
///   Ode          (1 - X^2) T''_n - X T'_n + n^2 T_n = 0
///   Coprime      gcd(T_n, T_{n+1}) has degree 0
///   ShiftSquare  T*_n(X^2) = T_{2n}
enum class IdentityId { Eq1, Eq2, Eq3, Eq4, Eq5, Ode, Coprime, ShiftSquare };

inline constexpr std::array<IdentityId, 8> kAllIdentities = {
    IdentityId::Eq1, IdentityId::Eq2, IdentityId::Eq3,  IdentityId::Eq4,
    IdentityId::Eq5, IdentityId::Ode, IdentityId::Coprime, IdentityId::ShiftSquare,
};

std::string to_string(IdentityId id);
/// Inverse of to_string (lower-case selector tokens: "eq1" .. "shiftsquare");
/// throws std::invalid_argument on unknown tokens.
IdentityId identity_from_token(const std::string& token);

struct CheckReport {
    IdentityId identity;
    std::size_t index;
    bool passed;
    /// Nonzero residual (or non-constant gcd) left behind by a failed
    /// check; absent exactly when passed.
    std::optional<IntPoly> witness;
};

/// Evaluates one identity at one index. Residual identities report the
/// left-minus-right polynomial as witness on failure; Coprime reports the
/// offending gcd.
CheckReport check_identity(IdentityId id, std::size_t n, ChebCache& cache = default_cache());

/// Runs every identity for n in [0, max_n]; ShiftSquare runs for
/// n in [0, ceil(max_n / 2)] so the T_{2n} side stays within the ladder
/// the other identities already need. Report order is deterministic:
/// identities in catalogue order, indices ascending. pre: max_n >= 1.
std::vector<CheckReport> run_suite(std::size_t max_n, ChebCache& cache = default_cache());

bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace chebx

#endif  // CHEBX_IDENTITIES_HPP
