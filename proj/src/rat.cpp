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

#include "chebx/rat.hpp"

#include <ostream>
#include <stdexcept>

namespace chebx {

Rat::Rat(const Int& num, const Int& den) : q_(num, den) {
    if (sgn(den) == 0) throw std::invalid_argument("rational with zero denominator");
    q_.canonicalize();
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    return Rat(mpq_class(a.q_ / b.q_));
}

bool Rat::is_dyadic() const {
    return mpz_popcount(q_.get_den().get_mpz_t()) == 1;
}

std::string Rat::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat Rat::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text, 10));
        Int num(text.substr(0, slash), 10);
        Int den(text.substr(slash + 1), 10);
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_string();
}

}  // namespace chebx
