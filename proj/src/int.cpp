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

#include "chebx/int.hpp"

namespace chebx {

Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return Int(0);
    if (k > n - k) k = n - k;
    Int r = 1;
    // r = n (n-1) ... (n-k+1) / k!, dividing as we go; after multiplying
    // by (n-k+i) the product of i consecutive integers is divisible by i!.
    for (unsigned long i = 1; i <= k; ++i) {
        r *= Int(n - k + i);
        r = exact_quotient(r, Int(i));
    }
    return r;
}

}  // namespace chebx
