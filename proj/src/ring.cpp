/*
   Copyright 2026 the zprconv authors

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

#include "zprconv/ring.hpp"

#include <string>

namespace zprconv {

namespace {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace

RingContext::RingContext(uint32_t p, uint32_t r) : p_(p), r_(r) {
    if (p > (1u << 16)) throw ParseError("p must be at most 2^16, got " + std::to_string(p));
    if (!is_prime(p)) throw ParseError("p must be prime, got " + std::to_string(p));
    if (r < 1) throw ParseError("r must be at least 1");
    constexpr uint64_t limit = uint64_t{1} << 62;  // p^r < 2^63
    uint64_t m = 1;
    ppow_.reserve(r + 1);
    ppow_.push_back(1);
    for (uint32_t i = 0; i < r; ++i) {
        if (m > limit / p) throw ParseError("p^r does not fit in 63 bits (r too large)");
        m *= p;
        ppow_.push_back(m);
    }
    modulus_ = m;
    fits_native_ = modulus_ <= (uint64_t{1} << 32);
}

uint64_t RingContext::inv(uint64_t a) const {
    a %= modulus_;
    if (!is_unit(a)) throw NotAUnit("cannot invert " + std::to_string(a) + " mod " + std::to_string(modulus_));
    // extended Euclid on (a, p^r); gcd is 1 because a is a unit
    int64_t old_s = 1, s = 0;
    uint64_t old_t = a, t = modulus_;
    while (t != 0) {
        uint64_t q = old_t / t;
        uint64_t tmp = old_t - q * t;
        old_t = t;
        t = tmp;
        int64_t stmp = old_s - static_cast<int64_t>(q) * s;
        old_s = s;
        s = stmp;
    }
    int64_t res = old_s % static_cast<int64_t>(modulus_);
    if (res < 0) res += static_cast<int64_t>(modulus_);
    return static_cast<uint64_t>(res);
}

uint32_t RingContext::valuation(uint64_t v) const noexcept {
    v %= modulus_;
    if (v == 0) return r_;
    uint32_t j = 0;
    while (v % p_ == 0) {
        v /= p_;
        ++j;
    }
    return j;
}

std::vector<uint32_t> RingContext::p_adic_digits(uint64_t v) const {
    v %= modulus_;
    std::vector<uint32_t> digits(r_);
    for (uint32_t i = 0; i < r_; ++i) {
        digits[i] = static_cast<uint32_t>(v % p_);
        v /= p_;
    }
    return digits;
}

Ring make_ring(uint32_t p, uint32_t r) { return std::make_shared<const RingContext>(p, r); }

}  // namespace zprconv
