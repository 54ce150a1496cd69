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

#ifndef ZPRCONV_RING_HPP
#define ZPRCONV_RING_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "zprconv/errors.hpp"

namespace zprconv {

/**
 * Arithmetic context for the finite chain ring of integers mod p^r.
 *
 * p is prime, so the ideals form the chain (1) > (p) > (p^2) > ... > (p^r) = 0.
 * An element is a unit exactly when p does not divide it, and every element
 * has a unique expansion sum a_i p^i with digits a_i in {0, ..., p-1}.
 *
 * Residues are stored as canonical least non-negative representatives in
 * uint64_t; all reductions are eager, so equality is plain value comparison.
 */
class RingContext {
   public:
    RingContext(uint32_t p, uint32_t r);

    uint32_t p() const noexcept { return p_; }
    uint32_t r() const noexcept { return r_; }
    uint64_t modulus() const noexcept { return modulus_; }

    // p^i for 0 <= i <= r
    uint64_t ppow(uint32_t i) const { return ppow_.at(i); }

    bool same(const RingContext& other) const noexcept { return p_ == other.p_ && r_ == other.r_; }

    uint64_t reduce(uint64_t v) const noexcept { return v % modulus_; }
    uint64_t add(uint64_t a, uint64_t b) const noexcept { return (a + b) % modulus_; }
    uint64_t sub(uint64_t a, uint64_t b) const noexcept { return (a + modulus_ - b) % modulus_; }
    uint64_t neg(uint64_t a) const noexcept { return a == 0 ? 0 : modulus_ - a; }
    uint64_t mul(uint64_t a, uint64_t b) const noexcept {
        // residues below 2^32 multiply without overflow, skipping the
        // 128-bit reduction that dominates otherwise
        if (fits_native_) return (a * b) % modulus_;
        return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % modulus_);
    }
    uint64_t inv(uint64_t a) const;  // throws NotAUnit when p | a

    bool is_unit(uint64_t v) const noexcept { return v % p_ != 0; }

    // largest j in [0, r] with p^j | v; by convention valuation(0) = r
    uint32_t valuation(uint64_t v) const noexcept;

    // digits (a_0, ..., a_{r-1}) of v = sum a_i p^i, each in {0, ..., p-1}
    std::vector<uint32_t> p_adic_digits(uint64_t v) const;

   private:
    uint32_t p_;
    uint32_t r_;
    uint64_t modulus_;
    bool fits_native_ = false;
    std::vector<uint64_t> ppow_;
};

using Ring = std::shared_ptr<const RingContext>;

Ring make_ring(uint32_t p, uint32_t r);

inline void require_same(const Ring& a, const Ring& b) {
    if (!a->same(*b)) throw ContextMismatch();
}

/// A residue tied to its context. Immutable value type.
class RingElem {
   public:
    RingElem(Ring ring, uint64_t value) : ring_(std::move(ring)), value_(ring_->reduce(value)) {}

    uint64_t value() const noexcept { return value_; }
    const Ring& ring() const noexcept { return ring_; }

    bool is_unit() const noexcept { return ring_->is_unit(value_); }
    uint32_t valuation() const noexcept { return ring_->valuation(value_); }
    std::vector<uint32_t> p_adic_digits() const { return ring_->p_adic_digits(value_); }

    RingElem inv() const { return RingElem(ring_, ring_->inv(value_)); }

    friend RingElem operator+(const RingElem& a, const RingElem& b) {
        require_same(a.ring_, b.ring_);
        return RingElem(a.ring_, a.ring_->add(a.value_, b.value_));
    }
    friend RingElem operator-(const RingElem& a, const RingElem& b) {
        require_same(a.ring_, b.ring_);
        return RingElem(a.ring_, a.ring_->sub(a.value_, b.value_));
    }
    friend RingElem operator*(const RingElem& a, const RingElem& b) {
        require_same(a.ring_, b.ring_);
        return RingElem(a.ring_, a.ring_->mul(a.value_, b.value_));
    }
    RingElem operator-() const { return RingElem(ring_, ring_->neg(value_)); }

    friend bool operator==(const RingElem& a, const RingElem& b) {
        return a.ring_->same(*b.ring_) && a.value_ == b.value_;
    }

   private:
    Ring ring_;
    uint64_t value_;
};

}  // namespace zprconv

#endif
