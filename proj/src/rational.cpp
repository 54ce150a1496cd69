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

#include "zprconv/rational.hpp"

#include <algorithm>

namespace zprconv {

namespace {

// strip a common power of D from both parts; both stay polynomials
void strip_common_d(Polynomial& num, Polynomial& den) {
    if (num.is_zero()) return;
    size_t m = std::min(num.low_degree(), den.low_degree());
    if (m == 0) return;
    auto drop = [m](const Polynomial& f) {
        std::vector<uint64_t> c(f.coeffs().begin() + static_cast<ptrdiff_t>(m), f.coeffs().end());
        return Polynomial(f.ring(), std::move(c));
    };
    num = drop(num);
    den = drop(den);
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    require_same(num_.ring(), den_.ring());
    if (den_.is_zero()) throw ZeroDenominator();
    if (!den_.has_unit_coeff()) throw NilpotentDenominator();

    const Ring& ring = num_.ring();
    if (!ring->is_unit(den_.coeff(den_.low_degree()))) {
        // den = u + p·m with u the digit-0 lift (nonzero since den has a unit
        // coefficient). With s = sum_{j<r} (-1)^j u^{r-1-j} (pm)^j the product
        // den·s telescopes to u^r, whose lowest coefficient is a unit. (pm)^r
        // vanishes, so the sum is exact.
        Polynomial u = den_.lift_digit0();
        Polynomial pm = den_ - u;
        Polynomial s = Polynomial::zero(ring);
        Polynomial upow = Polynomial::constant(ring, 1);
        std::vector<Polynomial> upows;
        for (uint32_t j = 0; j < ring->r(); ++j) {
            upows.push_back(upow);
            upow = upow * u;
        }
        Polynomial pmpow = Polynomial::constant(ring, 1);
        for (uint32_t j = 0; j < ring->r(); ++j) {
            Polynomial term = upows[ring->r() - 1 - j] * pmpow;
            s = (j % 2 == 0) ? s + term : s - term;
            pmpow = pmpow * pm;
        }
        num_ = num_ * s;
        den_ = den_ * s;
    }
    normalize();
}

void RationalFunction::normalize() {
    const Ring& ring = num_.ring();
    if (num_.is_zero()) {
        den_ = Polynomial::constant(ring, 1);
        return;
    }
    strip_common_d(num_, den_);
    if (den_.degree() == 0) {
        // constant unit denominator: fold it into the numerator
        if (den_.coeff(0) != 1) {
            num_ = num_.scaled(ring->inv(den_.coeff(0)));
            den_ = Polynomial::constant(ring, 1);
        }
        return;
    }
    if (auto q = try_exact_div(num_, den_)) {
        num_ = *q;
        den_ = Polynomial::constant(ring, 1);
    }
}

RationalFunction RationalFunction::zero(const Ring& ring) {
    return from_poly(Polynomial::zero(ring));
}

RationalFunction RationalFunction::one(const Ring& ring) {
    return from_poly(Polynomial::constant(ring, 1));
}

RationalFunction RationalFunction::constant(const Ring& ring, uint64_t c) {
    return from_poly(Polynomial::constant(ring, c));
}

RationalFunction RationalFunction::from_poly(Polynomial f) {
    Polynomial one = Polynomial::constant(f.ring(), 1);
    return RationalFunction(std::move(f), std::move(one));
}

const Polynomial& RationalFunction::as_poly() const {
    if (!is_poly()) throw Error("rational function is not a polynomial");
    return num_;
}

RationalFunction RationalFunction::inverse() const {
    if (!is_unit()) throw NotAUnit("rational function vanishes mod p, not a Laurent unit");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::divide_by_ppow(uint32_t j) const {
    return RationalFunction(num_.divide_by_ppow(j), den_);
}

RationalFunction RationalFunction::scaled(uint64_t c) const {
    return RationalFunction(num_.scaled(c), den_);
}

namespace {

// num/(b·d) with one factor cancelled when it divides num; elimination
// produces such pairs constantly, and dropping the factor here is what
// keeps entry degrees from compounding across pivots
RationalFunction over_product(Polynomial num, const Polynomial& b, const Polynomial& d) {
    if (auto q = try_exact_div(num, b)) return RationalFunction(std::move(*q), d);
    if (auto q = try_exact_div(num, d)) return RationalFunction(std::move(*q), b);
    return RationalFunction(std::move(num), b * d);
}

}  // namespace

// Denominators coming out of elimination chains usually coincide or divide
// one another; checking for that before cross-multiplying keeps their
// degrees from compounding through long sums and products.
RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    if (auto q = try_exact_div(b.den_, a.den_)) {
        return RationalFunction(a.num_ * *q + b.num_, b.den_);
    }
    if (auto q = try_exact_div(a.den_, b.den_)) {
        return RationalFunction(a.num_ + b.num_ * *q, a.den_);
    }
    return over_product(a.num_ * b.den_ + b.num_ * a.den_, a.den_, b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
    if (auto q = try_exact_div(b.den_, a.den_)) {
        return RationalFunction(a.num_ * *q - b.num_, b.den_);
    }
    if (auto q = try_exact_div(a.den_, b.den_)) {
        return RationalFunction(a.num_ - b.num_ * *q, a.den_);
    }
    return over_product(a.num_ * b.den_ - b.num_ * a.den_, a.den_, b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (auto q = try_exact_div(a.num_, b.den_)) {
        return RationalFunction(*q * b.num_, a.den_);
    }
    if (auto q = try_exact_div(b.num_, a.den_)) {
        return RationalFunction(a.num_ * *q, b.den_);
    }
    return over_product(a.num_ * b.num_, a.den_, b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (!b.is_unit()) throw NotAUnit("division by a non-unit rational function");
    return a * RationalFunction(b.den_, b.num_);
}

RationalFunction RationalFunction::operator-() const {
    return RationalFunction(-num_, den_);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    if (!a.ring()->same(*b.ring())) return false;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalFunction::to_string() const {
    if (is_poly()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

RationalFunction make_rational(Polynomial num, Polynomial den) {
    return RationalFunction(std::move(num), std::move(den));
}

LaurentWindow laurent_expand(const RationalFunction& x, int lo, int hi) {
    if (lo > hi) throw Error("empty expansion window");
    const Ring& ring = x.ring();
    LaurentWindow w{ring, lo, std::vector<uint64_t>(static_cast<size_t>(hi - lo + 1), 0)};
    if (x.is_zero()) return w;

    // x = (num / d) · D^{-t} with d = den >> t a power series of unit
    // constant term; divide as ascending series up to order hi + t
    const Polynomial& den = x.den();
    size_t t = den.low_degree();
    if (hi + static_cast<int>(t) < 0) return w;
    size_t order = static_cast<size_t>(hi + static_cast<int>(t));
    uint64_t d0_inv = ring->inv(den.coeff(t));
    std::vector<uint64_t> c(order + 1, 0);
    for (size_t j = 0; j <= order; ++j) {
        uint64_t acc = x.num().coeff(j);
        for (size_t i = 1; i <= j; ++i) {
            acc = ring->sub(acc, ring->mul(den.coeff(t + i), c[j - i]));
        }
        c[j] = ring->mul(acc, d0_inv);
    }
    for (int e = lo; e <= hi; ++e) {
        int idx = e + static_cast<int>(t);
        if (idx >= 0) w.coeffs[static_cast<size_t>(e - lo)] = c[static_cast<size_t>(idx)];
    }
    return w;
}

}  // namespace zprconv
