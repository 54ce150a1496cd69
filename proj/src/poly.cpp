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

#include "zprconv/poly.hpp"

#include <algorithm>

namespace zprconv {

Polynomial::Polynomial(Ring ring, std::vector<uint64_t> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c = ring_->reduce(c);
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(Ring ring, uint64_t c, size_t deg) {
    std::vector<uint64_t> coeffs(deg + 1, 0);
    coeffs[deg] = c;
    return Polynomial(std::move(ring), std::move(coeffs));
}

size_t Polynomial::low_degree() const {
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) return i;
    }
    throw Error("low_degree of the zero polynomial");
}

uint64_t Polynomial::constant_value() const {
    if (!is_constant()) throw NotConstant();
    return coeffs_.empty() ? 0 : coeffs_[0];
}

uint32_t Polynomial::content_valuation() const noexcept {
    uint32_t v = ring_->r();
    for (uint64_t c : coeffs_) v = std::min(v, ring_->valuation(c));
    return v;
}

Polynomial Polynomial::mod_p_project() const {
    Ring fp = make_ring(ring_->p(), 1);
    std::vector<uint64_t> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] % ring_->p();
    return Polynomial(std::move(fp), std::move(out));
}

Polynomial Polynomial::lift_digit0() const {
    std::vector<uint64_t> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] % ring_->p();
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::divide_by_ppow(uint32_t j) const {
    uint64_t q = ring_->ppow(j);
    std::vector<uint64_t> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] % q != 0) throw Error("coefficient not divisible by requested power of p");
        out[i] = coeffs_[i] / q;
    }
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::shifted(size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<uint64_t> out(coeffs_.size() + k, 0);
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + static_cast<ptrdiff_t>(k));
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::scaled(uint64_t c) const {
    std::vector<uint64_t> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = ring_->mul(coeffs_[i], c);
    return Polynomial(ring_, std::move(out));
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    require_same(f.ring_, g.ring_);
    std::vector<uint64_t> out(std::max(f.coeffs_.size(), g.coeffs_.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) out[i] = f.ring_->add(f.coeff(i), g.coeff(i));
    return Polynomial(f.ring_, std::move(out));
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
    require_same(f.ring_, g.ring_);
    std::vector<uint64_t> out(std::max(f.coeffs_.size(), g.coeffs_.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) out[i] = f.ring_->sub(f.coeff(i), g.coeff(i));
    return Polynomial(f.ring_, std::move(out));
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    require_same(f.ring_, g.ring_);
    if (f.is_zero() || g.is_zero()) return Polynomial::zero(f.ring_);
    std::vector<uint64_t> out(f.coeffs_.size() + g.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (f.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < g.coeffs_.size(); ++j) {
            out[i + j] = f.ring_->add(out[i + j], f.ring_->mul(f.coeffs_[i], g.coeffs_[j]));
        }
    }
    return Polynomial(f.ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
    std::vector<uint64_t> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = ring_->neg(coeffs_[i]);
    return Polynomial(ring_, std::move(out));
}

std::string Polynomial::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coeffs_[i]);
    }
    if (coeffs_.empty()) s += "0";
    s += "]";
    return s;
}

std::optional<Polynomial> try_exact_div(const Polynomial& f, const Polynomial& g) {
    require_same(f.ring(), g.ring());
    const Ring& ring = f.ring();
    if (g.is_zero()) return std::nullopt;
    size_t t = g.low_degree();
    if (!ring->is_unit(g.coeff(t))) return std::nullopt;
    if (f.is_zero()) return Polynomial::zero(ring);

    // peel coefficients from the low end; g is regular, so an exact quotient
    // is unique. Leading terms can multiply to zero, so the quotient degree
    // is not capped by deg f - deg g; each p-layer adds at most deg g - t.
    uint64_t lead_inv = ring->inv(g.coeff(t));
    int fdeg = f.degree();
    int gdeg = g.degree();
    if (fdeg < static_cast<int>(t)) return std::nullopt;
    int qbound = (fdeg - static_cast<int>(t)) +
                 static_cast<int>(ring->r() - 1) * (gdeg - static_cast<int>(t));
    std::vector<uint64_t> rem = f.coeffs();
    std::vector<uint64_t> q(static_cast<size_t>(qbound) + 1, 0);
    const std::vector<uint64_t>& gc = g.coeffs();
    size_t lo = 0;
    while (true) {
        while (lo < rem.size() && rem[lo] == 0) ++lo;
        if (lo == rem.size()) break;
        if (lo < t) return std::nullopt;
        size_t qdeg = lo - t;
        if (qdeg >= q.size()) return std::nullopt;
        uint64_t c = ring->mul(rem[lo], lead_inv);
        q[qdeg] = c;
        if (rem.size() < qdeg + gc.size()) rem.resize(qdeg + gc.size(), 0);
        for (size_t i = t; i < gc.size(); ++i) {
            if (gc[i]) rem[qdeg + i] = ring->sub(rem[qdeg + i], ring->mul(c, gc[i]));
        }
    }
    return Polynomial(ring, std::move(q));
}

}  // namespace zprconv
