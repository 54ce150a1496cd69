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

#ifndef ZPRCONV_POLY_HPP
#define ZPRCONV_POLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "zprconv/ring.hpp"

namespace zprconv {

/**
 * Polynomial over Z_{p^r} in the delay variable D.
 *
 * Coefficients are stored by ascending degree and kept trimmed: the zero
 * polynomial is the empty sequence, and a nonzero polynomial never has a
 * zero leading coefficient. This makes equality a plain vector comparison.
 */
class Polynomial {
   public:
    Polynomial(Ring ring, std::vector<uint64_t> coeffs);

    static Polynomial zero(Ring ring) { return Polynomial(std::move(ring), {}); }
    static Polynomial constant(Ring ring, uint64_t c) { return Polynomial(std::move(ring), {c}); }
    static Polynomial monomial(Ring ring, uint64_t c, size_t deg);

    const Ring& ring() const noexcept { return ring_; }
    const std::vector<uint64_t>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    // smallest exponent with nonzero coefficient; requires a nonzero polynomial
    size_t low_degree() const;
    uint64_t coeff(size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    uint64_t constant_value() const;  // throws NotConstant when degree > 0

    // smallest p-valuation over all coefficients; r for the zero polynomial
    uint32_t content_valuation() const noexcept;
    // true when some coefficient is a unit, i.e. the mod-p image is nonzero
    bool has_unit_coeff() const noexcept { return content_valuation() == 0; }

    Polynomial mod_p_project() const;           // image in Z_p[D]
    Polynomial lift_digit0() const;             // coefficient-wise lowest p-adic digit, same ring
    Polynomial divide_by_ppow(uint32_t j) const;  // exact; requires content_valuation() >= j
    Polynomial shifted(size_t k) const;         // multiply by D^k
    Polynomial scaled(uint64_t c) const;

    friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& f, const Polynomial& g) {
        return f.ring_->same(*g.ring_) && f.coeffs_ == g.coeffs_;
    }
    friend bool operator!=(const Polynomial& f, const Polynomial& g) { return !(f == g); }

    // ascending coefficient list, e.g. "[1,0,3]" for 1 + 3D^2
    std::string to_string() const;

   private:
    Ring ring_;
    std::vector<uint64_t> coeffs_;
};

/**
 * Quotient of f by g when it divides exactly in Z_{p^r}[D]; empty otherwise.
 * g must have a unit trailing coefficient (then g is regular, so the quotient
 * is unique and can be computed ascending from the lowest degree).
 */
std::optional<Polynomial> try_exact_div(const Polynomial& f, const Polynomial& g);

}  // namespace zprconv

#endif
