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

#ifndef ZPRCONV_RATIONAL_HPP
#define ZPRCONV_RATIONAL_HPP

#include <string>
#include <vector>

#include "zprconv/poly.hpp"

namespace zprconv {

/**
 * Rational function over Z_{p^r} with an admissible denominator: the
 * coefficient of the smallest power of D in the denominator is a unit.
 *
 * Such fractions embed in the Laurent series ring Z_{p^r}((D)), and every
 * Laurent-invertible denominator (one that is nonzero mod p) can be brought
 * to admissible form, so the representation is closed under the inversions
 * the library performs.
 *
 * Fractions are not reduced to lowest terms; Z_{p^r}[D] has no usable gcd.
 * Equality is the cross-multiplication relation p q1 = p1 q. Construction
 * still performs cheap hygiene (common D powers stripped, exact divisions
 * taken, zero canonicalized to 0/1) to keep degrees from growing.
 */
class RationalFunction {
   public:
    // canonicalizes; throws ZeroDenominator or NilpotentDenominator
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction zero(const Ring& ring);
    static RationalFunction one(const Ring& ring);
    static RationalFunction constant(const Ring& ring, uint64_t c);
    static RationalFunction from_poly(Polynomial f);

    const Ring& ring() const noexcept { return num_.ring(); }
    const Polynomial& num() const noexcept { return num_; }
    const Polynomial& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_poly() const noexcept { return den_.degree() == 0 && den_.coeff(0) == 1; }
    // requires is_poly()
    const Polynomial& as_poly() const;

    // unit of the Laurent series ring: numerator nonzero mod p
    bool is_unit() const noexcept { return num_.has_unit_coeff(); }
    RationalFunction inverse() const;  // throws NotAUnit

    // p-valuation of the Laurent expansion (denominator is a Laurent unit,
    // so this is the numerator's content valuation); r for the zero element
    uint32_t valuation() const noexcept { return num_.content_valuation(); }
    RationalFunction divide_by_ppow(uint32_t j) const;

    RationalFunction scaled(uint64_t c) const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;

    // the equivalence relation of the fraction ring: num·b.den = b.num·den
    friend bool operator==(const RationalFunction& a, const RationalFunction& b);
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string to_string() const;

   private:
    Polynomial num_;
    Polynomial den_;
    void normalize();
};

RationalFunction make_rational(Polynomial num, Polynomial den);

/** Exact coefficients of a Laurent series element on the window [lo, lo+size). */
struct LaurentWindow {
    Ring ring;
    int lo;
    std::vector<uint64_t> coeffs;

    int hi() const noexcept { return lo + static_cast<int>(coeffs.size()) - 1; }
    uint64_t at(int exponent) const noexcept {
        int idx = exponent - lo;
        return (idx >= 0 && idx < static_cast<int>(coeffs.size())) ? coeffs[static_cast<size_t>(idx)] : 0;
    }
    friend bool operator==(const LaurentWindow& a, const LaurentWindow& b) {
        return a.lo == b.lo && a.coeffs == b.coeffs && a.ring->same(*b.ring);
    }
};

// exact truncation of the Laurent expansion of x to exponents lo..hi
LaurentWindow laurent_expand(const RationalFunction& x, int lo, int hi);

}  // namespace zprconv

#endif
