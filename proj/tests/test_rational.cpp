// Copyright 2026 the zprconv authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "zprconv/rational.hpp"

using namespace zprconv;

namespace {

Polynomial rand_poly(std::mt19937_64& rng, const Ring& ring, int max_deg) {
    std::vector<uint64_t> c(static_cast<size_t>(rng() % (max_deg + 1)) + 1);
    for (auto& v : c) v = rng() % ring->modulus();
    return Polynomial(ring, c);
}

// windowed product of two expansions, both taken on [lo, hi]; valid for
// comparing exponents up to hi + lo because nothing lives below lo
LaurentWindow convolve(const LaurentWindow& a, const LaurentWindow& b, int lo, int hi) {
    LaurentWindow out{a.ring, lo, std::vector<uint64_t>(static_cast<size_t>(hi - lo) + 1, 0)};
    for (int k = lo; k <= hi; ++k) {
        uint64_t acc = 0;
        for (int i = a.lo; i <= a.hi(); ++i) {
            acc = a.ring->add(acc, a.ring->mul(a.at(i), b.at(k - i)));
        }
        out.coeffs[static_cast<size_t>(k - lo)] = acc;
    }
    return out;
}

}  // namespace

TEST_CASE("denominators normalize to a power of D") {
    Ring z4 = make_ring(2, 2);
    // 2 + D is a Laurent unit with (2 + D)^2 = D^2, so 1/(2 + D) = (2 + D)/D^2
    RationalFunction x = make_rational(Polynomial::constant(z4, 1), Polynomial(z4, {2, 1}));
    CHECK(x.num() == Polynomial(z4, {2, 1}));
    CHECK(x.den() == Polynomial::monomial(z4, 1, 2));
    CHECK(x * RationalFunction::from_poly(Polynomial(z4, {2, 1})) == RationalFunction::one(z4));
}

TEST_CASE("common factors cancel through equality") {
    Ring z4 = make_ring(2, 2);
    Polynomial f(z4, {1, 1});
    RationalFunction x = make_rational(f, f);
    CHECK(x == RationalFunction::one(z4));
    CHECK(x.is_poly());
    CHECK(x.as_poly() == Polynomial::constant(z4, 1));
    RationalFunction y = make_rational(Polynomial(z4, {0, 1, 1}), Polynomial(z4, {0, 0, 1}));
    // (D + D^2)/D^2 = (1 + D)/D
    CHECK(y.num() == f);
    CHECK(y.den() == Polynomial::monomial(z4, 1, 1));
}

TEST_CASE("bad denominators are rejected") {
    Ring z4 = make_ring(2, 2);
    CHECK_THROWS_AS(make_rational(Polynomial::constant(z4, 1), Polynomial::zero(z4)), ZeroDenominator);
    CHECK_THROWS_AS(make_rational(Polynomial::constant(z4, 1), Polynomial(z4, {0, 2})), NilpotentDenominator);
    CHECK_THROWS_AS(make_rational(Polynomial::constant(z4, 1), Polynomial::constant(z4, 2)), NilpotentDenominator);
}

TEST_CASE("inverses") {
    Ring z4 = make_ring(2, 2);
    RationalFunction three = RationalFunction::constant(z4, 3);
    CHECK(three.inverse() == three);
    RationalFunction x = RationalFunction::from_poly(Polynomial(z4, {2, 1}));
    CHECK(x.inverse() * x == RationalFunction::one(z4));
    CHECK(x.inverse() == make_rational(Polynomial::constant(z4, 1), Polynomial(z4, {2, 1})));
    CHECK_THROWS_AS(RationalFunction::constant(z4, 2).inverse(), NotAUnit);
    CHECK_THROWS_AS(RationalFunction::zero(z4).inverse(), NotAUnit);
}

TEST_CASE("valuation of rationals") {
    Ring z8 = make_ring(2, 3);
    CHECK(RationalFunction::zero(z8).valuation() == 3);
    CHECK(RationalFunction::constant(z8, 4).valuation() == 2);
    RationalFunction x = make_rational(Polynomial(z8, {2, 4}), Polynomial(z8, {1, 1}));
    CHECK(x.valuation() == 1);
    CHECK(x.divide_by_ppow(1) * RationalFunction::constant(z8, 2) == x);
}

TEST_CASE("laurent windows of fixed elements") {
    Ring z4 = make_ring(2, 2);
    RationalFunction x = make_rational(Polynomial(z4, {2, 1}), Polynomial::monomial(z4, 1, 2));
    LaurentWindow w = laurent_expand(x, -2, 1);
    CHECK(w.lo == -2);
    CHECK(w.hi() == 1);
    CHECK(w.coeffs == std::vector<uint64_t>{2, 1, 0, 0});
    CHECK(w.at(-2) == 2);
    CHECK(w.at(5) == 0);

    RationalFunction geo = make_rational(Polynomial::constant(z4, 1), Polynomial(z4, {1, 1}));
    LaurentWindow g = laurent_expand(geo, 0, 3);
    CHECK(g.coeffs == std::vector<uint64_t>{1, 3, 1, 3});
    // multiply the window back by 1 + D and check it telescopes to 1
    LaurentWindow den = laurent_expand(RationalFunction::from_poly(Polynomial(z4, {1, 1})), 0, 3);
    LaurentWindow prod = convolve(g, den, 0, 3);
    CHECK(prod.coeffs == std::vector<uint64_t>{1, 0, 0, 0});

    LaurentWindow cube = laurent_expand(RationalFunction::from_poly(Polynomial::monomial(z4, 1, 3)), 0, 3);
    CHECK(cube.coeffs == std::vector<uint64_t>{0, 0, 0, 1});
}

TEST_CASE("window bounds") {
    Ring z4 = make_ring(2, 2);
    RationalFunction x = RationalFunction::one(z4);
    CHECK_THROWS_AS(laurent_expand(x, 2, 1), Error);
    LaurentWindow w = laurent_expand(x, -3, -1);
    CHECK(w.coeffs == std::vector<uint64_t>{0, 0, 0});
}

TEST_CASE("cross multiplication defines equality") {
    std::mt19937_64 rng(21);
    for (auto [p, r] : {std::pair<uint32_t, uint32_t>{2, 2}, {2, 3}, {3, 2}}) {
        Ring ring = make_ring(p, r);
        int done = 0;
        while (done < 200) {
            Polynomial num = rand_poly(rng, ring, 3);
            Polynomial den = rand_poly(rng, ring, 3);
            if (!den.has_unit_coeff()) continue;
            RationalFunction x = make_rational(num, den);
            // x * den == num, so building the quotient loses nothing
            CHECK(x * RationalFunction::from_poly(den) == RationalFunction::from_poly(num));
            ++done;
        }
    }
}

TEST_CASE("window of a product is the convolution") {
    std::mt19937_64 rng(22);
    Ring z9 = make_ring(3, 2);
    int done = 0;
    while (done < 100) {
        Polynomial na = rand_poly(rng, z9, 3);
        Polynomial da = rand_poly(rng, z9, 3);
        Polynomial nb = rand_poly(rng, z9, 3);
        Polynomial db = rand_poly(rng, z9, 3);
        if (!da.has_unit_coeff() || !db.has_unit_coeff()) continue;
        RationalFunction a = make_rational(na, da);
        RationalFunction b = make_rational(nb, db);
        // every factor lives in D^{-6} Z[[D]], so [-6, 20] windows determine
        // the product coefficients up to degree 8
        LaurentWindow wa = laurent_expand(a, -6, 20);
        LaurentWindow wb = laurent_expand(b, -6, 20);
        LaurentWindow wprod = laurent_expand(a * b, -4, 8);
        LaurentWindow conv = convolve(wa, wb, -4, 8);
        REQUIRE(wprod.coeffs == conv.coeffs);
        ++done;
    }
}

TEST_CASE("inverse round-trips through expansion") {
    std::mt19937_64 rng(23);
    Ring z8 = make_ring(2, 3);
    int done = 0;
    while (done < 100) {
        Polynomial num = rand_poly(rng, z8, 3);
        Polynomial den = rand_poly(rng, z8, 3);
        if (!num.has_unit_coeff() || !den.has_unit_coeff()) continue;
        RationalFunction x = make_rational(num, den);
        RationalFunction prod = x * x.inverse();
        CHECK(prod == RationalFunction::one(z8));
        LaurentWindow w = laurent_expand(prod, -3, 6);
        LaurentWindow one = laurent_expand(RationalFunction::one(z8), -3, 6);
        REQUIRE(w.coeffs == one.coeffs);
        ++done;
    }
}
