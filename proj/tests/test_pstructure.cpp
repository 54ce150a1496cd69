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

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "zprconv/oracle.hpp"
#include "zprconv/pstructure.hpp"
#include "zprconv/randomgen.hpp"

using namespace zprconv;

namespace {

PVector pvec(const Ring& ring, std::vector<std::vector<uint64_t>> comps) {
    PVector v;
    for (auto& c : comps) v.emplace_back(ring, c);
    return v;
}

// evaluate a witness against the generators and compare with w
bool witness_checks_out(const PVector& w, const PSequence& gens, const std::vector<Polynomial>& witness) {
    if (witness.size() != gens.size()) return false;
    PVector acc(w.size(), Polynomial::zero(w[0].ring()));
    for (size_t i = 0; i < gens.size(); ++i) {
        if (!is_digit_polynomial(witness[i])) return false;
        for (size_t j = 0; j < w.size(); ++j) acc[j] = acc[j] + witness[i] * gens[i][j];
    }
    for (size_t j = 0; j < w.size(); ++j) {
        if (acc[j] != w[j]) return false;
    }
    return true;
}

// direct scan over all digit-coefficient tuples, written out against the
// solver; only usable when p^{(bound+1) * #gens} stays tiny
bool scan_membership(const PVector& w, const PSequence& gens, int bound) {
    const Ring& ring = w[0].ring();
    uint64_t p = ring->p();
    size_t slots = gens.size() * static_cast<size_t>(bound + 1);
    uint64_t total = 1;
    for (size_t i = 0; i < slots; ++i) total *= p;
    for (uint64_t idx = 0; idx < total; ++idx) {
        uint64_t rest = idx;
        PVector acc(w.size(), Polynomial::zero(ring));
        for (size_t g = 0; g < gens.size(); ++g) {
            std::vector<uint64_t> coef(static_cast<size_t>(bound + 1));
            for (auto& c : coef) {
                c = rest % p;
                rest /= p;
            }
            Polynomial f(ring, coef);
            for (size_t j = 0; j < w.size(); ++j) acc[j] = acc[j] + f * gens[g][j];
        }
        bool hit = true;
        for (size_t j = 0; j < w.size() && hit; ++j) hit = acc[j] == w[j];
        if (hit) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("digit polynomials") {
    Ring z9 = make_ring(3, 2);
    CHECK(is_digit_polynomial(Polynomial(z9, {1, 2, 0, 2})));
    CHECK(!is_digit_polynomial(Polynomial(z9, {1, 3})));
    CHECK(is_digit_polynomial(Polynomial::zero(z9)));
}

TEST_CASE("span membership fixtures") {
    Ring z4 = make_ring(2, 2);

    PVector w1 = pvec(z4, {{2}, {2}});
    PSequence g1 = {pvec(z4, {{1}, {1}})};
    MembershipResult m1 = p_span_membership(w1, g1, 0);
    CHECK(!m1.member);
    CHECK(scan_membership(w1, g1, 0) == false);

    PSequence g2 = {pvec(z4, {{1}, {1}}), pvec(z4, {{2}, {2}})};
    PVector w2 = pvec(z4, {{3}, {3}});
    MembershipResult m2 = p_span_membership(w2, g2, 0);
    CHECK(m2.member);
    CHECK(witness_checks_out(w2, g2, m2.witness));
    CHECK(m2.witness[0] == Polynomial::constant(z4, 1));
    CHECK(m2.witness[1] == Polynomial::constant(z4, 1));

    PVector zero = pvec(z4, {{0}, {0}});
    MembershipResult m3 = p_span_membership(zero, g2, 0);
    CHECK(m3.member);
    for (const auto& f : m3.witness) CHECK(f.is_zero());
}

TEST_CASE("membership needs room for the inputs") {
    Ring z4 = make_ring(2, 2);
    PSequence gens = {pvec(z4, {{0, 1}})};
    CHECK_THROWS_AS(p_span_membership(pvec(z4, {{1}}), gens, 0), BoundTooSmall);
    CHECK_THROWS_AS(p_span_membership(pvec(z4, {{0, 0, 1}}), gens, 1), BoundTooSmall);
    CHECK_THROWS_AS(p_span_membership(pvec(z4, {{1}}), gens, -1), BoundTooSmall);
}

TEST_CASE("membership agrees with the exhaustive scan") {
    std::mt19937_64 rng(41);
    Ring z4 = make_ring(2, 2);
    for (int t = 0; t < 120; ++t) {
        size_t n = 1 + uniform_below(rng, 2);
        size_t k = 1 + uniform_below(rng, 3);
        int bound = static_cast<int>(uniform_below(rng, 2));
        PSequence gens;
        for (size_t i = 0; i < k; ++i) gens.push_back(random_pvector(rng, z4, n, bound));
        PVector w = random_pvector(rng, z4, n, bound);
        MembershipResult got = p_span_membership(w, gens, bound);
        REQUIRE(got.member == scan_membership(w, gens, bound));
        if (got.member) REQUIRE(witness_checks_out(w, gens, got.witness));
    }
}

TEST_CASE("generator sequence fixtures") {
    Ring z4 = make_ring(2, 2);
    CHECK(!is_p_generator_sequence({pvec(z4, {{1}, {1}})}));
    CHECK(is_p_generator_sequence({pvec(z4, {{1}, {1}}), pvec(z4, {{2}, {2}})}));
    CHECK(is_p_generator_sequence({pvec(z4, {{2}, {2}})}));
    CHECK(is_p_generator_sequence({}));
}

TEST_CASE("expansion interleaves the p multiples") {
    Ring z4 = make_ring(2, 2);

    PSequence e1 = expand_to_p_generator_sequence({pvec(z4, {{1}, {1}})});
    REQUIRE(e1.size() == 2);
    CHECK(e1[0] == pvec(z4, {{1}, {1}}));
    CHECK(e1[1] == pvec(z4, {{2}, {2}}));

    PSequence e2 = expand_to_p_generator_sequence({pvec(z4, {{1}, {0}}), pvec(z4, {{0}, {1}})});
    REQUIRE(e2.size() == 4);
    CHECK(e2[0] == pvec(z4, {{1}, {0}}));
    CHECK(e2[1] == pvec(z4, {{2}, {0}}));
    CHECK(e2[2] == pvec(z4, {{0}, {1}}));
    CHECK(e2[3] == pvec(z4, {{0}, {2}}));

    PSequence e3 = expand_to_p_generator_sequence({pvec(z4, {{2}, {0}})});
    REQUIRE(e3.size() == 2);
    CHECK(e3[0] == pvec(z4, {{2}, {0}}));
    CHECK(vec_is_zero(e3[1]));
    CHECK(expand_to_p_generator_sequence({pvec(z4, {{2}, {0}})}, true).size() == 1);
}

TEST_CASE("expansions validate as generator sequences") {
    std::mt19937_64 rng(42);
    for (auto [p, r] : {std::pair<uint32_t, uint32_t>{2, 2}, {2, 3}, {3, 2}}) {
        Ring ring = make_ring(p, r);
        for (int t = 0; t < 40; ++t) {
            size_t n = 1 + uniform_below(rng, 3);
            size_t k = 1 + uniform_below(rng, 3);
            PSequence gens;
            for (size_t i = 0; i < k; ++i) gens.push_back(random_pvector(rng, ring, n, 2));
            CHECK(is_p_generator_sequence(expand_to_p_generator_sequence(gens)));
            CHECK(is_p_generator_sequence(expand_to_p_generator_sequence(gens, true)));
        }
    }
}

TEST_CASE("independence fixtures") {
    Ring z4 = make_ring(2, 2);
    CHECK(is_p_linearly_independent({pvec(z4, {{1}, {1}}), pvec(z4, {{2}, {2}})}, 0));
    CHECK(!is_p_linearly_independent({pvec(z4, {{2}, {0}}), pvec(z4, {{2}, {0}})}, 0));
    CHECK(is_p_linearly_independent({}, 0));
    CHECK(!is_p_linearly_independent({pvec(z4, {{0}, {0}})}, 0));
}

TEST_CASE("independence agrees with a direct scan for nonzero kernels") {
    std::mt19937_64 rng(43);
    Ring z4 = make_ring(2, 2);
    for (int t = 0; t < 120; ++t) {
        size_t n = 1 + uniform_below(rng, 2);
        size_t k = 1 + uniform_below(rng, 3);
        int bound = static_cast<int>(uniform_below(rng, 2));
        PSequence seq;
        for (size_t i = 0; i < k; ++i) seq.push_back(random_pvector(rng, z4, n, bound));
        // dependent exactly when some nonzero digit tuple reaches zero,
        // which is membership of zero minus the trivial witness
        uint64_t p = z4->p();
        size_t slots = k * static_cast<size_t>(bound + 1);
        uint64_t total = 1;
        for (size_t i = 0; i < slots; ++i) total *= p;
        bool dependent = false;
        for (uint64_t idx = 1; idx < total && !dependent; ++idx) {
            uint64_t rest = idx;
            PVector acc(n, Polynomial::zero(z4));
            for (size_t g = 0; g < k; ++g) {
                std::vector<uint64_t> coef(static_cast<size_t>(bound + 1));
                for (auto& c : coef) {
                    c = rest % p;
                    rest /= p;
                }
                Polynomial f(z4, coef);
                for (size_t j = 0; j < n; ++j) acc[j] = acc[j] + f * seq[g][j];
            }
            dependent = vec_is_zero(acc);
        }
        REQUIRE(is_p_linearly_independent(seq, bound) == !dependent);
    }
}

TEST_CASE("dimension formula fixtures") {
    CHECK(p_dimension_formula({1, 1}) == 3);
    CHECK(p_dimension_formula({2, 0, 0}) == 6);
    CHECK(p_dimension_formula({0, 0}) == 0);
    CHECK(p_dimension_formula({}) == 0);
    CHECK(p_dimension_formula({0, 0, 2}) == 2);
}

TEST_CASE("spans are closed under addition and scaling") {
    std::mt19937_64 rng(44);
    Ring z4 = make_ring(2, 2);
    for (int t = 0; t < 20; ++t) {
        size_t n = 1 + uniform_below(rng, 2);
        PSequence gens = {random_pvector(rng, z4, n, 1), random_pvector(rng, z4, n, 1)};
        PSequence seq = expand_to_p_generator_sequence(gens, true);
        if (seq.empty()) continue;
        int bound = 1;
        auto words = brute_p_span(seq, bound);
        auto in_span = [&](const std::vector<uint64_t>& w) {
            return std::binary_search(words.begin(), words.end(), w);
        };
        for (int probe = 0; probe < 30; ++probe) {
            const auto& a = words[uniform_below(rng, words.size())];
            const auto& b = words[uniform_below(rng, words.size())];
            std::vector<uint64_t> sum(a.size());
            for (size_t i = 0; i < a.size(); ++i) sum[i] = z4->add(a[i], b[i]);
            REQUIRE(in_span(sum));
            uint64_t lambda = uniform_below(rng, z4->modulus());
            std::vector<uint64_t> sc(a.size());
            for (size_t i = 0; i < a.size(); ++i) sc[i] = z4->mul(a[i], lambda);
            REQUIRE(in_span(sc));
        }
    }
}

TEST_CASE("p-encoder length is stable under generator reordering") {
    std::mt19937_64 rng(45);
    Ring z9 = make_ring(3, 2);
    for (int t = 0; t < 20; ++t) {
        size_t n = 1 + uniform_below(rng, 2);
        size_t k = 2 + uniform_below(rng, 2);
        PSequence gens;
        for (size_t i = 0; i < k; ++i) gens.push_back(random_pvector(rng, z9, n, 1));
        PSequence shuffled = gens;
        std::reverse(shuffled.begin(), shuffled.end());
        CHECK(expand_to_p_generator_sequence(gens, true).size() ==
              expand_to_p_generator_sequence(shuffled, true).size());
    }
}
