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
#include "zprconv/dual.hpp"
#include "zprconv/oracle.hpp"
#include "zprconv/randomgen.hpp"

using namespace zprconv;

namespace {

PolyMatrix mat(const Ring& ring, std::vector<std::vector<std::vector<uint64_t>>> entries) {
    std::vector<std::vector<Polynomial>> rows;
    for (auto& r : entries) {
        std::vector<Polynomial> row;
        for (auto& c : r) row.emplace_back(ring, c);
        rows.push_back(std::move(row));
    }
    return PolyMatrix::from_rows(ring, std::move(rows));
}

ConvolutionalCode code(const Ring& ring, std::vector<std::vector<std::vector<uint64_t>>> entries) {
    return ConvolutionalCode(mat(ring, std::move(entries)));
}

}  // namespace

TEST_CASE("free dual fixtures") {
    Ring z4 = make_ring(2, 2);

    ConvolutionalCode a = code(z4, {{{1}, {1}}});
    ConvolutionalCode ad = dual_free(a);
    CHECK(code_equal(ad, code(z4, {{{1}, {3}}})));
    CHECK(orthogonality_check(a.generator(), ad.generator()));

    ConvolutionalCode b = code(z4, {{{1, 1}, {0, 1}}});
    ConvolutionalCode bd = dual_free(b);
    CHECK(code_equal(bd, code(z4, {{{0, 3}, {1, 1}}})));
    CHECK(orthogonality_check(b.generator(), bd.generator()));

    ConvolutionalCode full = ConvolutionalCode(PolyMatrix::identity(z4, 3));
    CHECK(dual_free(full).p_dim() == 0);

    CHECK_THROWS_AS(dual_free(code(z4, {{{2}}})), NotFree);
}

TEST_CASE("general dual fixtures") {
    Ring z4 = make_ring(2, 2);

    ConvolutionalCode c = code(z4, {{{1}, {2}}, {{0}, {2}}});
    DualResult d = dual(c);
    CHECK(code_equal(d.dual_code, code(z4, {{{0}, {2}}})));
    CHECK(c.p_dim() + d.dual_code.p_dim() == 4);
    REQUIRE(d.b_components.size() == 2);
    CHECK(d.b_components[0].rows() == 0);
    CHECK(d.b_components[1].rows() == 1);

    ConvolutionalCode two = code(z4, {{{2}}});
    DualResult dt = dual(two);
    CHECK(code_equal(dt.dual_code, two));
    CHECK(two.p_dim() + dt.dual_code.p_dim() == 2);

    DualResult dz = dual(ConvolutionalCode::zero_code(z4, 2));
    CHECK(code_equal(dz.dual_code, ConvolutionalCode::full_space(z4, 2)));

    DualResult df = dual(ConvolutionalCode::full_space(z4, 2));
    CHECK(df.dual_code.p_dim() == 0);
}

TEST_CASE("layer components scale into orthogonal generators") {
    std::mt19937_64 rng(61);
    for (auto [p, r] : {std::pair<uint32_t, uint32_t>{2, 2}, {2, 3}, {3, 2}}) {
        Ring ring = make_ring(p, r);
        for (int t = 0; t < 25; ++t) {
            size_t n = 1 + uniform_below(rng, 3);
            ConvolutionalCode c = random_code(rng, ring, n, 1 + uniform_below(rng, 3), 2);
            DualResult d = dual(c);
            REQUIRE(d.b_components.size() == r);

            const auto& kl = c.k_list();
            size_t s = 0;
            for (size_t ki : kl) s += ki;
            REQUIRE(d.b_components[0].rows() == n - s);
            for (uint32_t j = 1; j < r; ++j) {
                REQUIRE(d.b_components[j].rows() == kl[r - j]);
            }

            for (uint32_t j = 0; j < r; ++j) {
                if (d.b_components[j].rows() == 0) continue;
                REQUIRE(orthogonality_check(c.generator(), d.b_components[j].scaled(ring->ppow(j))));
            }
            REQUIRE(orthogonality_check(c.generator(), d.dual_code.generator()));
        }
    }
}

TEST_CASE("dual dimensions pair up") {
    std::mt19937_64 rng(62);
    for (auto [p, r] : {std::pair<uint32_t, uint32_t>{2, 2}, {2, 3}, {3, 2}}) {
        Ring ring = make_ring(p, r);
        for (int t = 0; t < 30; ++t) {
            size_t n = 1 + uniform_below(rng, 4);
            ConvolutionalCode c = random_code(rng, ring, n, 1 + uniform_below(rng, 4), 2);
            DualResult d = dual(c);
            REQUIRE(c.p_dim() + d.dual_code.p_dim() == n * ring->r());
            REQUIRE(code_equal(dual(d.dual_code).dual_code, c));
        }
    }
}

TEST_CASE("both dual constructions agree on free codes") {
    std::mt19937_64 rng(63);
    for (auto [p, r] : {std::pair<uint32_t, uint32_t>{2, 2}, {3, 2}}) {
        Ring ring = make_ring(p, r);
        int made = 0;
        while (made < 20) {
            size_t n = 1 + uniform_below(rng, 3);
            size_t k = 1 + uniform_below(rng, n);
            ConvolutionalCode c = random_code(rng, ring, n, k, 1);
            if (!c.is_free()) continue;
            ConvolutionalCode via_inverse = dual_free(c);
            DualResult via_diag = dual(c);
            REQUIRE(code_equal(via_inverse, via_diag.dual_code));
            REQUIRE(via_inverse.is_free());
            REQUIRE(via_inverse.k_list()[0] == n - c.k_list()[0]);
            ++made;
        }
    }
}

TEST_CASE("identity report passes on the fixtures") {
    Ring z4 = make_ring(2, 2);

    VerificationReport rep = verify_duality_identities(code(z4, {{{1}, {2}}, {{0}, {2}}}), 12, 7);
    CHECK(rep.all_pass());
    REQUIRE(rep.items.size() == 6);
    CHECK(rep.items[0].name == "p-dimension sum is n*r");
    CHECK(rep.items[1].name == "dual generators exactly orthogonal");
    CHECK(rep.items[2].name == "double dual equals the code");
    // the mixed fixture is not free, so the free-code laws are reported but skipped
    CHECK(!rep.items[3].applicable);
    CHECK(!rep.items[4].applicable);
    CHECK(!rep.items[5].applicable);

    VerificationReport free_rep = verify_duality_identities(code(z4, {{{1, 1}, {0, 1}}}), 12, 7);
    CHECK(free_rep.all_pass());
    for (const auto& item : free_rep.items) CHECK(item.applicable);

    VerificationReport full_rep = verify_duality_identities(ConvolutionalCode::full_space(z4, 2), 6, 1);
    CHECK(full_rep.all_pass());
}

TEST_CASE("identity report across random codes") {
    std::mt19937_64 rng(64);
    for (auto [p, r] : {std::pair<uint32_t, uint32_t>{2, 2}, {2, 3}, {3, 2}}) {
        Ring ring = make_ring(p, r);
        for (int t = 0; t < 10; ++t) {
            size_t n = 1 + uniform_below(rng, 3);
            ConvolutionalCode c = random_code(rng, ring, n, 1 + uniform_below(rng, 3), 1);
            VerificationReport rep = verify_duality_identities(c, 8, rng());
            for (const auto& item : rep.items) {
                INFO(item.name, ": expected ", item.expected, ", actual ", item.actual);
                REQUIRE(item.pass);
            }
        }
    }
}

TEST_CASE("dual against exhaustive block search") {
    Ring z4 = make_ring(2, 2);

    ConvolutionalCode c = code(z4, {{{1}, {2}}, {{0}, {2}}});
    CodewordSet brute = brute_dual_block(c.generator());
    CodewordSet from_dual = enumerate_block_code(dual(c).dual_code.generator());
    CHECK(brute == from_dual);
    CHECK(brute.size() == 2);

    ConvolutionalCode a = code(z4, {{{1}, {1}}});
    CHECK(brute_dual_block(a.generator()) == enumerate_block_code(dual_free(a).generator()));
}
