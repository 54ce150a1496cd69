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

#include "zprconv/dual.hpp"

#include <string>
#include <utility>

#include "zprconv/errors.hpp"
#include "zprconv/randomgen.hpp"

namespace zprconv {
namespace {

// selected columns of m, transposed into rows
RationalMatrix columns_as_rows(const RationalMatrix& m, const std::vector<size_t>& idx) {
    RationalMatrix out(m.ring(), idx.size(), m.rows());
    for (size_t t = 0; t < idx.size(); ++t)
        for (size_t j = 0; j < m.rows(); ++j) out.at(t, j) = m.at(j, idx[t]);
    return out;
}

ConvolutionalCode scaled_full_space(const Ring& ring, size_t n, uint32_t i) {
    return ConvolutionalCode::full_space(ring, n).scaled_by_ppow(i);
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

CheckItem not_applicable(std::string name, std::string why) {
    CheckItem c;
    c.name = std::move(name);
    c.pass = true;
    c.applicable = false;
    c.actual = std::move(why);
    return c;
}

}  // namespace

ConvolutionalCode dual_free(const ConvolutionalCode& c) {
    if (!c.is_free()) throw NotFree();
    const Ring& ring = c.ring();
    size_t n = c.n();
    PolyMatrix g0 = c.decompose().components[0];
    size_t k = g0.rows();
    PolyMatrix t = g0.vstack(complete_to_invertible(g0));
    RationalMatrix t_inv = invert_matrix(RationalMatrix::from_poly(t));
    // T·T⁻¹ = I kills the product of G with the last n−k columns of T⁻¹,
    // so those columns, transposed, generate an orthogonal free code
    RationalMatrix yt(ring, n - k, n);
    for (size_t i = 0; i + k < n; ++i)
        for (size_t j = 0; j < n; ++j) yt.at(i, j) = t_inv.at(j, k + i);
    return ConvolutionalCode::from_rational(yt);
}

DualResult dual(const ConvolutionalCode& c) {
    const Ring& ring = c.ring();
    const ChainDiagonalization& d = c.diag();
    size_t n = c.n();
    uint32_t r = ring->r();

    std::vector<std::vector<size_t>> picks(r);
    for (size_t i = 0; i < d.s(); ++i) {
        uint32_t a = d.exponents[i];
        if (a >= 1) picks[r - a].push_back(i);
    }
    for (size_t i = d.s(); i < n; ++i) picks[0].push_back(i);

    std::vector<PolyMatrix> comps;
    comps.reserve(r);
    PolyMatrix gen(ring, 0, n);
    for (uint32_t j = 0; j < r; ++j) {
        // the inverse columns carry the degree debris of the elimination, so
        // shrink each component before it reaches any downstream matrix work
        PolyMatrix b = reduce_row_degrees(clear_denominators(columns_as_rows(d.V_inv, picks[j])));
        gen = gen.vstack(b.scaled(ring->ppow(j)));
        comps.push_back(std::move(b));
    }
    return DualResult{ConvolutionalCode(reduce_row_degrees(gen)), std::move(comps),
                      DualPath::kDiagonalization};
}

SumIntersection sum_and_intersection(const ConvolutionalCode& a, const ConvolutionalCode& b) {
    ConvolutionalCode s = code_sum(a, b);
    ConvolutionalCode dual_sum = code_sum(dual(a).dual_code, dual(b).dual_code);
    return SumIntersection{std::move(s), dual(dual_sum).dual_code};
}

VerificationReport verify_duality_identities(const ConvolutionalCode& c, uint64_t trials,
                                             uint64_t seed) {
    const Ring& ring = c.ring();
    const size_t n = c.n();
    const uint32_t r = ring->r();
    std::mt19937_64 rng(seed);

    VerificationReport rep;
    rep.seed = seed;

    DualResult d = dual(c);

    uint64_t nr = static_cast<uint64_t>(n) * r;
    uint64_t sum = c.p_dim() + d.dual_code.p_dim();
    rep.items.push_back({"p-dimension sum is n*r", sum == nr, true, std::to_string(nr),
                         std::to_string(c.p_dim()) + " + " + std::to_string(d.dual_code.p_dim())});

    bool ortho = (c.generator() * d.dual_code.generator().transpose()).is_zero();
    rep.items.push_back({"dual generators exactly orthogonal", ortho, true, "zero product matrix",
                         ortho ? "zero product matrix" : "nonzero product entry"});

    bool dd = code_equal(dual(d.dual_code).dual_code, c);
    rep.items.push_back({"double dual equals the code", dd, true, "code_equal true", yes_no(dd)});

    const std::string name_d = "dual of p^i C is the dual plus p^(r-i) full module";
    const std::string name_e = "C meet p^i full module is p^i C";
    const std::string name_f = "p^i-divisible members lie in C plus p^(r-i) full module";

    if (!c.is_free()) {
        rep.items.push_back(not_applicable(name_d, "code is not free"));
        rep.items.push_back(not_applicable(name_e, "code is not free"));
        rep.items.push_back(not_applicable(name_f, "code is not free"));
        return rep;
    }

    bool scaled_duals = true;
    for (uint32_t i = 0; i <= r && scaled_duals; ++i) {
        ConvolutionalCode lhs = dual(c.scaled_by_ppow(i)).dual_code;
        ConvolutionalCode rhs = code_sum(d.dual_code, scaled_full_space(ring, n, r - i));
        scaled_duals = code_equal(lhs, rhs);
    }
    rep.items.push_back({name_d, scaled_duals, true, "code_equal for every i",
                         scaled_duals ? "all exponents agree" : "mismatch at some exponent"});

    bool scaled_meets = true;
    for (uint32_t i = 0; i <= r && scaled_meets; ++i) {
        ConvolutionalCode lhs = sum_and_intersection(c, scaled_full_space(ring, n, i)).intersection;
        scaled_meets = code_equal(lhs, c.scaled_by_ppow(i));
    }
    rep.items.push_back({name_e, scaled_meets, true, "code_equal for every i",
                         scaled_meets ? "all exponents agree" : "mismatch at some exponent"});

    if (r < 2) {
        rep.items.push_back(not_applicable(name_f, "no interior scaling exponents when r < 2"));
        return rep;
    }

    const PolyMatrix& g = c.generator();
    uint64_t checked = 0;
    uint64_t failures = 0;
    for (uint32_t i = 1; i < r; ++i) {
        ConvolutionalCode coset_code = code_sum(c, scaled_full_space(ring, n, r - i));
        for (uint64_t t = 0; t < trials; ++t) {
            PVector y;
            if (t % 2 == 0) {
                // a known solution: a codeword plus a p^(r-i)-multiple
                y = PVector(n, Polynomial::zero(ring));
                for (size_t row = 0; row < g.rows(); ++row) {
                    Polynomial u = random_polynomial(rng, ring, 2);
                    for (size_t j = 0; j < n; ++j) y[j] = y[j] + u * g.at(row, j);
                }
                PVector z = random_pvector(rng, ring, n, 2);
                for (size_t j = 0; j < n; ++j) y[j] = y[j] + z[j].scaled(ring->ppow(r - i));
            } else {
                // arbitrary probe, kept only when the hypothesis holds
                y = random_pvector(rng, ring, n, 2);
            }
            if (!c.contains(scale_vec(y, ring->ppow(i)))) continue;
            ++checked;
            if (!coset_code.contains(y)) ++failures;
        }
    }
    rep.items.push_back({name_f, failures == 0, true, "membership on every probe",
                         std::to_string(checked) + " probes with the hypothesis, " +
                             std::to_string(failures) + " failures"});
    return rep;
}

}  // namespace zprconv
