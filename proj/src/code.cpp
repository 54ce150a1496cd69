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

#include "zprconv/code.hpp"

#include <algorithm>
#include <utility>

namespace zprconv {

ConvolutionalCode::ConvolutionalCode(PolyMatrix generator)
    : generator_(std::move(generator)),
      // diagonalize a degree-reduced copy; it spans the same module, and the
      // elimination cost depends sharply on the entry degrees it starts from
      diag_(chain_diagonalize(reduce_row_degrees(generator_))),
      k_list_(generator_.ring()->r(), 0) {
    for (uint32_t a : diag_.exponents) ++k_list_[a];
}

ConvolutionalCode ConvolutionalCode::zero_code(const Ring& ring, size_t n) {
    return ConvolutionalCode(PolyMatrix(ring, 0, n));
}

ConvolutionalCode ConvolutionalCode::full_space(const Ring& ring, size_t n) {
    return ConvolutionalCode(PolyMatrix::identity(ring, n));
}

ConvolutionalCode ConvolutionalCode::from_rational(const RationalMatrix& m) {
    return ConvolutionalCode(reduce_row_degrees(clear_denominators(m)));
}

uint64_t ConvolutionalCode::p_dim() const noexcept { return p_dimension_formula(k_list_); }

bool ConvolutionalCode::is_free() const noexcept {
    for (size_t i = 1; i < k_list_.size(); ++i) {
        if (k_list_[i] != 0) return false;
    }
    return true;
}

Decomposition ConvolutionalCode::decompose() const {
    const Ring& rg = ring();
    Decomposition d;
    d.k_list = k_list_;
    for (uint32_t i = 0; i < rg->r(); ++i) {
        RationalMatrix rows(rg, k_list_[i], n());
        size_t out = 0;
        for (size_t t = 0; t < diag_.s(); ++t) {
            if (diag_.exponents[t] != i) continue;
            for (size_t j = 0; j < n(); ++j) rows.at(out, j) = diag_.V.at(t, j);
            ++out;
        }
        d.components.push_back(clear_denominators(rows));
    }
    return d;
}

PSequence ConvolutionalCode::p_encoder() const {
    const Ring& rg = ring();
    Decomposition d = decompose();
    PSequence seq;
    for (uint32_t i = 0; i < rg->r(); ++i) {
        const PolyMatrix& g = d.components[i];
        for (size_t row = 0; row < g.rows(); ++row) {
            for (uint32_t t = i; t < rg->r(); ++t) {
                seq.push_back(scale_vec(g.row(row), rg->ppow(t)));
            }
        }
    }
    return seq;
}

bool ConvolutionalCode::contains(const std::vector<RationalFunction>& w) const {
    if (w.size() != n()) throw DimensionMismatch();
    std::vector<RationalFunction> y = row_times(w, diag_.V_inv);
    for (size_t i = 0; i < n(); ++i) {
        if (i < diag_.s()) {
            if (y[i].valuation() < diag_.exponents[i]) return false;
        } else if (!y[i].is_zero()) {
            return false;
        }
    }
    return true;
}

bool ConvolutionalCode::contains(const PVector& w) const {
    std::vector<RationalFunction> v;
    v.reserve(w.size());
    for (const auto& f : w) v.push_back(RationalFunction::from_poly(f));
    return contains(v);
}

ConvolutionalCode ConvolutionalCode::scaled_by_ppow(uint32_t i) const {
    const Ring& rg = ring();
    return ConvolutionalCode(generator_.scaled(rg->ppow(std::min(i, rg->r()))));
}

bool code_equal(const ConvolutionalCode& a, const ConvolutionalCode& b) {
    require_same(a.ring(), b.ring());
    if (a.n() != b.n()) throw DimensionMismatch();
    for (size_t i = 0; i < a.generator().rows(); ++i) {
        if (!b.contains(a.generator().row(i))) return false;
    }
    for (size_t i = 0; i < b.generator().rows(); ++i) {
        if (!a.contains(b.generator().row(i))) return false;
    }
    return true;
}

ConvolutionalCode code_sum(const ConvolutionalCode& a, const ConvolutionalCode& b) {
    require_same(a.ring(), b.ring());
    if (a.n() != b.n()) throw DimensionMismatch();
    // the stack spans the sum as it is; reducing it first keeps the
    // diagonalization of the combined generator from chewing on degrees one
    // summand already explains
    return ConvolutionalCode(reduce_row_degrees(a.generator().vstack(b.generator())));
}

StandardFormResult standard_form(const PolyMatrix& g) {
    if (!g.is_constant()) throw NotConstant();
    const Ring& ring = g.ring();
    const uint32_t r = ring->r();
    ConstMat a = g.const_view();
    size_t k = a.rows, n = a.cols;

    StandardFormResult res;
    res.params.assign(r, 0);
    res.column_permutation.resize(n);
    for (size_t j = 0; j < n; ++j) res.column_permutation[j] = j;

    size_t t = 0;  // next pivot slot
    for (uint32_t stage = 0; stage < r && t < std::min(k, n); ++stage) {
        for (;;) {
            // first entry of valuation == stage in the active block, scanning
            // columns left to right
            size_t pi = k, pj = n;
            for (size_t j = t; j < n && pj == n; ++j) {
                for (size_t i = t; i < k; ++i) {
                    if (ring->valuation(a.at(i, j)) == stage) {
                        pi = i;
                        pj = j;
                        break;
                    }
                }
            }
            if (pj == n) break;

            if (pi != t) {
                for (size_t j = 0; j < n; ++j) std::swap(a.at(pi, j), a.at(t, j));
            }
            if (pj != t) {
                for (size_t i = 0; i < k; ++i) std::swap(a.at(i, pj), a.at(i, t));
                std::swap(res.column_permutation[pj], res.column_permutation[t]);
            }

            uint64_t ps = ring->ppow(stage);
            uint64_t u_inv = ring->inv(a.at(t, t) / ps);
            for (size_t j = 0; j < n; ++j) a.at(t, j) = ring->mul(a.at(t, j), u_inv);

            for (size_t i = 0; i < k; ++i) {
                if (i == t) continue;
                // below: clear entirely; above: reduce modulo p^stage
                uint64_t mult = a.at(i, t) / ps;
                if (mult == 0) continue;
                for (size_t j = 0; j < n; ++j) {
                    a.at(i, j) = ring->sub(a.at(i, j), ring->mul(mult, a.at(t, j)));
                }
            }
            ++res.params[stage];
            ++t;
            if (t >= std::min(k, n)) break;
        }
    }
    res.matrix = a;
    return res;
}

}  // namespace zprconv
