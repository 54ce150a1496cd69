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

#include "zprconv/constmat.hpp"

#include <utility>

namespace zprconv {

ConstMat const_mul(const Ring& ring, const ConstMat& x, const ConstMat& y) {
    if (x.cols != y.rows) throw DimensionMismatch();
    ConstMat out(x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i) {
        for (size_t l = 0; l < x.cols; ++l) {
            uint64_t v = x.at(i, l);
            if (v == 0) continue;
            for (size_t j = 0; j < y.cols; ++j) {
                out.at(i, j) = ring->add(out.at(i, j), ring->mul(v, y.at(l, j)));
            }
        }
    }
    return out;
}

std::vector<uint64_t> const_apply(const Ring& ring, const ConstMat& m, const std::vector<uint64_t>& x) {
    if (m.cols != x.size()) throw DimensionMismatch();
    std::vector<uint64_t> out(m.rows, 0);
    for (size_t i = 0; i < m.rows; ++i) {
        uint64_t acc = 0;
        for (size_t j = 0; j < m.cols; ++j) acc = ring->add(acc, ring->mul(m.at(i, j), x[j]));
        out[i] = acc;
    }
    return out;
}

ConstDiagonalization const_diagonalize(const Ring& ring, const ConstMat& m) {
    ConstDiagonalization d;
    d.ring = ring;
    d.rows = m.rows;
    d.cols = m.cols;
    d.row_t = ConstMat::identity(m.rows);
    d.col_t = ConstMat::identity(m.cols);
    ConstMat a = m;
    const uint32_t r = ring->r();

    size_t steps = std::min(m.rows, m.cols);
    for (size_t step = 0; step < steps; ++step) {
        // pivot: minimal valuation in the active submatrix, row-major ties
        uint32_t best = r;
        size_t pi = step, pj = step;
        for (size_t i = step; i < a.rows; ++i) {
            for (size_t j = step; j < a.cols; ++j) {
                uint32_t v = ring->valuation(a.at(i, j));
                if (v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (best == r) break;

        if (pi != step) {
            for (size_t j = 0; j < a.cols; ++j) std::swap(a.at(pi, j), a.at(step, j));
            for (size_t j = 0; j < d.row_t.cols; ++j) std::swap(d.row_t.at(pi, j), d.row_t.at(step, j));
        }
        if (pj != step) {
            for (size_t i = 0; i < a.rows; ++i) std::swap(a.at(i, pj), a.at(i, step));
            for (size_t i = 0; i < d.col_t.rows; ++i) std::swap(d.col_t.at(i, pj), d.col_t.at(i, step));
        }

        // pivot = p^best · u; scale its row by u^{-1}, then the pivot clears
        // its column and row by exact division of p^best
        uint64_t pb = ring->ppow(best);
        uint64_t u_inv = ring->inv(a.at(step, step) / pb);
        for (size_t j = 0; j < a.cols; ++j) a.at(step, j) = ring->mul(a.at(step, j), u_inv);
        for (size_t j = 0; j < d.row_t.cols; ++j) d.row_t.at(step, j) = ring->mul(d.row_t.at(step, j), u_inv);

        for (size_t i = step + 1; i < a.rows; ++i) {
            uint64_t mult = a.at(i, step) / pb;  // valuation >= best, so exact
            if (mult == 0) continue;
            for (size_t j = 0; j < a.cols; ++j) {
                a.at(i, j) = ring->sub(a.at(i, j), ring->mul(mult, a.at(step, j)));
            }
            for (size_t j = 0; j < d.row_t.cols; ++j) {
                d.row_t.at(i, j) = ring->sub(d.row_t.at(i, j), ring->mul(mult, d.row_t.at(step, j)));
            }
        }
        for (size_t j = step + 1; j < a.cols; ++j) {
            uint64_t mult = a.at(step, j) / pb;
            if (mult == 0) continue;
            for (size_t i = 0; i < a.rows; ++i) {
                a.at(i, j) = ring->sub(a.at(i, j), ring->mul(mult, a.at(i, step)));
            }
            for (size_t i = 0; i < d.col_t.rows; ++i) {
                d.col_t.at(i, j) = ring->sub(d.col_t.at(i, j), ring->mul(mult, d.col_t.at(i, step)));
            }
        }
        d.exponents.push_back(best);
    }
    return d;
}

std::optional<std::vector<uint64_t>> const_solve(const ConstDiagonalization& d, const std::vector<uint64_t>& w) {
    if (w.size() != d.rows) throw DimensionMismatch();
    const Ring& ring = d.ring;
    std::vector<uint64_t> y = const_apply(ring, d.row_t, w);
    size_t s = d.exponents.size();
    std::vector<uint64_t> z(d.cols, 0);
    for (size_t i = 0; i < d.rows; ++i) {
        if (i < s) {
            if (ring->valuation(y[i]) < d.exponents[i]) return std::nullopt;
            z[i] = y[i] / ring->ppow(d.exponents[i]);
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return const_apply(ring, d.col_t, z);
}

std::vector<std::vector<uint64_t>> const_kernel(const ConstDiagonalization& d) {
    const Ring& ring = d.ring;
    size_t s = d.exponents.size();
    std::vector<std::vector<uint64_t>> gens;
    for (size_t i = 0; i < d.cols; ++i) {
        uint64_t scale = 1;
        if (i < s) {
            if (d.exponents[i] == 0) continue;
            scale = ring->ppow(ring->r() - d.exponents[i]);
        }
        std::vector<uint64_t> g(d.cols);
        for (size_t l = 0; l < d.cols; ++l) g[l] = ring->mul(d.col_t.at(l, i), scale);
        gens.push_back(std::move(g));
    }
    return gens;
}

}  // namespace zprconv
