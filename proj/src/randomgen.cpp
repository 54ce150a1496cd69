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

#include "zprconv/randomgen.hpp"

#include "zprconv/errors.hpp"

namespace zprconv {

uint64_t uniform_below(std::mt19937_64& rng, uint64_t bound) {
    if (bound == 0) throw DimensionMismatch();
    return rng() % bound;
}

Polynomial random_polynomial(std::mt19937_64& rng, const Ring& ring, int max_deg) {
    if (max_deg < 0) return Polynomial::zero(ring);
    std::vector<uint64_t> cs(static_cast<size_t>(max_deg) + 1);
    for (auto& c : cs) c = uniform_below(rng, ring->modulus());
    return Polynomial(ring, std::move(cs));
}

PVector random_pvector(std::mt19937_64& rng, const Ring& ring, size_t n, int max_deg) {
    PVector v;
    v.reserve(n);
    for (size_t j = 0; j < n; ++j) v.push_back(random_polynomial(rng, ring, max_deg));
    return v;
}

PolyMatrix random_poly_matrix(std::mt19937_64& rng, const Ring& ring, size_t rows, size_t cols,
                              int max_deg) {
    PolyMatrix m(ring, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = random_polynomial(rng, ring, max_deg);
    return m;
}

ConvolutionalCode random_code(std::mt19937_64& rng, const Ring& ring, size_t n, size_t rows,
                              int max_deg) {
    return ConvolutionalCode(random_poly_matrix(rng, ring, rows, n, max_deg));
}

PolyMatrix random_invertible(std::mt19937_64& rng, const Ring& ring, size_t k, int max_deg) {
    PolyMatrix m = PolyMatrix::identity(ring, k);
    if (k == 0) return m;
    size_t ops = 3 * k;
    for (size_t t = 0; t < ops; ++t) {
        switch (k == 1 ? 2 : uniform_below(rng, 3)) {
            case 0: {  // row_i += f · row_j
                size_t i = uniform_below(rng, k);
                size_t j = uniform_below(rng, k - 1);
                if (j >= i) ++j;
                Polynomial f = random_polynomial(rng, ring, max_deg);
                for (size_t c = 0; c < k; ++c) m.at(i, c) = m.at(i, c) + f * m.at(j, c);
                break;
            }
            case 1: {  // swap two rows
                size_t i = uniform_below(rng, k);
                size_t j = uniform_below(rng, k - 1);
                if (j >= i) ++j;
                for (size_t c = 0; c < k; ++c) std::swap(m.at(i, c), m.at(j, c));
                break;
            }
            default: {  // scale a row by a unit
                size_t i = uniform_below(rng, k);
                uint64_t u = 0;
                do {
                    u = uniform_below(rng, ring->modulus());
                } while (!ring->is_unit(u));
                for (size_t c = 0; c < k; ++c) m.at(i, c) = m.at(i, c).scaled(u);
                break;
            }
        }
    }
    return m;
}

}  // namespace zprconv
