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

#ifndef ZPRCONV_CONSTMAT_HPP
#define ZPRCONV_CONSTMAT_HPP

#include <optional>
#include <vector>

#include "zprconv/ring.hpp"

namespace zprconv {

/** Dense constant matrix over Z_{p^r}, row major. */
struct ConstMat {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<uint64_t> a;

    ConstMat() = default;
    ConstMat(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}

    uint64_t& at(size_t i, size_t j) { return a[i * cols + j]; }
    uint64_t at(size_t i, size_t j) const { return a[i * cols + j]; }

    static ConstMat identity(size_t n) {
        ConstMat m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
};

ConstMat const_mul(const Ring& ring, const ConstMat& x, const ConstMat& y);
std::vector<uint64_t> const_apply(const Ring& ring, const ConstMat& m, const std::vector<uint64_t>& x);

/**
 * Diagonal form of a constant matrix over the chain ring:
 * row_t · M · col_t has p^{exponents[i]} at position (i, i) for the pivot
 * count s = exponents.size() and zero elsewhere, with both transforms
 * invertible. Exponents come out non-decreasing because pivots are chosen
 * by minimal p-valuation.
 */
struct ConstDiagonalization {
    Ring ring;
    size_t rows = 0;
    size_t cols = 0;
    std::vector<uint32_t> exponents;
    ConstMat row_t;
    ConstMat col_t;
};

ConstDiagonalization const_diagonalize(const Ring& ring, const ConstMat& m);

// one solution of M x = w over Z_{p^r}, if any
std::optional<std::vector<uint64_t>> const_solve(const ConstDiagonalization& d, const std::vector<uint64_t>& w);

// generators of the solution module of M x = 0
std::vector<std::vector<uint64_t>> const_kernel(const ConstDiagonalization& d);

}  // namespace zprconv

#endif
