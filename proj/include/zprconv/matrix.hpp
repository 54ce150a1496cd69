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

#ifndef ZPRCONV_MATRIX_HPP
#define ZPRCONV_MATRIX_HPP

#include <vector>

#include "zprconv/constmat.hpp"
#include "zprconv/rational.hpp"

namespace zprconv {

/** Rectangular matrix of polynomials over a shared ring. */
class PolyMatrix {
   public:
    PolyMatrix(Ring ring, size_t rows, size_t cols);
    static PolyMatrix identity(const Ring& ring, size_t n);
    static PolyMatrix from_rows(const Ring& ring, std::vector<std::vector<Polynomial>> rows);
    static PolyMatrix from_const(const Ring& ring, const ConstMat& m);

    const Ring& ring() const noexcept { return ring_; }
    size_t rows() const noexcept { return rows_; }
    size_t cols() const noexcept { return cols_; }

    Polynomial& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Polynomial& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }
    std::vector<Polynomial> row(size_t i) const;

    bool is_zero() const;
    bool is_constant() const;
    ConstMat const_view() const;  // throws NotConstant
    int max_degree() const;       // -1 for the zero matrix

    PolyMatrix transpose() const;
    PolyMatrix mod_p_project() const;
    PolyMatrix scaled(uint64_t c) const;
    PolyMatrix vstack(const PolyMatrix& below) const;

    friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y);
    friend bool operator==(const PolyMatrix& x, const PolyMatrix& y);
    friend bool operator!=(const PolyMatrix& x, const PolyMatrix& y) { return !(x == y); }

    std::string to_string() const;

   private:
    Ring ring_;
    size_t rows_, cols_;
    std::vector<Polynomial> e_;
};

/** Rectangular matrix of rational functions over a shared ring. */
class RationalMatrix {
   public:
    RationalMatrix(Ring ring, size_t rows, size_t cols);
    static RationalMatrix identity(const Ring& ring, size_t n);
    static RationalMatrix from_poly(const PolyMatrix& m);

    const Ring& ring() const noexcept { return ring_; }
    size_t rows() const noexcept { return rows_; }
    size_t cols() const noexcept { return cols_; }

    RationalFunction& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const RationalFunction& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    RationalMatrix transpose() const;

    friend RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y);
    friend bool operator==(const RationalMatrix& x, const RationalMatrix& y);
    friend bool operator!=(const RationalMatrix& x, const RationalMatrix& y) { return !(x == y); }

   private:
    Ring ring_;
    size_t rows_, cols_;
    std::vector<RationalFunction> e_;
};

std::vector<RationalFunction> row_times(const std::vector<RationalFunction>& v, const RationalMatrix& m);

/**
 * M = U · [diag(p^{a_1}, ..., p^{a_s}) | 0] · V with U (k×k) and V (n×n)
 * invertible over the Laurent series ring and a_1 <= ... <= a_s < r.
 *
 * Every structural question this library answers reduces to this object:
 * the a_i give the free decomposition parameters, rows of V give component
 * generators, columns of V_inv give the dual, and membership tests go
 * through V_inv coordinates.
 */
struct ChainDiagonalization {
    RationalMatrix U;
    std::vector<uint32_t> exponents;
    RationalMatrix V;
    RationalMatrix V_inv;

    size_t s() const noexcept { return exponents.size(); }
    RationalMatrix reconstruct() const;  // U · [diag | 0] · V
};

// rank of the mod-p projection over the rational function field F_p(D)
size_t rank_mod_p(const PolyMatrix& m);

// full row rank over Z_{p^r}((D)); decided on the mod-p projection,
// which is equivalent because p is nilpotent
bool full_row_rank(const PolyMatrix& m);

ChainDiagonalization chain_diagonalize(const PolyMatrix& m);

// rows completing a full-row-rank G to a square matrix invertible over the
// Laurent ring: standard basis rows at the non-pivot columns of G mod p
PolyMatrix complete_to_invertible(const PolyMatrix& g);  // throws NotFullRowRank

RationalMatrix invert_matrix(const RationalMatrix& m);  // throws SingularMatrix

// polynomial matrix with the same row module: each row is rescaled by the
// product of its distinct denominators, a unit of the Laurent ring
PolyMatrix clear_denominators(const RationalMatrix& n);

// polynomial matrix with the same row module and lower entry degrees: when
// two rows attain their degree in the same column, the higher one loses its
// leading coefficient to a shifted multiple of the lower one (the pivot rule
// behind weak Popov forms, with a valuation guard because leading
// coefficients need not be units); every operation adds a row multiple to
// another row, so the row module is untouched
PolyMatrix reduce_row_degrees(const PolyMatrix& g);

}  // namespace zprconv

#endif
