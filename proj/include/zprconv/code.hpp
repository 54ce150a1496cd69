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

#ifndef ZPRCONV_CODE_HPP
#define ZPRCONV_CODE_HPP

#include <vector>

#include "zprconv/matrix.hpp"
#include "zprconv/pstructure.hpp"

namespace zprconv {

/** Free components of a code: C = Im G_0 + p·Im G_1 + ... + p^{r-1}·Im G_{r-1}. */
struct Decomposition {
    std::vector<size_t> k_list;          // k_i = rank of component i, length r
    std::vector<PolyMatrix> components;  // G_i is k_i × n, polynomial, free
};

/**
 * A convolutional code of length n over Z_{p^r}: the Laurent-module image of
 * a polynomial generator matrix. The code is keyed by that image, not by the
 * particular generator; the chain diagonalization computed at construction
 * is the canonical handle, and everything else (parameters, p-encoder,
 * membership, duals) reads off it.
 */
class ConvolutionalCode {
   public:
    explicit ConvolutionalCode(PolyMatrix generator);

    static ConvolutionalCode zero_code(const Ring& ring, size_t n);
    static ConvolutionalCode full_space(const Ring& ring, size_t n);
    // same image: denominators are Laurent units, so clearing them row-wise
    // turns a rational generator into a polynomial one
    static ConvolutionalCode from_rational(const RationalMatrix& m);

    const Ring& ring() const noexcept { return generator_.ring(); }
    size_t n() const noexcept { return generator_.cols(); }
    const PolyMatrix& generator() const noexcept { return generator_; }
    // diagonalization of a degree-reduced generator with the same image
    const ChainDiagonalization& diag() const noexcept { return diag_; }

    const std::vector<size_t>& k_list() const noexcept { return k_list_; }
    uint64_t p_dim() const noexcept;
    bool is_free() const noexcept;

    Decomposition decompose() const;
    PSequence p_encoder() const;

    bool contains(const std::vector<RationalFunction>& w) const;
    bool contains(const PVector& w) const;

    // the code p^i C
    ConvolutionalCode scaled_by_ppow(uint32_t i) const;

   private:
    PolyMatrix generator_;
    ChainDiagonalization diag_;
    std::vector<size_t> k_list_;
};

bool code_equal(const ConvolutionalCode& a, const ConvolutionalCode& b);
ConvolutionalCode code_sum(const ConvolutionalCode& a, const ConvolutionalCode& b);

struct SumIntersection {
    ConvolutionalCode sum;
    ConvolutionalCode intersection;
};

// intersection goes through duality: C1 ∩ C2 = (C1⊥ + C2⊥)⊥
SumIntersection sum_and_intersection(const ConvolutionalCode& a, const ConvolutionalCode& b);

/**
 * Constant generator brought to the block-triangular shape with p^i identity
 * diagonal blocks by unit row operations and column swaps.
 */
struct StandardFormResult {
    ConstMat matrix;
    std::vector<size_t> params;              // pivots per stage, length r
    std::vector<size_t> column_permutation;  // entry j = original index of column now at j
};

StandardFormResult standard_form(const PolyMatrix& g);  // throws NotConstant

}  // namespace zprconv

#endif
