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

#ifndef ZPRCONV_DUAL_HPP
#define ZPRCONV_DUAL_HPP

#include "zprconv/code.hpp"
#include "zprconv/report.hpp"

namespace zprconv {

enum class DualPath {
    kDiagonalization,  // B-components read off the chain diagonalization
    kFreeInverse,      // free case: completion to an invertible matrix, then inversion
};

/**
 * The dual code together with its layered structure:
 * C⊥ = Im B_0 + p·Im B_1 + ... + p^{r-1}·Im B_{r-1}, each B_i free with
 * rank(B_0) = n − Σk_i and rank(B_i) = k_{r−i} for i ≥ 1.
 */
struct DualResult {
    ConvolutionalCode dual_code;
    std::vector<PolyMatrix> b_components;  // length r; rank of B_i = its row count
    DualPath provenance = DualPath::kDiagonalization;
};

/**
 * Dual of a free code of rank k: complete the canonical generator G to an
 * invertible T = stack(G, L), write T⁻¹ = [X | Y], and take the transpose of
 * Y. The result is free of rank n − k and exactly orthogonal to the input.
 */
ConvolutionalCode dual_free(const ConvolutionalCode& c);  // throws NotFree

/**
 * Dual of an arbitrary code, read off the diagonalization G = U·[Δ|0]·V:
 * with c_i the i-th column of V⁻¹, the dual is generated by p^{r−a_i}·c_iᵀ
 * for pivots with a_i ≥ 1 together with c_iᵀ for the non-pivot columns.
 */
DualResult dual(const ConvolutionalCode& c);

/**
 * Per-item pass/fail report over the duality identities: the p-dimension sum
 * nr, exact generator orthogonality, double-dual equality, and (for free
 * codes) the scaling laws for duals and intersections together with
 * quotient membership.
 * Randomized probes are driven by the seed; failures are report entries,
 * never exceptions.
 */
VerificationReport verify_duality_identities(const ConvolutionalCode& c, uint64_t trials,
                                             uint64_t seed);

}  // namespace zprconv

#endif
