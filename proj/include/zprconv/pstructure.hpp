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

#ifndef ZPRCONV_PSTRUCTURE_HPP
#define ZPRCONV_PSTRUCTURE_HPP

#include <vector>

#include "zprconv/poly.hpp"

namespace zprconv {

/*
 * The digit machinery. A p-linear combination restricts coefficients to
 * polynomials whose coefficients are digits {0, ..., p-1}; unlike module
 * spans, the digit set is not closed under addition, so membership and
 * independence have to be decided rather than row-reduced.
 *
 * All queries here carry an explicit witness degree bound and are exact
 * within it. The decision procedure exploits that digit vectors biject
 * with their mod-p images: candidates form an affine space over F_p,
 * which is searched after cheap accepts and rejects.
 */

using PVector = std::vector<Polynomial>;
using PSequence = std::vector<PVector>;

bool is_digit_polynomial(const Polynomial& f);

PVector scale_vec(const PVector& v, uint64_t c);
PVector add_vec(const PVector& a, const PVector& b);
bool vec_is_zero(const PVector& v);
int max_degree(const PSequence& seq);

struct MembershipResult {
    bool member = false;
    std::vector<Polynomial> witness;  // digit polynomials, one per generator
};

/**
 * Is w a digit-coefficient combination of gens with coefficient degrees at
 * most degree_bound? Throws BoundTooSmall when w or gens already exceed the
 * bound, and TooLarge when the residual search space cannot be enumerated
 * exactly within the internal cap.
 */
MembershipResult p_span_membership(const PVector& w, const PSequence& gens, int degree_bound);

/**
 * Ordered sequence where p·v_i is a digit combination of the later vectors
 * and p·v_k = 0. Witness degrees are bounded by the largest degree in the
 * sequence.
 */
bool is_p_generator_sequence(const PSequence& seq);

/**
 * The (v, pv, ..., p^{r-1}v) expansion of each generator, in order. Keeps
 * vectors that vanish unless drop_zeros is set.
 */
PSequence expand_to_p_generator_sequence(const PSequence& gens, bool drop_zeros = false);

/** Only the all-zero digit combination with degrees <= degree_bound vanishes. */
bool is_p_linearly_independent(const PSequence& seq, int degree_bound);

uint64_t p_dimension_formula(const std::vector<size_t>& k_list);

}  // namespace zprconv

#endif
