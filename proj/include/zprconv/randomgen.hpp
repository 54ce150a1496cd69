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

#ifndef ZPRCONV_RANDOMGEN_HPP
#define ZPRCONV_RANDOMGEN_HPP

#include <random>

#include "zprconv/code.hpp"

namespace zprconv {

/*
 * Seeded generators for fuzzing and for the CLI `random` subcommand. All
 * draws go through uniform_below, which uses explicit modular reduction so a
 * given seed yields the same objects on every platform and standard library.
 */

uint64_t uniform_below(std::mt19937_64& rng, uint64_t bound);

Polynomial random_polynomial(std::mt19937_64& rng, const Ring& ring, int max_deg);
PVector random_pvector(std::mt19937_64& rng, const Ring& ring, size_t n, int max_deg);
PolyMatrix random_poly_matrix(std::mt19937_64& rng, const Ring& ring, size_t rows, size_t cols,
                              int max_deg);
ConvolutionalCode random_code(std::mt19937_64& rng, const Ring& ring, size_t n, size_t rows,
                              int max_deg);

// product of elementary row operations applied to I_k: always invertible
// over the polynomial ring, suitable as a left factor that preserves images
PolyMatrix random_invertible(std::mt19937_64& rng, const Ring& ring, size_t k, int max_deg);

}  // namespace zprconv

#endif
