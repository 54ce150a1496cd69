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

#ifndef ZPRCONV_ORACLE_HPP
#define ZPRCONV_ORACLE_HPP

#include <vector>

#include "zprconv/matrix.hpp"
#include "zprconv/pstructure.hpp"

namespace zprconv {

/*
 * Brute-force ground truth, independent of the algebraic machinery: block
 * codes and digit spans small enough to enumerate are enumerated in full.
 * Everything here either finishes exactly or throws TooLarge; nothing
 * samples. The hot enumerations run with OpenMP; each keeps a plain serial
 * twin as the reference the parallel kernel is tested against.
 */

/** Explicit set of constant codewords, sorted; closure is verified on construction. */
class CodewordSet {
   public:
    // words are deduplicated and sorted; generator rows drive the closure probe
    CodewordSet(Ring ring, size_t n, std::vector<std::vector<uint64_t>> words,
                const std::vector<std::vector<uint64_t>>& closure_probe_rows);

    const Ring& ring() const noexcept { return ring_; }
    size_t n() const noexcept { return n_; }
    size_t size() const noexcept { return words_.size(); }
    const std::vector<std::vector<uint64_t>>& words() const noexcept { return words_; }
    bool contains(const std::vector<uint64_t>& w) const;

    friend bool operator==(const CodewordSet& a, const CodewordSet& b) {
        return a.ring_->same(*b.ring_) && a.n_ == b.n_ && a.words_ == b.words_;
    }

   private:
    Ring ring_;
    size_t n_;
    std::vector<std::vector<uint64_t>> words_;
};

// {uG : u over all information words}; cap p^{nr} <= 2^16 on the ambient space
CodewordSet enumerate_block_code(const PolyMatrix& g);
CodewordSet enumerate_block_code_serial(const PolyMatrix& g);

// {y : y orthogonal to every enumerated codeword}, by double enumeration
CodewordSet brute_dual_block(const PolyMatrix& g);
CodewordSet brute_dual_block_serial(const PolyMatrix& g);

// G · H^T == 0 as an exact polynomial matrix product
bool orthogonality_check(const PolyMatrix& g, const PolyMatrix& h);

/**
 * All digit-polynomial combinations of gens with coefficient degree at most
 * degree_bound, each flattened to its coefficient table (component-major,
 * degrees 0..degree_bound + max generator degree). Sorted and unique.
 */
std::vector<std::vector<uint64_t>> brute_p_span(const PSequence& gens, int degree_bound);
std::vector<std::vector<uint64_t>> brute_p_span_serial(const PSequence& gens, int degree_bound);

// same flattening, but coefficients range over all of Z_{p^r}
std::vector<std::vector<uint64_t>> brute_module_span(const PSequence& gens, int degree_bound);

// the flattening used by the span enumerators, for membership lookups
std::vector<uint64_t> flatten_pvector(const PVector& v, int degree_bound);

}  // namespace zprconv

#endif
