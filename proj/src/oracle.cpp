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

#include "zprconv/oracle.hpp"

#include <algorithm>
#include <optional>

#include "zprconv/errors.hpp"

namespace zprconv {
namespace {

constexpr uint64_t kEnumCap = uint64_t(1) << 16;

std::optional<uint64_t> capped_pow(uint64_t base, uint64_t exp) {
    uint64_t v = 1;
    for (uint64_t i = 0; i < exp; ++i) {
        if (v > kEnumCap / base) return std::nullopt;
        v *= base;
    }
    return v;
}

uint64_t require_capped_pow(uint64_t base, uint64_t exp, const char* what) {
    auto v = capped_pow(base, exp);
    if (!v) throw TooLarge(what);
    return *v;
}

// digits of idx in the given base, least significant first
std::vector<uint64_t> decode_tuple(uint64_t idx, uint64_t base, size_t len) {
    std::vector<uint64_t> t(len);
    for (size_t i = 0; i < len; ++i) {
        t[i] = idx % base;
        idx /= base;
    }
    return t;
}

std::vector<uint64_t> info_word_image(const Ring& ring, const ConstMat& g,
                                      const std::vector<uint64_t>& u) {
    std::vector<uint64_t> w(g.cols, 0);
    for (size_t i = 0; i < g.rows; ++i)
        for (size_t j = 0; j < g.cols; ++j) w[j] = ring->add(w[j], ring->mul(u[i], g.at(i, j)));
    return w;
}

std::vector<std::vector<uint64_t>> matrix_rows(const ConstMat& m) {
    std::vector<std::vector<uint64_t>> rows(m.rows, std::vector<uint64_t>(m.cols));
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) rows[i][j] = m.at(i, j);
    return rows;
}

bool orthogonal_to_all(const Ring& ring, const std::vector<uint64_t>& y,
                       const std::vector<std::vector<uint64_t>>& words) {
    for (const auto& w : words) {
        uint64_t dot = 0;
        for (size_t j = 0; j < y.size(); ++j) dot = ring->add(dot, ring->mul(y[j], w[j]));
        if (dot != 0) return false;
    }
    return true;
}

const Ring& span_ring(const PSequence& gens) { return gens[0][0].ring(); }

size_t span_width(const PSequence& gens) {
    size_t n = gens[0].size();
    for (const auto& g : gens)
        if (g.size() != n) throw DimensionMismatch();
    return n;
}

// combination of gens with polynomial coefficients read off a tuple of values,
// flattened through the fixed window
std::vector<uint64_t> combo_flat(const PSequence& gens, const std::vector<uint64_t>& values,
                                 int bound, int window) {
    const Ring& ring = span_ring(gens);
    size_t n = gens[0].size();
    size_t stride = static_cast<size_t>(bound) + 1;
    PVector acc(n, Polynomial::zero(ring));
    for (size_t j = 0; j < gens.size(); ++j) {
        std::vector<uint64_t> cs(values.begin() + j * stride, values.begin() + (j + 1) * stride);
        Polynomial a(ring, std::move(cs));
        if (a.is_zero()) continue;
        for (size_t c = 0; c < n; ++c) acc[c] = acc[c] + a * gens[j][c];
    }
    return flatten_pvector(acc, window);
}

std::vector<std::vector<uint64_t>> sorted_unique(std::vector<std::vector<uint64_t>> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

CodewordSet::CodewordSet(Ring ring, size_t n, std::vector<std::vector<uint64_t>> words,
                         const std::vector<std::vector<uint64_t>>& closure_probe_rows)
    : ring_(std::move(ring)), n_(n), words_(std::move(words)) {
    for (auto& w : words_) {
        if (w.size() != n_) throw DimensionMismatch();
        for (auto& x : w) x = ring_->reduce(x);
    }
    words_ = sorted_unique(std::move(words_));
    if (!contains(std::vector<uint64_t>(n_, 0))) throw Error("codeword set misses the zero word");
    for (const auto& g : closure_probe_rows) {
        if (g.size() != n_) throw DimensionMismatch();
        for (const auto& s : words_)
            for (uint64_t lam = 0; lam < ring_->modulus(); ++lam) {
                std::vector<uint64_t> t(n_);
                for (size_t j = 0; j < n_; ++j)
                    t[j] = ring_->add(s[j], ring_->mul(lam, g[j]));
                if (!contains(t)) throw Error("codeword set is not closed under its generators");
            }
    }
}

bool CodewordSet::contains(const std::vector<uint64_t>& w) const {
    if (w.size() != n_) return false;
    std::vector<uint64_t> t(w);
    for (auto& x : t) x = ring_->reduce(x);
    return std::binary_search(words_.begin(), words_.end(), t);
}

CodewordSet enumerate_block_code(const PolyMatrix& g) {
    ConstMat m = g.const_view();
    const Ring& ring = g.ring();
    uint64_t q = ring->modulus();
    require_capped_pow(q, m.cols, "block code ambient space exceeds the enumeration cap");
    uint64_t total = require_capped_pow(q, m.rows, "information space exceeds the enumeration cap");
    std::vector<std::vector<uint64_t>> out(total);
#pragma omp parallel for schedule(static)
    for (long long idx = 0; idx < static_cast<long long>(total); ++idx)
        out[idx] = info_word_image(ring, m, decode_tuple(idx, q, m.rows));
    return CodewordSet(ring, m.cols, std::move(out), matrix_rows(m));
}

CodewordSet enumerate_block_code_serial(const PolyMatrix& g) {
    ConstMat m = g.const_view();
    const Ring& ring = g.ring();
    uint64_t q = ring->modulus();
    require_capped_pow(q, m.cols, "block code ambient space exceeds the enumeration cap");
    uint64_t total = require_capped_pow(q, m.rows, "information space exceeds the enumeration cap");
    std::vector<std::vector<uint64_t>> out(total);
    for (uint64_t idx = 0; idx < total; ++idx)
        out[idx] = info_word_image(ring, m, decode_tuple(idx, q, m.rows));
    return CodewordSet(ring, m.cols, std::move(out), matrix_rows(m));
}

CodewordSet brute_dual_block(const PolyMatrix& g) {
    CodewordSet code = enumerate_block_code(g);
    const Ring& ring = code.ring();
    uint64_t q = ring->modulus();
    uint64_t ambient = require_capped_pow(q, code.n(), "dual search space exceeds the enumeration cap");
    std::vector<char> keep(ambient, 0);
#pragma omp parallel for schedule(static)
    for (long long idx = 0; idx < static_cast<long long>(ambient); ++idx)
        keep[idx] = orthogonal_to_all(ring, decode_tuple(idx, q, code.n()), code.words()) ? 1 : 0;
    std::vector<std::vector<uint64_t>> out;
    for (uint64_t idx = 0; idx < ambient; ++idx)
        if (keep[idx]) out.push_back(decode_tuple(idx, q, code.n()));
    return CodewordSet(ring, code.n(), std::move(out), {});
}

CodewordSet brute_dual_block_serial(const PolyMatrix& g) {
    CodewordSet code = enumerate_block_code_serial(g);
    const Ring& ring = code.ring();
    uint64_t q = ring->modulus();
    uint64_t ambient = require_capped_pow(q, code.n(), "dual search space exceeds the enumeration cap");
    std::vector<std::vector<uint64_t>> out;
    for (uint64_t idx = 0; idx < ambient; ++idx) {
        std::vector<uint64_t> y = decode_tuple(idx, q, code.n());
        if (orthogonal_to_all(ring, y, code.words())) out.push_back(std::move(y));
    }
    return CodewordSet(ring, code.n(), std::move(out), {});
}

bool orthogonality_check(const PolyMatrix& g, const PolyMatrix& h) {
    require_same(g.ring(), h.ring());
    if (g.cols() != h.cols()) throw DimensionMismatch();
    return (g * h.transpose()).is_zero();
}

std::vector<uint64_t> flatten_pvector(const PVector& v, int max_degree) {
    std::vector<uint64_t> flat;
    flat.reserve(v.size() * static_cast<size_t>(max_degree + 1));
    for (const auto& poly : v) {
        if (poly.degree() > max_degree)
            throw BoundTooSmall("flattening window is below the vector degree");
        for (int d = 0; d <= max_degree; ++d) flat.push_back(poly.coeff(static_cast<size_t>(d)));
    }
    return flat;
}

std::vector<std::vector<uint64_t>> brute_p_span(const PSequence& gens, int degree_bound) {
    if (degree_bound < 0) throw BoundTooSmall("degree bound must be nonnegative");
    if (gens.empty()) return {std::vector<uint64_t>{}};
    const Ring& ring = span_ring(gens);
    span_width(gens);
    int window = degree_bound + std::max(0, max_degree(gens));
    size_t slots = (static_cast<size_t>(degree_bound) + 1) * gens.size();
    uint64_t total =
        require_capped_pow(ring->p(), slots, "digit coefficient space exceeds the enumeration cap");
    std::vector<std::vector<uint64_t>> out(total);
#pragma omp parallel for schedule(static)
    for (long long idx = 0; idx < static_cast<long long>(total); ++idx)
        out[idx] = combo_flat(gens, decode_tuple(idx, ring->p(), slots), degree_bound, window);
    return sorted_unique(std::move(out));
}

std::vector<std::vector<uint64_t>> brute_p_span_serial(const PSequence& gens, int degree_bound) {
    if (degree_bound < 0) throw BoundTooSmall("degree bound must be nonnegative");
    if (gens.empty()) return {std::vector<uint64_t>{}};
    const Ring& ring = span_ring(gens);
    span_width(gens);
    int window = degree_bound + std::max(0, max_degree(gens));
    size_t slots = (static_cast<size_t>(degree_bound) + 1) * gens.size();
    uint64_t total =
        require_capped_pow(ring->p(), slots, "digit coefficient space exceeds the enumeration cap");
    std::vector<std::vector<uint64_t>> out(total);
    for (uint64_t idx = 0; idx < total; ++idx)
        out[idx] = combo_flat(gens, decode_tuple(idx, ring->p(), slots), degree_bound, window);
    return sorted_unique(std::move(out));
}

std::vector<std::vector<uint64_t>> brute_module_span(const PSequence& gens, int degree_bound) {
    if (degree_bound < 0) throw BoundTooSmall("degree bound must be nonnegative");
    if (gens.empty()) return {std::vector<uint64_t>{}};
    const Ring& ring = span_ring(gens);
    span_width(gens);
    int window = degree_bound + std::max(0, max_degree(gens));
    size_t slots = (static_cast<size_t>(degree_bound) + 1) * gens.size();
    uint64_t total = require_capped_pow(ring->modulus(), slots,
                                        "ring coefficient space exceeds the enumeration cap");
    std::vector<std::vector<uint64_t>> out(total);
    for (uint64_t idx = 0; idx < total; ++idx)
        out[idx] = combo_flat(gens, decode_tuple(idx, ring->modulus(), slots), degree_bound, window);
    return sorted_unique(std::move(out));
}

}  // namespace zprconv
