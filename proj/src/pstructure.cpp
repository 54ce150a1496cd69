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

#include "zprconv/pstructure.hpp"

#include <algorithm>
#include <string>

#include "zprconv/constmat.hpp"
#include "zprconv/matrix.hpp"

namespace zprconv {

namespace {

constexpr uint64_t kMaxSearch = uint64_t{1} << 16;

struct FlatSystem {
    size_t unknowns = 0;
    ConstMat c;                    // n(T+1) × k(B+1) over Z_{p^r}
    std::vector<uint64_t> target;  // flattened w
};

// unknown (j,d) is the degree-d coefficient of generator j's multiplier;
// row (comp,t) matches the degree-t coefficient of component comp
FlatSystem flatten(const PVector& w, const PSequence& gens, int bound) {
    size_t n = w.size();
    size_t k = gens.size();
    size_t width = static_cast<size_t>(bound) + 1;
    int t_max = 0;
    for (const auto& f : w) t_max = std::max(t_max, f.degree());
    t_max = std::max(t_max, max_degree(gens) + bound);
    size_t heights = static_cast<size_t>(t_max) + 1;

    FlatSystem fs;
    fs.unknowns = k * width;
    fs.c = ConstMat(n * heights, fs.unknowns);
    fs.target.assign(n * heights, 0);
    for (size_t comp = 0; comp < n; ++comp) {
        for (size_t t = 0; t < heights; ++t) {
            fs.target[comp * heights + t] = w[comp].coeff(t);
            for (size_t j = 0; j < k; ++j) {
                for (size_t d = 0; d <= static_cast<size_t>(bound) && d <= t; ++d) {
                    fs.c.at(comp * heights + t, j * width + d) = gens[j][comp].coeff(t - d);
                }
            }
        }
    }
    return fs;
}

ConstMat project_mat(const Ring& ring, const ConstMat& m) {
    ConstMat out(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = m.a[i] % ring->p();
    return out;
}

std::vector<Polynomial> witness_from_digits(const Ring& ring, const std::vector<uint64_t>& x,
                                            size_t k, size_t width) {
    std::vector<Polynomial> out;
    out.reserve(k);
    for (size_t j = 0; j < k; ++j) {
        std::vector<uint64_t> coeffs(x.begin() + static_cast<ptrdiff_t>(j * width),
                                     x.begin() + static_cast<ptrdiff_t>((j + 1) * width));
        out.emplace_back(ring, std::move(coeffs));
    }
    return out;
}

/**
 * Search the lifts of the mod-p affine space x0 + span(kernel) for a vector
 * solving the system over Z_{p^r}. Digit vectors are their own mod-p
 * representatives, so this space contains every digit solution.
 */
std::optional<std::vector<uint64_t>> digit_search(const Ring& ring, const ConstMat& c,
                                                  const std::vector<uint64_t>& target,
                                                  const std::vector<uint64_t>& x0,
                                                  const std::vector<std::vector<uint64_t>>& kernel,
                                                  bool skip_zero_combo) {
    const uint64_t p = ring->p();
    size_t dim = kernel.size();
    uint64_t total = 1;
    for (size_t i = 0; i < dim; ++i) {
        if (total > kMaxSearch / p) {
            throw TooLarge("digit search space " + std::to_string(dim) +
                           " kernel dimensions exceeds the exact enumeration cap");
        }
        total *= p;
    }
    std::vector<uint64_t> t(dim, 0);
    std::vector<uint64_t> x = x0;
    for (uint64_t count = 0;; ++count) {
        if (!(skip_zero_combo && count == 0)) {
            if (const_apply(ring, c, x) == target) return x;
        }
        // odometer step over F_p^dim, x maintained as the mod-p combination
        size_t pos = 0;
        while (pos < dim) {
            t[pos] += 1;
            for (size_t l = 0; l < x.size(); ++l) x[l] = (x[l] + kernel[pos][l]) % p;
            if (t[pos] < p) break;
            t[pos] = 0;
            ++pos;
        }
        if (pos == dim) break;
    }
    return std::nullopt;
}

void check_inputs(const Ring& ring, const PVector& w, const PSequence& gens) {
    for (const auto& f : w) require_same(ring, f.ring());
    for (const auto& g : gens) {
        if (g.size() != w.size()) throw DimensionMismatch();
        for (const auto& f : g) require_same(ring, f.ring());
    }
}

}  // namespace

bool is_digit_polynomial(const Polynomial& f) {
    const uint64_t p = f.ring()->p();
    return std::all_of(f.coeffs().begin(), f.coeffs().end(), [p](uint64_t c) { return c < p; });
}

PVector scale_vec(const PVector& v, uint64_t c) {
    PVector out;
    out.reserve(v.size());
    for (const auto& f : v) out.push_back(f.scaled(c));
    return out;
}

PVector add_vec(const PVector& a, const PVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch();
    PVector out;
    out.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
    return out;
}

bool vec_is_zero(const PVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Polynomial& f) { return f.is_zero(); });
}

int max_degree(const PSequence& seq) {
    int d = -1;
    for (const auto& v : seq) {
        for (const auto& f : v) d = std::max(d, f.degree());
    }
    return d;
}

MembershipResult p_span_membership(const PVector& w, const PSequence& gens, int degree_bound) {
    if (w.empty()) return {true, std::vector<Polynomial>()};
    const Ring& ring = w[0].ring();
    check_inputs(ring, w, gens);

    int present = max_degree(gens);
    for (const auto& f : w) present = std::max(present, f.degree());
    if (present > degree_bound) {
        throw BoundTooSmall("degree bound " + std::to_string(degree_bound) +
                            " below a degree-" + std::to_string(present) + " input");
    }

    std::vector<Polynomial> zero_witness(gens.size(), Polynomial::zero(ring));
    if (vec_is_zero(w)) return {true, zero_witness};
    if (gens.empty() || degree_bound < 0) return {false, {}};
    for (size_t j = 0; j < gens.size(); ++j) {
        if (gens[j] == w) {
            auto witness = zero_witness;
            witness[j] = Polynomial::constant(ring, 1);
            return {true, std::move(witness)};
        }
    }

    size_t width = static_cast<size_t>(degree_bound) + 1;
    FlatSystem fs = flatten(w, gens, degree_bound);

    // combination with unconstrained ring coefficients: a digit solution is
    // in particular a ring solution, so failure here is conclusive
    if (!const_solve(const_diagonalize(ring, fs.c), fs.target)) return {false, {}};

    Ring fp = make_ring(ring->p(), 1);
    auto dp = const_diagonalize(fp, project_mat(ring, fs.c));
    std::vector<uint64_t> target_p(fs.target.size());
    for (size_t i = 0; i < fs.target.size(); ++i) target_p[i] = fs.target[i] % ring->p();
    auto x0 = const_solve(dp, target_p);
    if (!x0) return {false, {}};

    auto hit = digit_search(ring, fs.c, fs.target, *x0, const_kernel(dp), false);
    if (!hit) return {false, {}};
    return {true, witness_from_digits(ring, *hit, gens.size(), width)};
}

bool is_p_generator_sequence(const PSequence& seq) {
    if (seq.empty()) return true;
    const Ring& ring = seq[0][0].ring();
    int bound = std::max(0, max_degree(seq));
    for (size_t i = 0; i < seq.size(); ++i) {
        PVector target = scale_vec(seq[i], ring->p());
        if (i + 1 == seq.size()) {
            if (!vec_is_zero(target)) return false;
            continue;
        }
        PSequence later(seq.begin() + static_cast<ptrdiff_t>(i) + 1, seq.end());
        if (!p_span_membership(target, later, bound).member) return false;
    }
    return true;
}

PSequence expand_to_p_generator_sequence(const PSequence& gens, bool drop_zeros) {
    PSequence out;
    if (gens.empty()) return out;
    const Ring& ring = gens[0][0].ring();
    for (const auto& v : gens) {
        for (uint32_t t = 0; t < ring->r(); ++t) {
            PVector u = scale_vec(v, ring->ppow(t));
            if (drop_zeros && vec_is_zero(u)) continue;
            out.push_back(std::move(u));
        }
    }
    return out;
}

bool is_p_linearly_independent(const PSequence& seq, int degree_bound) {
    if (seq.empty()) return true;
    const Ring& ring = seq[0][0].ring();
    {
        PVector dummy(seq[0].size(), Polynomial::zero(ring));
        check_inputs(ring, dummy, seq);
    }
    if (max_degree(seq) > degree_bound) {
        throw BoundTooSmall("degree bound " + std::to_string(degree_bound) +
                            " below a degree-" + std::to_string(max_degree(seq)) + " input");
    }
    for (const auto& v : seq) {
        if (vec_is_zero(v)) return false;
    }

    // ladder fast path: when the sequence splits into runs (h, ph, p^2 h, ...)
    // that each end at zero, any digit relation descends to an F_p(D)-relation
    // among the de-scaled heads, so full mod-p rank proves independence
    // outright (for witnesses of every degree)
    {
        const uint32_t r = ring->r();
        std::vector<PVector> heads;
        std::vector<uint32_t> lens;
        bool runs_ok = true;
        size_t i = 0;
        while (i < seq.size()) {
            uint32_t len = 1;
            while (i + len < seq.size() && seq[i + len] == scale_vec(seq[i + len - 1], ring->p())) ++len;
            if (!vec_is_zero(scale_vec(seq[i], ring->ppow(std::min(len, r))))) {
                runs_ok = false;
                break;
            }
            heads.push_back(seq[i]);
            lens.push_back(len);
            i += len;
        }
        if (runs_ok) {
            std::vector<std::vector<Polynomial>> rows;
            for (size_t h = 0; h < heads.size(); ++h) {
                PVector d;
                for (const auto& f : heads[h]) d.push_back(f.divide_by_ppow(r - lens[h]));
                rows.push_back(std::move(d));
            }
            PolyMatrix stacked = PolyMatrix::from_rows(ring, std::move(rows));
            if (rank_mod_p(stacked) == heads.size()) return true;
        }
    }

    PVector zero(seq[0].size(), Polynomial::zero(ring));
    FlatSystem fs = flatten(zero, seq, degree_bound);
    Ring fp = make_ring(ring->p(), 1);
    auto dp = const_diagonalize(fp, project_mat(ring, fs.c));
    auto kernel = const_kernel(dp);
    if (kernel.empty()) return true;
    std::vector<uint64_t> x0(fs.unknowns, 0);
    auto hit = digit_search(ring, fs.c, fs.target, x0, kernel, true);
    return !hit.has_value();
}

uint64_t p_dimension_formula(const std::vector<size_t>& k_list) {
    uint64_t total = 0;
    size_t r = k_list.size();
    for (size_t i = 0; i < r; ++i) {
        total += (r - i) * static_cast<uint64_t>(k_list[i]);
    }
    return total;
}

}  // namespace zprconv
