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

#include "zprconv/matrix.hpp"

#include <algorithm>
#include <utility>

namespace zprconv {

/* PolyMatrix */

PolyMatrix::PolyMatrix(Ring ring, size_t rows, size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), e_(rows * cols, Polynomial::zero(ring_)) {}

PolyMatrix PolyMatrix::identity(const Ring& ring, size_t n) {
    PolyMatrix m(ring, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(ring, 1);
    return m;
}

PolyMatrix PolyMatrix::from_rows(const Ring& ring, std::vector<std::vector<Polynomial>> rows) {
    size_t r = rows.size();
    size_t c = r == 0 ? 0 : rows[0].size();
    PolyMatrix m(ring, r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionMismatch();
        for (size_t j = 0; j < c; ++j) {
            require_same(ring, rows[i][j].ring());
            m.at(i, j) = std::move(rows[i][j]);
        }
    }
    return m;
}

PolyMatrix PolyMatrix::from_const(const Ring& ring, const ConstMat& cm) {
    PolyMatrix m(ring, cm.rows, cm.cols);
    for (size_t i = 0; i < cm.rows; ++i) {
        for (size_t j = 0; j < cm.cols; ++j) m.at(i, j) = Polynomial::constant(ring, cm.at(i, j));
    }
    return m;
}

std::vector<Polynomial> PolyMatrix::row(size_t i) const {
    return std::vector<Polynomial>(e_.begin() + static_cast<ptrdiff_t>(i * cols_),
                                   e_.begin() + static_cast<ptrdiff_t>((i + 1) * cols_));
}

bool PolyMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Polynomial& f) { return f.is_zero(); });
}

bool PolyMatrix::is_constant() const {
    return std::all_of(e_.begin(), e_.end(), [](const Polynomial& f) { return f.is_constant(); });
}

ConstMat PolyMatrix::const_view() const {
    ConstMat m(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).constant_value();
    }
    return m;
}

int PolyMatrix::max_degree() const {
    int d = -1;
    for (const auto& f : e_) d = std::max(d, f.degree());
    return d;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix m(ring_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    }
    return m;
}

PolyMatrix PolyMatrix::mod_p_project() const {
    Ring fp = make_ring(ring_->p(), 1);
    PolyMatrix m(fp, rows_, cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).mod_p_project();
    }
    return m;
}

PolyMatrix PolyMatrix::scaled(uint64_t c) const {
    PolyMatrix m(ring_, rows_, cols_);
    for (size_t i = 0; i < rows_ * cols_; ++i) m.e_[i] = e_[i].scaled(c);
    return m;
}

PolyMatrix PolyMatrix::vstack(const PolyMatrix& below) const {
    require_same(ring_, below.ring_);
    if (cols_ != below.cols_) throw DimensionMismatch();
    PolyMatrix m(ring_, rows_ + below.rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (size_t i = 0; i < below.rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(rows_ + i, j) = below.at(i, j);
    return m;
}

PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
    require_same(x.ring_, y.ring_);
    if (x.cols_ != y.rows_) throw DimensionMismatch();
    PolyMatrix out(x.ring_, x.rows_, y.cols_);
    for (size_t i = 0; i < x.rows_; ++i) {
        for (size_t l = 0; l < x.cols_; ++l) {
            if (x.at(i, l).is_zero()) continue;
            for (size_t j = 0; j < y.cols_; ++j) {
                out.at(i, j) = out.at(i, j) + x.at(i, l) * y.at(l, j);
            }
        }
    }
    return out;
}

bool operator==(const PolyMatrix& x, const PolyMatrix& y) {
    if (!x.ring_->same(*y.ring_) || x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
    return x.e_ == y.e_;
}

std::string PolyMatrix::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < rows_; ++i) {
        if (i) s += ", ";
        s += "[";
        for (size_t j = 0; j < cols_; ++j) {
            if (j) s += ", ";
            s += at(i, j).to_string();
        }
        s += "]";
    }
    return s + "]";
}

/* RationalMatrix */

RationalMatrix::RationalMatrix(Ring ring, size_t rows, size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), e_(rows * cols, RationalFunction::zero(ring_)) {}

RationalMatrix RationalMatrix::identity(const Ring& ring, size_t n) {
    RationalMatrix m(ring, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = RationalFunction::one(ring);
    return m;
}

RationalMatrix RationalMatrix::from_poly(const PolyMatrix& p) {
    RationalMatrix m(p.ring(), p.rows(), p.cols());
    for (size_t i = 0; i < p.rows(); ++i) {
        for (size_t j = 0; j < p.cols(); ++j) m.at(i, j) = RationalFunction::from_poly(p.at(i, j));
    }
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix m(ring_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    }
    return m;
}

RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
    require_same(x.ring_, y.ring_);
    if (x.cols_ != y.rows_) throw DimensionMismatch();
    RationalMatrix out(x.ring_, x.rows_, y.cols_);
    for (size_t i = 0; i < x.rows_; ++i) {
        for (size_t l = 0; l < x.cols_; ++l) {
            if (x.at(i, l).is_zero()) continue;
            for (size_t j = 0; j < y.cols_; ++j) {
                out.at(i, j) = out.at(i, j) + x.at(i, l) * y.at(l, j);
            }
        }
    }
    return out;
}

bool operator==(const RationalMatrix& x, const RationalMatrix& y) {
    if (!x.ring_->same(*y.ring_) || x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
    for (size_t i = 0; i < x.e_.size(); ++i) {
        if (x.e_[i] != y.e_[i]) return false;
    }
    return true;
}

std::vector<RationalFunction> row_times(const std::vector<RationalFunction>& v, const RationalMatrix& m) {
    if (v.size() != m.rows()) throw DimensionMismatch();
    std::vector<RationalFunction> out(m.cols(), RationalFunction::zero(m.ring()));
    for (size_t l = 0; l < v.size(); ++l) {
        if (v[l].is_zero()) continue;
        for (size_t j = 0; j < m.cols(); ++j) out[j] = out[j] + v[l] * m.at(l, j);
    }
    return out;
}

RationalMatrix ChainDiagonalization::reconstruct() const {
    const Ring& ring = U.ring();
    RationalMatrix delta(ring, U.rows(), V.rows());
    for (size_t i = 0; i < exponents.size(); ++i) {
        delta.at(i, i) = RationalFunction::constant(ring, ring->ppow(exponents[i]));
    }
    return U * delta * V;
}

/* elimination algorithms */

namespace {

// product of the maximal denominators among row entries from col_lo on;
// every denominator there divides the result. Divisible ones are dropped
// first, since one elimination chain stacks nested products and taking all
// of them verbatim compounds degrees for nothing.
Polynomial row_denominator(const RationalMatrix& m, size_t row, size_t col_lo) {
    const Ring& ring = m.ring();
    std::vector<Polynomial> dens;
    for (size_t j = col_lo; j < m.cols(); ++j) {
        const Polynomial& den = m.at(row, j).den();
        if (den.degree() == 0 && den.coeff(0) == 1) continue;
        bool seen = false;
        for (const auto& d : dens) {
            if (d == den) {
                seen = true;
                break;
            }
        }
        if (!seen) dens.push_back(den);
    }
    Polynomial prod = Polynomial::constant(ring, 1);
    for (size_t a = 0; a < dens.size(); ++a) {
        bool redundant = false;
        for (size_t b = 0; b < dens.size() && !redundant; ++b) {
            if (a == b) continue;
            if (try_exact_div(dens[b], dens[a])) {
                if (try_exact_div(dens[a], dens[b]) && a < b) continue;
                redundant = true;
            }
        }
        if (!redundant) prod = prod * dens[a];
    }
    return prod;
}

}  // namespace

size_t rank_mod_p(const PolyMatrix& m) {
    RationalMatrix a = RationalMatrix::from_poly(m.mod_p_project());
    size_t rank = 0;
    for (size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        size_t piv = a.rows();
        for (size_t i = rank; i < a.rows(); ++i) {
            if (!a.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv == a.rows()) continue;
        for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(rank, j));
        RationalFunction inv = a.at(rank, col).inverse();
        for (size_t i = rank + 1; i < a.rows(); ++i) {
            if (a.at(i, col).is_zero()) continue;
            RationalFunction f = a.at(i, col) * inv;
            for (size_t j = col; j < a.cols(); ++j) {
                a.at(i, j) = a.at(i, j) - f * a.at(rank, j);
            }
        }
        ++rank;
    }
    return rank;
}

bool full_row_rank(const PolyMatrix& m) { return rank_mod_p(m) == m.rows(); }

ChainDiagonalization chain_diagonalize(const PolyMatrix& m) {
    const Ring& ring = m.ring();
    size_t k = m.rows(), n = m.cols();
    RationalMatrix a = RationalMatrix::from_poly(m);
    ChainDiagonalization d{RationalMatrix::identity(ring, k),
                           {},
                           RationalMatrix::identity(ring, n),
                           RationalMatrix::identity(ring, n)};

    // The working matrix and V_inv stay polynomial through the whole
    // elimination: a column with a nonzero entry in the pivot row is scaled
    // by the pivot unit before the pivot column is subtracted, so no entry
    // ever needs a denominator. The unit inverses land in U and V instead,
    // the two factors nothing performance-critical reads. The scaled updates
    // are the fraction-free elimination scheme, and dividing each updated row
    // by the previous pivot unit afterwards (the determinant identity behind
    // fraction-free elimination makes that division exact) keeps entry
    // degrees growing linearly with the step count instead of doubling.
    Polynomial prev_unit = Polynomial::constant(ring, 1);

    size_t steps = std::min(k, n);
    for (size_t step = 0; step < steps; ++step) {
        uint32_t best = ring->r();
        size_t pi = step, pj = step;
        for (size_t i = step; i < k; ++i) {
            for (size_t j = step; j < n; ++j) {
                uint32_t v = a.at(i, j).valuation();
                if (v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (best == ring->r()) break;

        if (pi != step) {
            // row swap on a; U picks up the inverse as a column swap
            for (size_t j = 0; j < n; ++j) std::swap(a.at(pi, j), a.at(step, j));
            for (size_t i = 0; i < k; ++i) std::swap(d.U.at(i, pi), d.U.at(i, step));
        }
        if (pj != step) {
            for (size_t i = 0; i < k; ++i) std::swap(a.at(i, pj), a.at(i, step));
            for (size_t j = 0; j < n; ++j) std::swap(d.V.at(pj, j), d.V.at(step, j));
            for (size_t i = 0; i < n; ++i) std::swap(d.V_inv.at(i, pj), d.V_inv.at(i, step));
        }

        // pivot = p^best · u with u a Laurent unit
        Polynomial u = a.at(step, step).num().divide_by_ppow(best);
        RationalFunction e = RationalFunction::from_poly(u);
        RationalFunction u_inv = e.inverse();

        // clear the pivot row: column j becomes u·(column j) − w_j·(column
        // step), a polynomial combination that kills the pivot row entry.
        // V_inv tracks the same column operation; V picks up the inverse
        for (size_t j = step + 1; j < n; ++j) {
            if (a.at(step, j).is_zero()) continue;
            Polynomial w = a.at(step, j).num().divide_by_ppow(best);
            RationalFunction wr = RationalFunction::from_poly(w);
            a.at(step, j) = RationalFunction::zero(ring);
            for (size_t i = step + 1; i < k; ++i) {
                a.at(i, j) = a.at(i, j) * e - wr * a.at(i, step);
            }
            for (size_t i = 0; i < n; ++i) {
                d.V_inv.at(i, j) = d.V_inv.at(i, j) * e - wr * d.V_inv.at(i, step);
            }
            RationalFunction mult = wr * u_inv;
            for (size_t l = 0; l < n; ++l) {
                d.V.at(step, l) = d.V.at(step, l) + mult * d.V.at(j, l);
            }
            for (size_t l = 0; l < n; ++l) {
                d.V.at(j, l) = d.V.at(j, l) * u_inv;
            }
        }

        // clear the pivot column: with the pivot row already zero past the
        // pivot, subtracting (w_i/u)·(row step) only touches the pivot entry
        for (size_t i = step + 1; i < k; ++i) {
            if (a.at(i, step).is_zero()) continue;
            RationalFunction mult = a.at(i, step).divide_by_ppow(best) * u_inv;
            a.at(i, step) = RationalFunction::zero(ring);
            for (size_t l = 0; l < k; ++l) {
                d.U.at(l, step) = d.U.at(l, step) + mult * d.U.at(l, i);
            }
        }

        // normalize the pivot to exactly p^best
        a.at(step, step) = RationalFunction::constant(ring, ring->ppow(best));
        for (size_t l = 0; l < k; ++l) d.U.at(l, step) = d.U.at(l, step) * e;

        // divide each updated row by the previous pivot unit, committing only
        // when every entry divides exactly; the inverse scaling goes into the
        // matching column of U, which stays invertible because the unit part
        // of a pivot is a unit of the Laurent ring
        if (prev_unit.degree() > 0) {
            RationalFunction inv_prev(Polynomial::constant(ring, 1), prev_unit);
            RationalFunction back = RationalFunction::from_poly(prev_unit);
            std::vector<RationalFunction> divided;
            for (size_t i = step + 1; i < k; ++i) {
                divided.clear();
                bool all_polynomial = true;
                for (size_t j = step + 1; j < n && all_polynomial; ++j) {
                    RationalFunction y = a.at(i, j) * inv_prev;
                    if (!y.den().is_constant()) all_polynomial = false;
                    divided.push_back(std::move(y));
                }
                if (!all_polynomial) continue;
                for (size_t j = step + 1; j < n; ++j) a.at(i, j) = divided[j - step - 1];
                for (size_t l = 0; l < k; ++l) {
                    if (!d.U.at(l, i).is_zero()) d.U.at(l, i) = d.U.at(l, i) * back;
                }
            }
        }
        prev_unit = u;

        d.exponents.push_back(best);
    }
    return d;
}

PolyMatrix complete_to_invertible(const PolyMatrix& g) {
    const Ring& ring = g.ring();
    size_t k = g.rows(), n = g.cols();

    // pivot columns of the mod-p projection over F_p(D)
    RationalMatrix a = RationalMatrix::from_poly(g.mod_p_project());
    std::vector<bool> is_pivot(n, false);
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < k; ++col) {
        size_t piv = k;
        for (size_t i = rank; i < k; ++i) {
            if (!a.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv == k) continue;
        for (size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(rank, j));
        RationalFunction inv = a.at(rank, col).inverse();
        for (size_t i = rank + 1; i < k; ++i) {
            if (a.at(i, col).is_zero()) continue;
            RationalFunction f = a.at(i, col) * inv;
            for (size_t j = col; j < n; ++j) a.at(i, j) = a.at(i, j) - f * a.at(rank, j);
        }
        is_pivot[col] = true;
        ++rank;
    }
    if (rank < k) throw NotFullRowRank();

    PolyMatrix l(ring, n - k, n);
    size_t row = 0;
    for (size_t col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        l.at(row, col) = Polynomial::constant(ring, 1);
        ++row;
    }
    return l;
}

RationalMatrix invert_matrix(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch();
    size_t n = m.rows();
    RationalMatrix a = m;
    RationalMatrix b = RationalMatrix::identity(m.ring(), n);
    for (size_t step = 0; step < n; ++step) {
        size_t piv = n;
        for (size_t i = step; i < n; ++i) {
            if (a.at(i, step).valuation() == 0) {
                piv = i;
                break;
            }
        }
        if (piv == n) throw SingularMatrix();
        if (piv != step) {
            for (size_t j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(step, j));
                std::swap(b.at(piv, j), b.at(step, j));
            }
        }
        RationalFunction inv = a.at(step, step).inverse();
        for (size_t j = 0; j < n; ++j) {
            a.at(step, j) = a.at(step, j) * inv;
            b.at(step, j) = b.at(step, j) * inv;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == step || a.at(i, step).is_zero()) continue;
            RationalFunction f = a.at(i, step);
            for (size_t j = 0; j < n; ++j) {
                a.at(i, j) = a.at(i, j) - f * a.at(step, j);
                b.at(i, j) = b.at(i, j) - f * b.at(step, j);
            }
        }
        // unit row scalings; rows below the pivot get normalized later, so
        // clearing their denominators now keeps the eliminations cheap
        auto scale_pair_row = [&](size_t i, const Polynomial& prod) {
            if (prod.degree() == 0) return;
            RationalFunction s = RationalFunction::from_poly(prod);
            for (size_t j = 0; j < n; ++j) {
                if (!a.at(i, j).is_zero()) a.at(i, j) = a.at(i, j) * s;
                if (!b.at(i, j).is_zero()) b.at(i, j) = b.at(i, j) * s;
            }
        };
        for (size_t i = step + 1; i < n; ++i) {
            scale_pair_row(i, row_denominator(a, i, 0));
            scale_pair_row(i, row_denominator(b, i, 0));
        }
    }
    return b;
}

PolyMatrix clear_denominators(const RationalMatrix& nm) {
    const Ring& ring = nm.ring();
    PolyMatrix out(ring, nm.rows(), nm.cols());
    for (size_t i = 0; i < nm.rows(); ++i) {
        Polynomial prod = row_denominator(nm, i, 0);
        for (size_t j = 0; j < nm.cols(); ++j) {
            const RationalFunction& x = nm.at(i, j);
            auto q = try_exact_div(prod, x.den());
            if (!q) throw Error("row denominator does not divide the collected product");
            out.at(i, j) = x.num() * *q;
        }
        size_t shift = SIZE_MAX;
        for (size_t j = 0; j < nm.cols(); ++j) {
            if (!out.at(i, j).is_zero()) shift = std::min(shift, out.at(i, j).low_degree());
        }
        if (shift != SIZE_MAX && shift > 0) {
            for (size_t j = 0; j < nm.cols(); ++j) {
                const Polynomial& f = out.at(i, j);
                if (f.is_zero()) continue;
                std::vector<uint64_t> c(f.coeffs().begin() + static_cast<ptrdiff_t>(shift),
                                        f.coeffs().end());
                out.at(i, j) = Polynomial(ring, std::move(c));
            }
        }
    }
    return out;
}

PolyMatrix reduce_row_degrees(const PolyMatrix& g) {
    const Ring& ring = g.ring();
    size_t k = g.rows(), n = g.cols();
    if (k < 2) return g;
    PolyMatrix a = g;

    auto row_degree = [&](size_t i) {
        int d = -1;
        for (size_t j = 0; j < n; ++j) d = std::max(d, a.at(i, j).degree());
        return d;
    };
    // rightmost column whose entry attains the row degree
    auto pivot_col = [&](size_t i, int d) {
        size_t col = 0;
        for (size_t j = 0; j < n; ++j) {
            if (a.at(i, j).degree() == d) col = j;
        }
        return col;
    };

    // when two rows share a pivot column, subtract a shifted multiple of the
    // lower-degree row so the leading coefficient of the higher one vanishes;
    // the multiplier exists whenever the lower lead has no larger p-valuation.
    // each operation lowers the pair (row degree, pivot column) of its target
    // row lexicographically, so the loop terminates
    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t i = 0; i < k; ++i) {
            int di = row_degree(i);
            if (di < 0) continue;
            size_t pi = pivot_col(i, di);
            for (size_t j = 0; j < k; ++j) {
                if (j == i) continue;
                int dj = row_degree(j);
                if (dj < 0 || dj > di) continue;
                if (pivot_col(j, dj) != pi) continue;
                uint64_t lead_i = a.at(i, pi).coeff(static_cast<size_t>(di));
                uint64_t lead_j = a.at(j, pi).coeff(static_cast<size_t>(dj));
                uint32_t vj = ring->valuation(lead_j);
                if (ring->valuation(lead_i) < vj) continue;
                uint64_t c = ring->mul(lead_i / ring->ppow(vj), ring->inv(lead_j / ring->ppow(vj)));
                size_t shift = static_cast<size_t>(di - dj);
                for (size_t t = 0; t < n; ++t) {
                    a.at(i, t) = a.at(i, t) - a.at(j, t).scaled(c).shifted(shift);
                }
                progress = true;
                di = row_degree(i);
                if (di < 0) break;
                pi = pivot_col(i, di);
            }
        }
    }
    return a;
}

}  // namespace zprconv
