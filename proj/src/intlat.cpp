#include "cp2b/intlat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cp2b {

Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(abs(a), abs(b)); }

Int int_lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::lcm(abs(a), abs(b));
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;  // truncated
    if (q * b != a && ((a < 0) != (b < 0))) --q;
    return q;
}

IntMat::IntMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMat IntMat::diagonal(const IntVec& d) {
    IntMat m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

IntMat IntMat::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMat m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("IntMat: ragged row list");
        std::size_t j = 0;
        for (long long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
    IntMat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("IntMat: ragged row list");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntVec IntMat::row(std::size_t i) const {
    return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

bool IntMat::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Int& v) { return v == 0; });
}

void IntMat::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMat::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMat::submul_row(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) -= q * (*this)(src, c);
}

IntMat IntMat::operator*(const IntMat& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMat: dimension mismatch in product");
    IntMat out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

std::string IntMat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

Int det(const IntMat& m) {
    if (!m.is_square()) throw std::invalid_argument("det: matrix not square");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination; all divisions are exact.
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntMat& m) {
    if (!m.is_square()) return false;
    Int d = det(m);
    return d == 1 || d == -1;
}

namespace {

// g = gcd(a, b) >= 0 together with p, q satisfying p*a + q*b = g.
struct ExtGcd {
    Int g, p, q;
};

ExtGcd gcdext(const Int& a, const Int& b) {
    Int old_r = a, r = b, old_p = 1, p = 0, old_q = 0, q = 1;
    while (r != 0) {
        Int quot = old_r / r;
        old_r -= quot * r;
        std::swap(old_r, r);
        old_p -= quot * p;
        std::swap(old_p, p);
        old_q -= quot * q;
        std::swap(old_q, q);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_p = -old_p;
        old_q = -old_q;
    }
    return {std::move(old_r), std::move(old_p), std::move(old_q)};
}

// Unimodular update of rows (i0, i1) of every matrix in ms:
//   row_i0' = p*row_i0 + q*row_i1,  row_i1' = ag*row_i1 - bg*row_i0
// with p*ag + q*bg = 1. Realizes gcd(a, b) at the pivot in one step, which
// keeps entry growth polynomial (a remainder-chain loop of full-row updates
// blows entries up doubly exponentially).
void combine_rows(std::initializer_list<IntMat*> ms, std::size_t i0, std::size_t i1,
                  const Int& p, const Int& q, const Int& ag, const Int& bg) {
    for (IntMat* m : ms)
        for (std::size_t c = 0; c < m->cols(); ++c) {
            Int tmp = p * (*m)(i0, c) + q * (*m)(i1, c);
            (*m)(i1, c) = ag * (*m)(i1, c) - bg * (*m)(i0, c);
            (*m)(i0, c) = std::move(tmp);
        }
}

// Clears h(i, c) against the pivot h(pivot_row, c): an exact single row
// subtraction when the pivot divides, a combined gcd update otherwise.
void eliminate_below(IntMat& h, IntMat& u, std::size_t pivot_row, std::size_t i,
                     std::size_t c) {
    const Int& a = h(pivot_row, c);
    const Int& b = h(i, c);
    Int q = b / a;
    if (q * a == b) {
        h.submul_row(i, pivot_row, q);
        u.submul_row(i, pivot_row, q);
        return;
    }
    ExtGcd e = gcdext(a, b);
    combine_rows({&h, &u}, pivot_row, i, e.p, e.q, a / e.g, b / e.g);
}

}  // namespace

HnfResult hnf(const IntMat& m) {
    IntMat h = m;
    IntMat u = IntMat::identity(m.rows());
    std::size_t rank = 0;
    for (std::size_t c = 0; c < h.cols() && rank < h.rows(); ++c) {
        std::size_t best = h.rows();
        for (std::size_t i = rank; i < h.rows(); ++i) {
            if (h(i, c) == 0) continue;
            if (best == h.rows() || abs(h(i, c)) < abs(h(best, c))) best = i;
        }
        if (best == h.rows()) continue;  // no pivot in this column
        h.swap_rows(rank, best);
        u.swap_rows(rank, best);
        for (std::size_t i = rank + 1; i < h.rows(); ++i)
            if (h(i, c) != 0) eliminate_below(h, u, rank, i, c);
        if (h(rank, c) < 0) {
            h.negate_row(rank);
            u.negate_row(rank);
        }
        for (std::size_t i = 0; i < rank; ++i) {
            Int q = floor_div(h(i, c), h(rank, c));
            h.submul_row(i, rank, q);
            u.submul_row(i, rank, q);
        }
        ++rank;
    }
    return {std::move(h), std::move(u)};
}

IntMat hnf_basis(const IntMat& m) {
    IntMat h = hnf(m).h;
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        IntVec r = h.row(i);
        if (std::any_of(r.begin(), r.end(), [](const Int& v) { return v != 0; }))
            rows.push_back(std::move(r));
    }
    return IntMat::from_rows(rows, m.cols());
}

SnfResult snf(const IntMat& m) {
    IntMat d = m;
    IntMat u = IntMat::identity(m.rows());
    IntMat v = IntMat::identity(m.cols());

    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < d.rows(); ++i) std::swap(d(i, a), d(i, b));
        for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v(i, a), v(i, b));
    };
    // column analogue of combine_rows: col_t' = p col_t + q col_j,
    // col_j' = ag col_j - bg col_t
    auto combine_cols = [&](std::size_t j0, std::size_t j1, const Int& p, const Int& q,
                            const Int& ag, const Int& bg) {
        for (IntMat* mm : {&d, &v})
            for (std::size_t i = 0; i < mm->rows(); ++i) {
                Int tmp = p * (*mm)(i, j0) + q * (*mm)(i, j1);
                (*mm)(i, j1) = ag * (*mm)(i, j1) - bg * (*mm)(i, j0);
                (*mm)(i, j0) = std::move(tmp);
            }
    };
    auto submul_col = [&](std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < d.rows(); ++i) d(i, dst) -= q * d(i, src);
        for (std::size_t i = 0; i < v.rows(); ++i) v(i, dst) -= q * v(i, src);
    };

    std::size_t nmin = std::min(d.rows(), d.cols());
    for (std::size_t t = 0; t < nmin; ++t) {
        // move a nonzero entry of smallest magnitude into position (t, t)
        std::size_t pi = d.rows(), pj = d.cols();
        for (std::size_t i = t; i < d.rows(); ++i)
            for (std::size_t j = t; j < d.cols(); ++j)
                if (d(i, j) != 0 && (pi == d.rows() || abs(d(i, j)) < abs(d(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi == d.rows()) break;  // remaining block is zero
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        swap_cols(t, pj);

        // Alternate clearing column t and row t. Every combined-gcd step
        // properly divides the pivot, so only finitely many passes dirty
        // the other line; the final pass leaves both clear.
        for (;;) {
            for (std::size_t i = t + 1; i < d.rows(); ++i)
                if (d(i, t) != 0) eliminate_below(d, u, t, i, t);

            bool column_dirtied = false;
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d(t, j) == 0) continue;
                const Int& a = d(t, t);
                const Int& b = d(t, j);
                Int q = b / a;
                if (q * a == b) {
                    // column t holds only the pivot, so no fill-in occurs
                    submul_col(j, t, q);
                } else {
                    ExtGcd e = gcdext(a, b);
                    combine_cols(t, j, e.p, e.q, a / e.g, b / e.g);
                    column_dirtied = true;
                }
            }
            if (column_dirtied) continue;

            // pivot must divide the remaining block for d1 | d2 | ...
            bool fixed = true;
            for (std::size_t i = t + 1; i < d.rows() && fixed; ++i)
                for (std::size_t j = t + 1; j < d.cols() && fixed; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        for (std::size_t c = 0; c < d.cols(); ++c) d(t, c) += d(i, c);
                        for (std::size_t c = 0; c < u.cols(); ++c) u(t, c) += u(i, c);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    return {std::move(d), std::move(u), std::move(v)};
}

bool lattice_equal(const IntMat& a, const IntMat& b) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("lattice_equal: ambient dimensions differ");
    return hnf_basis(a) == hnf_basis(b);
}

FinAbGroup::FinAbGroup(IntVec invariant_factors, std::size_t free_rank)
    : factors_(std::move(invariant_factors)), free_rank_(free_rank) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2) throw std::invalid_argument("FinAbGroup: invariant factor < 2");
        if (i > 0 && factors_[i] % factors_[i - 1] != 0)
            throw std::invalid_argument("FinAbGroup: divisibility chain violated");
    }
}

FinAbGroup FinAbGroup::from_cyclic_orders(const IntVec& orders, std::size_t free_rank) {
    IntVec diag;
    for (const Int& o : orders) {
        if (o < 0) throw std::invalid_argument("FinAbGroup: negative cyclic order");
        diag.push_back(o);
    }
    SnfResult s = snf(IntMat::diagonal(diag));
    IntVec factors;
    std::size_t zeros = 0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        const Int& di = s.d(i, i);
        if (di == 0)
            ++zeros;
        else if (di > 1)
            factors.push_back(di);
    }
    return FinAbGroup(std::move(factors), free_rank + zeros);
}

std::string FinAbGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Int& f : factors_) {
        os << (first ? "" : " ⊕ ") << "Z_" << f;
        first = false;
    }
    if (free_rank_ > 0) {
        os << (first ? "" : " ⊕ ") << "Z";
        if (free_rank_ > 1) os << "^" << free_rank_;
    }
    return os.str();
}

FinAbGroup quotient_group(std::size_t n, const IntMat& l) {
    if (l.cols() != n) throw std::invalid_argument("quotient_group: column count != n");
    SnfResult s = snf(l);
    IntVec factors;
    std::size_t rank = 0;
    for (std::size_t i = 0; i < std::min(l.rows(), n); ++i) {
        const Int& di = s.d(i, i);
        if (di == 0) continue;
        ++rank;
        if (di > 1) factors.push_back(di);
    }
    return FinAbGroup(std::move(factors), n - rank);
}

std::optional<Int> element_order(const IntVec& v, const IntMat& l) {
    if (v.size() != l.cols()) throw std::invalid_argument("element_order: length mismatch");
    SnfResult s = snf(l);
    // w = v * V: membership of m*v in rowspan(l) becomes d_j | m*w_j per coordinate
    IntVec w(l.cols());
    for (std::size_t j = 0; j < l.cols(); ++j)
        for (std::size_t i = 0; i < l.cols(); ++i) w[j] += v[i] * s.v(i, j);
    Int order = 1;
    for (std::size_t j = 0; j < l.cols(); ++j) {
        Int dj = j < l.rows() ? s.d(j, j) : Int(0);
        if (dj == 0) {
            if (w[j] != 0) return std::nullopt;
        } else {
            order = int_lcm(order, dj / int_gcd(dj, w[j]));
        }
    }
    return order;
}

bool in_span(const IntVec& v, const IntMat& l) {
    if (v.size() != l.cols()) throw std::invalid_argument("in_span: length mismatch");
    IntMat h = hnf_basis(l);
    IntVec w = v;
    std::size_t r = 0;
    for (std::size_t c = 0; c < w.size(); ++c) {
        if (r < h.rows() && h(r, c) != 0) {
            if (w[c] % h(r, c) != 0) return false;
            Int q = w[c] / h(r, c);
            for (std::size_t j = c; j < w.size(); ++j) w[j] -= q * h(r, j);
            ++r;
        } else if (w[c] != 0) {
            return false;  // column has no pivot: coordinate cannot be cleared
        }
    }
    return true;
}

}  // namespace cp2b
