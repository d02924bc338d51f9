#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace cp2b {

/// Arbitrary-precision integer. All arithmetic in this library is exact;
/// fixed-width wraparound cannot occur.
using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

/// gcd with the usual conventions gcd(a,0) = |a|, gcd(0,0) = 0.
Int int_gcd(const Int& a, const Int& b);
Int int_lcm(const Int& a, const Int& b);

/// Quotient rounding toward negative infinity (b > 0 in all internal uses).
Int floor_div(const Int& a, const Int& b);

/// Dense row-major matrix over the integers.
class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols);

    static IntMat identity(std::size_t n);
    static IntMat diagonal(const IntVec& d);
    static IntMat from_rows(std::initializer_list<std::initializer_list<long long>> rows);
    /// Builds from a row list; `cols` disambiguates the empty matrix.
    static IntMat from_rows(const std::vector<IntVec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVec row(std::size_t i) const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    void swap_rows(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    /// row(dst) -= q * row(src)
    void submul_row(std::size_t dst, std::size_t src, const Int& q);

    IntMat operator*(const IntMat& rhs) const;
    bool operator==(const IntMat& rhs) const = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    IntVec data_;
};

/// Exact determinant (fraction-free elimination). Requires a square matrix.
Int det(const IntMat& m);
bool is_unimodular(const IntMat& m);

/// Row-style Hermite normal form: u unimodular, u*m = h, h in row echelon
/// form with positive pivots and the entries above each pivot reduced into
/// [0, pivot). h is a canonical representative of the row lattice of m, so
/// two matrices span the same lattice iff their HNFs agree up to zero rows.
struct HnfResult {
    IntMat h;
    IntMat u;
};
HnfResult hnf(const IntMat& m);

/// HNF with zero rows dropped: the canonical basis of the row lattice.
IntMat hnf_basis(const IntMat& m);

/// Smith normal form: u, v unimodular, u*m*v = d diagonal with nonnegative
/// entries d1 | d2 | ..., zero entries last.
struct SnfResult {
    IntMat d;
    IntMat u;
    IntMat v;
};
SnfResult snf(const IntMat& m);

/// True iff the rows of a and b span the same sublattice of Z^n.
/// Requires equal column counts.
bool lattice_equal(const IntMat& a, const IntMat& b);

/// Finitely generated abelian group in invariant-factor form:
/// Z_{d1} + ... + Z_{dm} + Z^f with 2 <= d1 | d2 | ... | dm.
class FinAbGroup {
public:
    FinAbGroup() = default;  // trivial group
    FinAbGroup(IntVec invariant_factors, std::size_t free_rank);

    /// Canonicalizes an arbitrary direct sum of cyclic groups; an order of 0
    /// denotes an infinite cyclic summand.
    static FinAbGroup from_cyclic_orders(const IntVec& orders, std::size_t free_rank = 0);

    const IntVec& invariant_factors() const { return factors_; }
    std::size_t free_rank() const { return free_rank_; }
    bool is_trivial() const { return factors_.empty() && free_rank_ == 0; }

    bool operator==(const FinAbGroup& rhs) const = default;

    /// "Z_2 ⊕ Z_84", "Z^2", "Z_6 ⊕ Z", "0"
    std::string to_string() const;

private:
    IntVec factors_;
    std::size_t free_rank_ = 0;
};

/// Z^n modulo the row span of l (l must have n columns).
FinAbGroup quotient_group(std::size_t n, const IntMat& l);

/// Minimal m >= 1 with m*v in the row span of l, std::nullopt if none exists.
/// Computed through the Smith normal form of l.
std::optional<Int> element_order(const IntVec& v, const IntMat& l);

/// Membership of v in the row span of l, by HNF back-substitution.
bool in_span(const IntVec& v, const IntMat& l);

}  // namespace cp2b
