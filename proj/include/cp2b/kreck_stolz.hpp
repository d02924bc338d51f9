#pragma once

#include "cp2b/bordism.hpp"
#include "cp2b/gring.hpp"
#include "cp2b/intlat.hpp"

#include <array>
#include <utility>

namespace cp2b {

/// Degree-4 class of B = CP^inf x CP^inf x BSpin on the basis
/// (x^2, xy, y^2, p1), p1 the universal spin Pontrjagin class.
struct H4BClass {
    std::array<Int, 4> c{};
    bool operator==(const H4BClass&) const = default;
};

/// Degree-8 class of B on the basis
/// (x^4, x^3*y, x^2*y^2, x*y^3, y^4, p1*x^2, p1*x*y, p1*y^2, p1^2).
struct H8BClass {
    std::array<Int, 9> c{};
    bool operator==(const H8BClass&) const = default;
};

/// The free graded ring Z[x, y, p1] (degrees 2, 2, 4) truncated above
/// degree 8, used to expand products of H^4 classes.
Ring make_b_ring();

/// Generators of the kernel of the restriction H^4(B) -> H^4(N_r) for
/// N_r = P(gamma_{1,l}):  alpha = y^2 - xy + l x^2,  beta = p1 + 2(1-l) x^2.
std::pair<H4BClass, H4BClass> alpha_beta(long long l);

/// Image of a degree-4 class of B in the (1,l) projective-bundle ring under
/// (x^2, xy, y^2, p1) -> (s^2, st, st - l s^2, (2l-2) s^2).
Element restrict_to_bundle(const H4BClass& c, long long l);

/// The column classes (alpha^2, alpha^2 + alpha*beta, beta^2) in H^8(B).
std::array<H8BClass, 3> char_columns(long long l);

/// Pairing of a degree-8 class against a bordism class given by its
/// characteristic-number row.
Int pair_row(const H8BClass& c, const CharRow& row);

/// 9x3 matrix: entry (i, j) pairs column class j against the basis class
/// b_{i+1} of the signature-zero bordism group.
IntMat char_table(long long l);

/// Closed-form entries of the same table, row by row:
///   b1 (0, 24l, 96(1-l)), b2 (0, -12, 0), b3 (0, 24, 0),
///   b4 (2l^2, 2l-2l^2, 8(l^2-l)), b5 (-2l, 0, 0), b6 (4l+2, 0, 0),
///   b7 (-2, 0, 0), b8 (2, 0, 0), b9 (0, 0, 224).
/// The sign of the middle b2 entry is forced to -12 by the row b2 itself
/// (the xy-coefficient of alpha is -1); tables that print +12 for this entry
/// use the opposite sign convention for the basis vector, which spans the
/// same lattice.
IntMat char_table_reference(long long l);

/// The indeterminacy lattice L of the Kreck-Stolz invariant: the canonical
/// (HNF) basis of the row span of char_table(l).
IntMat indeterminacy_lattice(long long l);

/// diag(2, 2 gcd(6, l^2-l), 8 gcd(28, 4l-4, l^2-l)).
IntMat indeterminacy_lattice_closed_form(long long l);

/// Torelli group of N_r for r = 8n+5 (so l = -2n-1): the subgroup of the
/// mapping class group acting trivially on cohomology, generated by a Dehn
/// twist g2 (image (0,2,0) in Z^3/L) and a disk-supported exotic
/// diffeomorphism g1 (image (0,0,8)).
struct TorelliResult {
    long long n = 0;
    FinAbGroup group;       // Z_{2 gcd(3, 2n^2+3n+1)} + Z_{2 gcd(14, n+1)}, canonicalized
    Int dehn_twist_order;   // order of g2
    Int disk_diffeo_order;  // order of g1
};

/// Computes the generator orders from the lattice and checks them against the
/// closed-form factors.
TorelliResult torelli_group(long long n);

/// Torelli group of the generalized Milnor hypersurface M_k, odd k >= 1:
/// Z_6 + Z_{gcd(28, l^2+l)} with l = (k-1)/2. Cross-checked against
/// torelli_group at 8n+5 = -3k^2.
FinAbGroup milnor_torelli(long long k);

}  // namespace cp2b
