#pragma once

#include "cp2b/gring.hpp"
#include "cp2b/intlat.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cp2b {

/// Characteristic numbers of an 8-dimensional spin bordism class over
/// CP^inf x CP^inf, on the monomial basis
///   (p1*x^2, p1*x*y, p1*y^2, x^4, x^3*y, x^2*y^2, x*y^3, y^4, p1^2)
/// where p1 is the spin Pontrjagin class of the stable *normal* bundle,
/// plus an optional signature entry.
struct CharRow {
    std::array<Int, 9> chi{};
    std::optional<Int> signature;
    bool operator==(const CharRow&) const = default;
    std::string to_string() const;
};

/// Cohomology presentation of a generator 8-manifold: the ring with its top
/// pairing, the two degree-2 reference classes, and the tangent p1. The two
/// classes that are only known through their characteristic numbers (HP^2 and
/// the Bott manifold) are stored as data rows without a ring.
struct ManifoldPresentation {
    std::string name;
    std::optional<Ring> ring;
    std::optional<Element> x_class;
    std::optional<Element> y_class;
    std::optional<Element> tangent_p1;
    Int signature = 0;
    std::optional<CharRow> stored_row;

    bool computational() const { return ring.has_value(); }
};

/// The ten generator classes: M1..M8, HP2, Bott.
/// M1,M2,M3 live on (S^2)^4; M4,M6,M8 on the degree-2 hypersurface in P^5;
/// M5,M7 on P^1 x P^3. Unknown names are rejected.
ManifoldPresentation builtin_manifold(std::string_view name);
const std::vector<std::string>& builtin_manifold_names();

/// Characteristic-number row of a presentation. For computational
/// presentations the normal spin class is -tangent_p1 / 2 (the tangent p1 of
/// every shipped manifold is even); data-only presentations return their
/// stored row.
CharRow char_row(const ManifoldPresentation& m);

/// Basis b1..b9 of the signature-zero part of the bordism group, as
/// characteristic-number rows (each of signature 0).
const std::array<CharRow, 9>& sign_kernel_basis();

struct AppendixReport {
    bool rows_match = false;      // recomputed M-rows equal the reference table
    bool tables_equal = false;    // M-table and b-table span the same lattice
    bool kernel_matches = false;  // sig-zero sublattice equals span(b1..b9)
    std::vector<std::string> notes;
    std::vector<std::string> failures;
    bool passed() const { return rows_match && tables_equal && kernel_matches; }
};

/// Recomputes every generator row from its cohomology presentation and checks
/// the three table claims against each other. The M7 row is checked against
/// the corrected value forced by the factor-swap symmetry of P^1 x P^3; the
/// report records both the corrected and the commonly printed row.
AppendixReport verify_appendix();

}  // namespace cp2b
