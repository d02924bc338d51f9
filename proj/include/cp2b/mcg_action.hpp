#pragma once

#include "cp2b/bundles.hpp"
#include "cp2b/gring.hpp"
#include "cp2b/intlat.hpp"
#include "cp2b/kreck_stolz.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cp2b {

/// Unimodular 2x2 integer matrix acting on H^2 in the row-vector convention
/// (s, t) -> (s, t) M, i.e. f*(s) = M(0,0) s + M(1,0) t and
/// f*(t) = M(0,1) s + M(1,1) t.
class ActionMatrix {
public:
    ActionMatrix();  // identity
    ActionMatrix(Int a, Int b, Int c, Int d);

    const Int& at(int i, int j) const { return m_[static_cast<std::size_t>(2 * i + j)]; }
    Int det() const;
    ActionMatrix operator*(const ActionMatrix& rhs) const;
    /// Inverse; requires det = +-1.
    ActionMatrix inverse() const;
    /// Multiplicative order, or 0 if it exceeds the search bound.
    int order(int bound = 24) const;

    bool operator==(const ActionMatrix&) const = default;
    bool operator<(const ActionMatrix& rhs) const;

    std::string to_string() const;

private:
    std::array<Int, 4> m_;
};

/// X_k = [[-1, -k], [0, 1]], the action induced by complex conjugation of the
/// base (composed with a bundle identification).
ActionMatrix conjugation_action(long long k);

/// H = [[0, 1], [1, 0]], the action of the factor swap of the Milnor
/// hypersurface in CP^2 x CP^2.
ActionMatrix factor_swap_action();

/// Finite set of matrices, sorted and duplicate-free.
using AutomorphismSet = std::vector<ActionMatrix>;

/// True iff the substitution defined by m is a ring automorphism of the
/// (k, l) presentation that preserves the orientation class and p1:
/// it must kill s^3 and t^2 - k ts + l s^2, fix the evaluation of s^2 t,
/// and fix (k^2-4l+3) s^2 (vacuous when k^2-4l = -3).
/// Requires det m = +-1.
bool is_admissible(const BundleParams& p, const ActionMatrix& m);

/// The image of the representation MCG(N_r) -> GL_2(Z): {I, X_k} when
/// k^2 - 4l != -3, and the six-element group generated by X_1 and H
/// (conjugated into the (k, l) basis) when k^2 - 4l = -3. The result is
/// checked to be closed under products and inverses.
AutomorphismSet rep_image(const BundleParams& p);

/// Exhaustive search: all matrices with entries in [-bound, bound] and
/// det = +-1 passing is_admissible. Independent cross-check of rep_image.
AutomorphismSet brute_force_automorphisms(const BundleParams& p, long long bound);

enum class QuotientTag { Z2, S3 };
std::string to_string(QuotientTag tag);

/// The short exact sequence 1 -> Torelli -> MCG(N_r) -> A -> 1:
/// A is S3 exactly for r = -3, else Z2; the Torelli group is computed when
/// r ≡ 5 (mod 8) and left empty otherwise.
struct ExtensionDescriptor {
    QuotientTag tag = QuotientTag::Z2;
    AutomorphismSet quotient_matrices;
    std::optional<TorelliResult> torelli;
};

ExtensionDescriptor mcg_extension(const RInvariant& r);

}  // namespace cp2b
