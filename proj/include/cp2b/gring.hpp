#pragma once

#include "cp2b/intlat.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace cp2b {

/// Exponent vector over the ring's generators.
using Monomial = std::vector<int>;

/// A degree-preserving rewrite rule lhs -> sum of (coefficient, monomial).
struct RewriteRule {
    Monomial lhs;
    std::vector<std::pair<Int, Monomial>> rhs;
};

class Element;

/// A graded commutative ring over Z, presented by generators of even degree,
/// monomial rewrite rules, a truncation degree above which everything
/// vanishes, and an integer pairing on the top-degree monomial basis.
///
/// The presentation is validated eagerly: rules must preserve degree, must
/// decrease monomials in a fixed admissible order (so rewriting terminates),
/// and must be confluent on every monomial up to the truncation degree.
/// Normal forms of all such monomials are tabulated at construction.
class Ring {
public:
    struct Generator {
        std::string name;
        int degree;  // even, positive
    };
    using Pairing = std::map<Monomial, Int>;

    Ring(std::vector<Generator> generators, int truncation_degree,
         std::vector<RewriteRule> rules, Pairing pairing);

    const std::vector<Generator>& generators() const;
    int truncation_degree() const;

    /// Canonical monomial basis of the given degree (irreducible monomials in
    /// descending lexicographic order of exponent vectors). Empty above the
    /// truncation degree and in odd or negative degrees.
    const std::vector<Monomial>& basis(int degree) const;

    Element zero(int degree) const;
    Element one() const;
    Element generator(std::size_t index) const;
    /// Element from arbitrary same-degree terms; reduced to normal form.
    Element element(int degree, const std::vector<std::pair<Int, Monomial>>& terms) const;

    const Int& pairing(const Monomial& top_monomial) const;
    std::string monomial_string(const Monomial& m) const;

    /// Structural equality of presentations (generators, truncation, rules,
    /// pairing); elements of structurally equal rings are interoperable.
    bool operator==(const Ring& rhs) const;

    struct Impl;
    const Impl& impl() const { return *impl_; }

private:
    std::shared_ptr<const Impl> impl_;
};

/// Homogeneous element: integer coefficients on the canonical monomial basis
/// of one degree. Immutable value type.
class Element {
public:
    Element(Ring ring, int degree, IntVec coefficients);

    const Ring& ring() const { return ring_; }
    int degree() const { return degree_; }
    const IntVec& coefficients() const { return coeffs_; }

    /// Coefficient of a basis monomial (0 for anything not in the basis).
    Int coefficient(const Monomial& m) const;
    bool is_zero() const;

    Element operator+(const Element& rhs) const;
    Element operator-(const Element& rhs) const;
    Element operator-() const;
    bool operator==(const Element& rhs) const;

    std::string to_string() const;

private:
    Ring ring_;
    int degree_;
    IntVec coeffs_;
};

/// Normal-form product. Degrees add; above the truncation degree the result
/// is the zero element of that degree.
Element multiply(const Element& a, const Element& b);
Element operator*(const Element& a, const Element& b);
Element operator*(const Int& c, const Element& a);
Element operator*(long long c, const Element& a);

/// Pairing of a top-degree element against the fundamental class.
Int evaluate(const Element& a);

/// H^*(P(gamma_{k,l})) = Z[s,t]/(s^3, t^2 - k ts + l s^2), generators of
/// degree 2, truncation degree 6, orientation normalization <s^2 t> = 1.
/// Graded ranks are 1, 2, 2, 1 in degrees 0, 2, 4, 6.
Ring make_pn_ring(long long k, long long l);

}  // namespace cp2b
