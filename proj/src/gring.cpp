#include "cp2b/gring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cp2b {

namespace {

using Poly = std::map<Monomial, Int>;

bool divides(const Monomial& d, const Monomial& m) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

Monomial quotient(const Monomial& m, const Monomial& d) {
    Monomial q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) q[i] = m[i] - d[i];
    return q;
}

Monomial product(const Monomial& a, const Monomial& b) {
    Monomial p(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) p[i] = a[i] + b[i];
    return p;
}

// Admissible order on same-degree monomials: compare exponents from the last
// generator backwards; the first difference decides, smaller exponent there
// means smaller monomial. Translation-invariant, so rewriting a multiple of a
// rule's lhs also strictly decreases.
bool rewrite_less(const Monomial& a, const Monomial& b) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

void add_term(Poly& p, const Monomial& m, const Int& c) {
    auto it = p.find(m);
    if (it == p.end()) {
        if (c != 0) p.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) p.erase(it);
}

}  // namespace

std::string monomial_string_impl(const Ring::Impl& impl, const Monomial& m);

struct Ring::Impl {
    std::vector<Generator> generators;
    int truncation_degree = 0;
    std::vector<RewriteRule> rules;
    Pairing pairing;

    std::map<int, std::vector<Monomial>> bases;           // canonical basis per degree
    std::map<int, std::map<Monomial, std::size_t>> index; // basis monomial -> position
    std::map<Monomial, std::vector<std::pair<Int, std::size_t>>> normal_forms;

    int degree_of(const Monomial& m) const {
        int d = 0;
        for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * generators[i].degree;
        return d;
    }

    const RewriteRule* first_applicable(const Monomial& m) const {
        for (const auto& r : rules)
            if (divides(r.lhs, m)) return &r;
        return nullptr;
    }

    // One rewriting step of rule r at monomial m (m = lhs * q).
    Poly apply_rule(const RewriteRule& r, const Monomial& m, const Int& c) const {
        Poly out;
        Monomial q = quotient(m, r.lhs);
        for (const auto& [rc, rm] : r.rhs) add_term(out, product(rm, q), c * rc);
        return out;
    }

    Poly reduce(Poly p) const {
        for (;;) {
            const Monomial* target = nullptr;
            const RewriteRule* rule = nullptr;
            for (const auto& [m, c] : p) {
                if (const RewriteRule* r = first_applicable(m)) {
                    target = &m;
                    rule = r;
                    break;
                }
            }
            if (!target) return p;
            Monomial m = *target;
            Int c = p.at(m);
            p.erase(m);
            for (const auto& [rm, rc] : apply_rule(*rule, m, c)) add_term(p, rm, rc);
        }
    }

    std::vector<Monomial> all_monomials(int degree) const {
        std::vector<Monomial> out;
        Monomial cur(generators.size(), 0);
        auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
            if (idx == generators.size()) {
                if (remaining == 0) out.push_back(cur);
                return;
            }
            int gd = generators[idx].degree;
            for (int e = remaining / gd; e >= 0; --e) {
                cur[idx] = e;
                self(self, idx + 1, remaining - e * gd);
            }
            cur[idx] = 0;
        };
        rec(rec, 0, degree);
        std::sort(out.begin(), out.end(),
                  [](const Monomial& a, const Monomial& b) { return b < a; });  // descending lex
        return out;
    }
};

Ring::Ring(std::vector<Generator> generators, int truncation_degree,
           std::vector<RewriteRule> rules, Pairing pairing) {
    auto impl = std::make_shared<Impl>();
    impl->generators = std::move(generators);
    impl->truncation_degree = truncation_degree;
    impl->rules = std::move(rules);
    impl->pairing = std::move(pairing);

    for (const auto& g : impl->generators)
        if (g.degree <= 0 || g.degree % 2 != 0)
            throw std::invalid_argument("Ring: generator degrees must be positive and even");
    if (truncation_degree < 0) throw std::invalid_argument("Ring: negative truncation degree");

    for (const auto& r : impl->rules) {
        if (r.lhs.size() != impl->generators.size())
            throw std::invalid_argument("Ring: rule arity mismatch");
        int ld = impl->degree_of(r.lhs);
        for (const auto& [c, m] : r.rhs) {
            (void)c;
            if (m.size() != impl->generators.size())
                throw std::invalid_argument("Ring: rule arity mismatch");
            if (impl->degree_of(m) != ld)
                throw std::invalid_argument("Ring: rewrite rule does not preserve degree");
            if (!rewrite_less(m, r.lhs))
                throw std::invalid_argument("Ring: rewrite rule does not decrease monomials");
        }
    }

    // Tabulate normal forms of every monomial up to the truncation degree and
    // verify local confluence (with termination this gives unique normal forms).
    for (int deg = 0; deg <= impl->truncation_degree; ++deg) {
        std::vector<Monomial> mons = impl->all_monomials(deg);
        if (mons.empty()) continue;
        std::vector<Monomial>& basis = impl->bases[deg];
        for (const Monomial& m : mons)
            if (!impl->first_applicable(m)) basis.push_back(m);
        for (std::size_t i = 0; i < basis.size(); ++i) impl->index[deg][basis[i]] = i;

        for (const Monomial& m : mons) {
            Poly start;
            start.emplace(m, 1);
            Poly nf = impl->reduce(start);
            for (const auto& r : impl->rules) {
                if (!divides(r.lhs, m)) continue;
                if (impl->reduce(impl->apply_rule(r, m, 1)) != nf)
                    throw std::invalid_argument("Ring: rewrite rules are not confluent at " +
                                                monomial_string_impl(*impl, m));
            }
            std::vector<std::pair<Int, std::size_t>> entry;
            for (const auto& [bm, c] : nf) entry.emplace_back(c, impl->index[deg].at(bm));
            impl->normal_forms.emplace(m, std::move(entry));
        }
    }

    for (const auto& [m, c] : impl->pairing) {
        (void)c;
        const auto& top = impl->bases[impl->truncation_degree];
        if (std::find(top.begin(), top.end(), m) == top.end())
            throw std::invalid_argument("Ring: pairing key is not a top-degree basis monomial");
    }

    impl_ = std::move(impl);
}

std::string monomial_string_impl(const Ring::Impl& impl, const Monomial& m) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (any) os << "*";
        os << impl.generators[i].name;
        if (m[i] > 1) os << "^" << m[i];
        any = true;
    }
    return any ? os.str() : "1";
}

const std::vector<Ring::Generator>& Ring::generators() const { return impl_->generators; }
int Ring::truncation_degree() const { return impl_->truncation_degree; }

const std::vector<Monomial>& Ring::basis(int degree) const {
    static const std::vector<Monomial> empty;
    auto it = impl_->bases.find(degree);
    return it == impl_->bases.end() ? empty : it->second;
}

Element Ring::zero(int degree) const {
    return Element(*this, degree, IntVec(basis(degree).size()));
}

Element Ring::one() const {
    return Element(*this, 0, IntVec{1});
}

Element Ring::generator(std::size_t index) const {
    if (index >= impl_->generators.size()) throw std::out_of_range("Ring::generator");
    Monomial m(impl_->generators.size(), 0);
    m[index] = 1;
    return element(impl_->generators[index].degree, {{Int(1), m}});
}

Element Ring::element(int degree, const std::vector<std::pair<Int, Monomial>>& terms) const {
    Poly p;
    for (const auto& [c, m] : terms) {
        if (impl_->degree_of(m) != degree)
            throw std::invalid_argument("Ring::element: term degree mismatch");
        add_term(p, m, c);
    }
    IntVec coeffs(basis(degree).size());
    if (degree <= impl_->truncation_degree) {
        for (const auto& [m, c] : impl_->reduce(std::move(p))) {
            coeffs[impl_->index.at(degree).at(m)] = c;
        }
    }
    return Element(*this, degree, std::move(coeffs));
}

const Int& Ring::pairing(const Monomial& top_monomial) const {
    static const Int zero = 0;
    auto it = impl_->pairing.find(top_monomial);
    return it == impl_->pairing.end() ? zero : it->second;
}

std::string Ring::monomial_string(const Monomial& m) const {
    return monomial_string_impl(*impl_, m);
}

bool Ring::operator==(const Ring& rhs) const {
    if (impl_ == rhs.impl_) return true;
    const Impl& a = *impl_;
    const Impl& b = *rhs.impl_;
    if (a.truncation_degree != b.truncation_degree) return false;
    if (a.generators.size() != b.generators.size()) return false;
    for (std::size_t i = 0; i < a.generators.size(); ++i)
        if (a.generators[i].name != b.generators[i].name ||
            a.generators[i].degree != b.generators[i].degree)
            return false;
    if (a.rules.size() != b.rules.size()) return false;
    for (std::size_t i = 0; i < a.rules.size(); ++i)
        if (a.rules[i].lhs != b.rules[i].lhs || a.rules[i].rhs != b.rules[i].rhs) return false;
    return a.pairing == b.pairing;
}

Element::Element(Ring ring, int degree, IntVec coefficients)
    : ring_(std::move(ring)), degree_(degree), coeffs_(std::move(coefficients)) {
    if (coeffs_.size() != ring_.basis(degree_).size())
        throw std::invalid_argument("Element: coefficient count does not match basis");
}

Int Element::coefficient(const Monomial& m) const {
    const auto& basis = ring_.basis(degree_);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == m) return coeffs_[i];
    return 0;
}

bool Element::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c == 0; });
}

Element Element::operator+(const Element& rhs) const {
    if (!(ring_ == rhs.ring_) || degree_ != rhs.degree_)
        throw std::invalid_argument("Element: sum of incompatible elements");
    IntVec out = coeffs_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += rhs.coeffs_[i];
    return Element(ring_, degree_, std::move(out));
}

Element Element::operator-(const Element& rhs) const { return *this + (-rhs); }

Element Element::operator-() const {
    IntVec out = coeffs_;
    for (Int& c : out) c = -c;
    return Element(ring_, degree_, std::move(out));
}

bool Element::operator==(const Element& rhs) const {
    return ring_ == rhs.ring_ && degree_ == rhs.degree_ && coeffs_ == rhs.coeffs_;
}

std::string Element::to_string() const {
    const auto& basis = ring_.basis(degree_);
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        if (any)
            os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        Int a = abs(c);
        std::string mon = ring_.monomial_string(basis[i]);
        if (a != 1 || mon == "1") {
            os << a;
            if (mon != "1") os << "*";
        }
        if (mon != "1") os << mon;
        any = true;
    }
    return any ? os.str() : "0";
}

Element multiply(const Element& a, const Element& b) {
    if (!(a.ring() == b.ring()))
        throw std::invalid_argument("multiply: elements of different rings");
    const Ring& ring = a.ring();
    const Ring::Impl& impl = ring.impl();
    int degree = a.degree() + b.degree();
    if (degree > ring.truncation_degree()) return ring.zero(degree);

    const auto& ba = ring.basis(a.degree());
    const auto& bb = ring.basis(b.degree());
    IntVec out(ring.basis(degree).size());
    for (std::size_t i = 0; i < ba.size(); ++i) {
        if (a.coefficients()[i] == 0) continue;
        for (std::size_t j = 0; j < bb.size(); ++j) {
            if (b.coefficients()[j] == 0) continue;
            Int c = a.coefficients()[i] * b.coefficients()[j];
            for (const auto& [nc, pos] : impl.normal_forms.at(product(ba[i], bb[j])))
                out[pos] += c * nc;
        }
    }
    return Element(ring, degree, std::move(out));
}

Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

Element operator*(const Int& c, const Element& a) {
    IntVec out = a.coefficients();
    for (Int& v : out) v *= c;
    return Element(a.ring(), a.degree(), std::move(out));
}

Element operator*(long long c, const Element& a) { return Int(c) * a; }

Int evaluate(const Element& a) {
    const Ring& ring = a.ring();
    if (a.degree() != ring.truncation_degree())
        throw std::invalid_argument("evaluate: element is not of top degree");
    const auto& basis = ring.basis(a.degree());
    Int out = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) out += a.coefficients()[i] * ring.pairing(basis[i]);
    return out;
}

Ring make_pn_ring(long long k, long long l) {
    std::vector<Ring::Generator> gens{{"s", 2}, {"t", 2}};
    std::vector<RewriteRule> rules;
    rules.push_back({{3, 0}, {}});                                 // s^3 -> 0
    rules.push_back({{0, 2}, {{Int(k), {1, 1}}, {Int(-l), {2, 0}}}});  // t^2 -> k ts - l s^2
    Ring::Pairing pairing;
    pairing[{2, 1}] = 1;  // <s^2 t> = 1
    return Ring(std::move(gens), 6, std::move(rules), std::move(pairing));
}

}  // namespace cp2b
