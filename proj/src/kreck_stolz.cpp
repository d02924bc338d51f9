#include "cp2b/kreck_stolz.hpp"

#include <stdexcept>

namespace cp2b {

namespace {

constexpr int kX = 0, kY = 1, kP = 2;

Element h4_element(const Ring& b, const H4BClass& c) {
    return b.element(4, {{c.c[0], {2, 0, 0}},
                         {c.c[1], {1, 1, 0}},
                         {c.c[2], {0, 2, 0}},
                         {c.c[3], {0, 0, 1}}});
}

H8BClass h8_coefficients(const Element& e) {
    H8BClass out;
    out.c[0] = e.coefficient({4, 0, 0});
    out.c[1] = e.coefficient({3, 1, 0});
    out.c[2] = e.coefficient({2, 2, 0});
    out.c[3] = e.coefficient({1, 3, 0});
    out.c[4] = e.coefficient({0, 4, 0});
    out.c[5] = e.coefficient({2, 0, 1});
    out.c[6] = e.coefficient({1, 1, 1});
    out.c[7] = e.coefficient({0, 2, 1});
    out.c[8] = e.coefficient({0, 0, 2});
    return out;
}

Int gcd3(const Int& a, const Int& b, const Int& c) { return int_gcd(a, int_gcd(b, c)); }

}  // namespace

Ring make_b_ring() {
    std::vector<Ring::Generator> gens{{"x", 2}, {"y", 2}, {"p1", 4}};
    return Ring(std::move(gens), 8, {}, {});
}

std::pair<H4BClass, H4BClass> alpha_beta(long long l) {
    H4BClass alpha{{Int(l), Int(-1), Int(1), Int(0)}};
    H4BClass beta{{Int(2 * (1 - l)), Int(0), Int(0), Int(1)}};
    return {alpha, beta};
}

Element restrict_to_bundle(const H4BClass& c, long long l) {
    Ring ring = make_pn_ring(1, l);
    // (x^2, xy, y^2, p1) -> (s^2, st, st - l s^2, (2l-2) s^2)
    Int s2 = c.c[0] - Int(l) * c.c[2] + Int(2 * l - 2) * c.c[3];
    Int st = c.c[1] + c.c[2];
    return ring.element(4, {{s2, {2, 0}}, {st, {1, 1}}});
}

std::array<H8BClass, 3> char_columns(long long l) {
    Ring b = make_b_ring();
    auto [ac, bc] = alpha_beta(l);
    Element alpha = h4_element(b, ac);
    Element beta = h4_element(b, bc);
    Element a2 = alpha * alpha;
    Element ab = alpha * beta;
    Element b2 = beta * beta;
    return {h8_coefficients(a2), h8_coefficients(a2 + ab), h8_coefficients(b2)};
}

Int pair_row(const H8BClass& c, const CharRow& row) {
    // H8BClass runs (x^4 .. y^4, p1x^2, p1xy, p1y^2, p1^2); CharRow leads
    // with the three p1-mixed numbers.
    static constexpr int to_row[9] = {3, 4, 5, 6, 7, 0, 1, 2, 8};
    Int out = 0;
    for (int i = 0; i < 9; ++i) out += c.c[i] * row.chi[to_row[i]];
    return out;
}

IntMat char_table(long long l) {
    std::array<H8BClass, 3> cols = char_columns(l);
    const auto& rows = sign_kernel_basis();
    IntMat out(9, 3);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 3; ++j) out(i, j) = pair_row(cols[j], rows[i]);
    return out;
}

IntMat char_table_reference(long long l) {
    Int L(l);
    IntMat out(9, 3);
    auto set = [&](std::size_t i, Int a, Int b, Int c) {
        out(i, 0) = std::move(a);
        out(i, 1) = std::move(b);
        out(i, 2) = std::move(c);
    };
    set(0, 0, 24 * L, 96 * (1 - L));
    set(1, 0, -12, 0);
    set(2, 0, 24, 0);
    set(3, 2 * L * L, 2 * L - 2 * L * L, 8 * (L * L - L));
    set(4, -2 * L, 0, 0);
    set(5, 4 * L + 2, 0, 0);
    set(6, -2, 0, 0);
    set(7, 2, 0, 0);
    set(8, 0, 0, 224);
    return out;
}

IntMat indeterminacy_lattice(long long l) { return hnf_basis(char_table(l)); }

IntMat indeterminacy_lattice_closed_form(long long l) {
    Int L(l);
    Int a = 2;
    Int b = 2 * int_gcd(6, L * L - L);
    Int c = 8 * gcd3(28, 4 * L - 4, L * L - L);
    return IntMat::diagonal({a, b, c});
}

TorelliResult torelli_group(long long n) {
    long long l = -2 * n - 1;  // r = 8n+5 presented as P(gamma_{1,l})
    IntMat lattice = indeterminacy_lattice(l);

    auto order_of = [&](IntVec v) {
        std::optional<Int> o = element_order(v, lattice);
        if (!o) throw std::logic_error("torelli_group: generator image has infinite order");
        return *o;
    };
    Int g2 = order_of({0, 2, 0});
    Int g1 = order_of({0, 0, 8});

    Int N(n);
    Int g2_closed = 2 * int_gcd(3, 2 * N * N + 3 * N + 1);
    Int g1_closed = 2 * int_gcd(14, N + 1);
    if (g2 != g2_closed || g1 != g1_closed)
        throw std::logic_error("torelli_group: lattice orders disagree with the closed form");

    TorelliResult out;
    out.n = n;
    out.group = FinAbGroup::from_cyclic_orders({g2, g1});
    out.dehn_twist_order = std::move(g2);
    out.disk_diffeo_order = std::move(g1);
    return out;
}

FinAbGroup milnor_torelli(long long k) {
    if (k < 1 || k % 2 == 0)
        throw std::invalid_argument("milnor_torelli: covered for odd k >= 1 only");
    Int L((k - 1) / 2);
    FinAbGroup group = FinAbGroup::from_cyclic_orders({6, int_gcd(28, L * L + L)});
    // same manifold as N_{8n+5} with 8n+5 = -3k^2
    TorelliResult cross = torelli_group((-3 * k * k - 5) / 8);
    if (!(group == cross.group))
        throw std::logic_error("milnor_torelli: disagreement with the bundle computation");
    return group;
}

}  // namespace cp2b
