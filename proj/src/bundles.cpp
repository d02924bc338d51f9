#include "cp2b/bundles.hpp"

#include <stdexcept>

namespace cp2b {

long long euclid_mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

RInvariant::RInvariant(long long r) : r_(r) {
    long long m = euclid_mod(r, 4);
    if (m != 0 && m != 1)
        throw std::invalid_argument(
            "r must lie in 4Z+{0,1}: no rank-3 real bundle over CP^2 has p1 = " +
            std::to_string(r));
}

RInvariant r_of(const BundleParams& p) { return RInvariant(p.k * p.k - 4 * p.l); }

BundleParams params_for_r(const RInvariant& r) {
    long long rv = r.value();
    if (euclid_mod(rv, 4) == 0) return {0, -rv / 4};
    return {1, (1 - rv) / 4};
}

RInvariant milnor(long long k) {
    if (k < 1) throw std::invalid_argument("milnor: index must be >= 1");
    return RInvariant(-3 * k * k);
}

Element chern_c1(const BundleParams& p) {
    Ring ring = make_pn_ring(p.k, p.l);
    return Int(p.k - 3) * ring.generator(0) + Int(-2) * ring.generator(1);
}

Element pontrjagin_p1(const BundleParams& p) {
    Ring ring = make_pn_ring(p.k, p.l);
    Element s = ring.generator(0);
    return Int(p.k * p.k - 4 * p.l + 3) * (s * s);
}

bool is_spin(const RInvariant& r) {
    Element c1 = chern_c1(params_for_r(r));
    for (const Int& c : c1.coefficients())
        if (c % 2 != 0) return false;
    return true;
}

HomotopyFacts homotopy_facts(const RInvariant& r) {
    if (euclid_mod(r.value(), 8) != 5)
        throw std::invalid_argument("homotopy facts recorded only for r in 8Z+5");
    return HomotopyFacts{
        FinAbGroup({}, 1),
        FinAbGroup{},
        "injects into pi_5(CP^2) via the bundle projection, with image 2*pi_5(CP^2)",
        FinAbGroup({6}, 0),
    };
}

}  // namespace cp2b
