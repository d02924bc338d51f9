#pragma once

#include "cp2b/gring.hpp"
#include "cp2b/intlat.hpp"

#include <string>

namespace cp2b {

/// Parameters (k, l) of the rank-2 complex bundle over CP^2 with total Chern
/// class 1 + k x + l x^2. The projectivization P(gamma_{k,l}) is the sphere
/// bundle N_r with r = k^2 - 4l.
struct BundleParams {
    long long k = 0;
    long long l = 0;
    bool operator==(const BundleParams&) const = default;
};

/// First Pontrjagin number r of a rank-3 real vector bundle over CP^2.
/// Realizable values are exactly r ≡ 0, 1 (mod 4); the constructor rejects
/// anything else.
class RInvariant {
public:
    explicit RInvariant(long long r);
    long long value() const { return r_; }
    bool operator==(const RInvariant&) const = default;

private:
    long long r_;
};

/// Recorded homotopy groups of N_r for r ≡ 5 (mod 8).
struct HomotopyFacts {
    FinAbGroup pi3;          // Z, via the inclusion of a fiber
    FinAbGroup pi4;          // 0
    std::string pi5;         // description: injects into pi_5(CP^2) with image 2*pi_5(CP^2)
    FinAbGroup pi6;          // Z_6
};

long long euclid_mod(long long a, long long m);

/// r = k^2 - 4l. Always lands in 4Z + {0,1} since k^2 ≡ 0, 1 (mod 4).
RInvariant r_of(const BundleParams& p);

/// Canonical parameters for a given r: (0, -r/4) when r ≡ 0, (1, (1-r)/4)
/// when r ≡ 1 (mod 4).
BundleParams params_for_r(const RInvariant& r);

/// The generalized Milnor hypersurface M_k (k >= 1) is N_{-3k^2}.
RInvariant milnor(long long k);

/// c1 of the total space: (k-3)s - 2t in degree 2 of the (k,l) ring.
Element chern_c1(const BundleParams& p);

/// p1 of the total space: (k^2 - 4l + 3) s^2 in degree 4.
Element pontrjagin_p1(const BundleParams& p);

/// w2 = c1 mod 2 vanishes iff both coefficients of c1 are even; with the
/// canonical parameters this happens exactly for odd r.
bool is_spin(const RInvariant& r);

/// Constant table, recorded only for r ≡ 5 (mod 8); rejects other r.
HomotopyFacts homotopy_facts(const RInvariant& r);

}  // namespace cp2b
