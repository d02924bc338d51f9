// Acceptance suite: every headline identity of the library, run end to end
// with exact arithmetic. One line per criterion; exit code is the number of
// failures.

#include "cp2b/bordism.hpp"
#include "cp2b/bundles.hpp"
#include "cp2b/intlat.hpp"
#include "cp2b/kreck_stolz.hpp"
#include "cp2b/mcg_action.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

using namespace cp2b;

namespace {

struct Criterion {
    std::string title;
    std::function<bool(std::string&)> run;
};

bool check_image_of_r(std::string& detail) {
    AutomorphismSet im = rep_image({1, 1});
    ActionMatrix x1 = conjugation_action(1);
    ActionMatrix h = factor_swap_action();
    AutomorphismSet expected{ActionMatrix(), x1, h, h * x1, x1 * h, h * x1 * h};
    std::sort(expected.begin(), expected.end());
    if (im != expected) {
        detail = "image at (1,1) is not the six expected matrices";
        return false;
    }
    std::multiset<int> orders;
    for (const ActionMatrix& m : im) orders.insert(m.order());
    if (orders != std::multiset<int>{1, 2, 2, 2, 3, 3}) {
        detail = "element orders do not realize S3";
        return false;
    }

    const std::vector<BundleParams> pairs{
        {0, 0},  {1, 0},  {0, 1},   {2, 1},  {-1, 0}, {3, 1},  {-3, 2},
        {4, -1}, {5, 5},  {-2, 3},  {2, -3}, {1, 5},  {0, -7}, {-4, 4},
        {6, 2},  {7, -1}, {-5, -5}, {8, 3},  {-7, 2}, {10, 0}};
    for (const BundleParams& p : pairs) {
        if (p.k * p.k - 4 * p.l == -3) {
            detail = "test pair accidentally hits r = -3";
            return false;
        }
        AutomorphismSet want{ActionMatrix(), conjugation_action(p.k)};
        std::sort(want.begin(), want.end());
        if (rep_image(p) != want) {
            detail = "image at (" + std::to_string(p.k) + "," + std::to_string(p.l) +
                     ") is not {I, X_k}";
            return false;
        }
    }
    detail = "S3 at (1,1); {I, X_k} on 20 pairs";
    return true;
}

bool check_oracle_agreement(std::string& detail) {
    for (long long k = -5; k <= 5; ++k)
        for (long long l = -5; l <= 5; ++l) {
            BundleParams p{k, l};
            if (rep_image(p) != brute_force_automorphisms(p, std::llabs(k) + 3)) {
                detail = "mismatch at (" + std::to_string(k) + "," + std::to_string(l) + ")";
                return false;
            }
        }
    detail = "classifier equals exhaustive search on all |k|,|l| <= 5";
    return true;
}

bool check_char_table(std::string& detail) {
    const std::vector<long long> ls{-50, -27, -10, -5, -4, -3, -2, -1, 0, 1,
                                    2,   3,   4,   5,  7,  10, 13, 25, 50, 100};
    for (long long l : ls) {
        if (char_table(l) != char_table_reference(l)) {
            detail = "table mismatch at l = " + std::to_string(l);
            return false;
        }
    }
    detail = "all 27 entries reproduced for 20 values of l "
             "(b2 middle entry -12; tables printing +12 flip that basis vector's sign)";
    return true;
}

bool check_lattice_closed_form(std::string& detail) {
    for (long long l = -100; l <= 100; ++l) {
        if (!lattice_equal(char_table(l), indeterminacy_lattice_closed_form(l))) {
            detail = "closed form fails at l = " + std::to_string(l);
            return false;
        }
    }
    detail = "span(char_table(l)) = diag(2, 2gcd(6,l^2-l), 8gcd(28,4l-4,l^2-l)) on [-100,100]";
    return true;
}

bool check_torelli(std::string& detail) {
    if (torelli_group(-1).group != FinAbGroup::from_cyclic_orders({6, 28})) {
        detail = "Milnor hypersurface group is not Z_6 + Z_28";
        return false;
    }
    for (long long n = -50; n <= 50; ++n) {
        long long l = -2 * n - 1;
        IntMat lat = char_table(l);
        Int N(n);
        auto o2 = element_order({0, 2, 0}, lat);
        auto o1 = element_order({0, 0, 8}, lat);
        if (o2 != 2 * int_gcd(3, 2 * N * N + 3 * N + 1) || o1 != 2 * int_gcd(14, N + 1)) {
            detail = "generator order mismatch at n = " + std::to_string(n);
            return false;
        }
    }
    for (long long k = 1; k <= 19; k += 2) {
        if (milnor_torelli(k) != torelli_group((-3 * k * k - 5) / 8).group) {
            detail = "Milnor closed form disagrees at k = " + std::to_string(k);
            return false;
        }
    }
    detail = "orders match closed forms on n in [-50,50]; Milnor form agrees for odd k <= 19";
    return true;
}

bool check_appendix(std::string& detail) {
    AppendixReport rep = verify_appendix();
    bool m7_surfaced = std::any_of(rep.notes.begin(), rep.notes.end(), [](const std::string& n) {
        return n.find("M7") != std::string::npos;
    });
    if (!rep.passed() || !m7_surfaced) {
        std::ostringstream os;
        for (const std::string& f : rep.failures) os << f << "; ";
        detail = os.str();
        if (!m7_surfaced) detail += "M7 correction not surfaced";
        return false;
    }
    detail = "rows reproduced (M7 corrected and surfaced); spans equal; sig-zero kernel = b1..b9";
    return true;
}

bool check_normal_forms(std::string& detail) {
    std::mt19937_64 rng(0x5EEDED);
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t rows = 1 + static_cast<std::size_t>(rng() % 6);
        std::size_t cols = 1 + static_cast<std::size_t>(rng() % 6);
        IntMat m = testing::random_matrix(rng, rows, cols, -20, 20);

        HnfResult h = hnf(m);
        if (!is_unimodular(h.u) || h.u * m != h.h || !lattice_equal(m, h.h)) {
            detail = "hnf contract violated on trial " + std::to_string(trial);
            return false;
        }
        SnfResult s = snf(m);
        if (!is_unimodular(s.u) || !is_unimodular(s.v) || s.u * m * s.v != s.d) {
            detail = "snf transform contract violated on trial " + std::to_string(trial);
            return false;
        }
        Int prod = 1;
        for (std::size_t j = 1; j <= std::min(rows, cols); ++j) {
            prod *= s.d(j - 1, j - 1);
            if (prod != testing::determinantal_divisor(m, j)) {
                detail = "determinantal divisor mismatch on trial " + std::to_string(trial);
                return false;
            }
        }
    }
    detail = "hnf span preservation and snf divisor identity on 1000 random matrices";
    return true;
}

bool check_spin_parity(std::string& detail) {
    for (long long r = -400; r <= 400; ++r) {
        long long m4 = euclid_mod(r, 4);
        if (m4 != 0 && m4 != 1) continue;
        if (is_spin(RInvariant(r)) != (euclid_mod(r, 2) == 1)) {
            detail = "spin parity fails at r = " + std::to_string(r);
            return false;
        }
        bool stated = euclid_mod(r, 8) == 5;
        bool got_pi6 = false;
        try {
            got_pi6 = homotopy_facts(RInvariant(r)).pi6 == FinAbGroup({6}, 0);
        } catch (const std::invalid_argument&) {
            got_pi6 = false;
        }
        if (got_pi6 != stated) {
            detail = "homotopy table availability wrong at r = " + std::to_string(r);
            return false;
        }
    }
    detail = "spin iff r odd on [-400,400]; pi_6 = Z_6 exactly on 8Z+5";
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"image of R: S3 at r = -3, {I, X_k} otherwise", check_image_of_r},
        {"brute-force oracle agreement on |k|,|l| <= 5", check_oracle_agreement},
        {"characteristic-number table entries", check_char_table},
        {"indeterminacy lattice closed form on [-100,100]", check_lattice_closed_form},
        {"Torelli groups and generator orders", check_torelli},
        {"generator-manifold tables and sign kernel", check_appendix},
        {"hnf/snf contracts on random matrices", check_normal_forms},
        {"spin parity and homotopy table", check_spin_parity},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
        std::ostringstream time;
        time.setf(std::ios::fixed);
        time.precision(2);
        time << elapsed.count();
        std::cout << (ok ? "PASS" : "FAIL") << "  " << (i + 1) << "  " << criteria[i].title
                  << "  [" << time.str() << "s]\n      " << detail << "\n";
        if (!ok) ++failures;
    }
    if (failures == 0)
        std::cout << "all criteria passed\n";
    else
        std::cout << "criteria failed: " << failures << "\n";
    return failures;
}
