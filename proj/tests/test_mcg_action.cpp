#include "cp2b/mcg_action.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace cp2b;

namespace {

AutomorphismSet six_matrices_at_11() {
    ActionMatrix x1 = conjugation_action(1);
    ActionMatrix h = factor_swap_action();
    AutomorphismSet out{ActionMatrix(), x1, h, h * x1, x1 * h, h * x1 * h};
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("ActionMatrix arithmetic") {
    ActionMatrix x1 = conjugation_action(1);
    ActionMatrix h = factor_swap_action();
    CHECK(x1.det() == -1);
    CHECK(h.det() == -1);
    CHECK(x1 * x1 == ActionMatrix());
    CHECK(x1.inverse() == x1);
    CHECK((h * x1).order() == 3);
    CHECK((h * x1).inverse() == x1 * h);
    CHECK(ActionMatrix(2, 0, 0, 2).det() == 4);
    CHECK_THROWS_AS(ActionMatrix(2, 0, 0, 2).inverse(), std::invalid_argument);
}

TEST_CASE("conjugation matrices square to the identity") {
    for (long long k = -6; k <= 6; ++k) {
        ActionMatrix xk = conjugation_action(k);
        CHECK(xk.det() == -1);
        CHECK(xk * xk == ActionMatrix());
    }
}

TEST_CASE("is_admissible") {
    CHECK(is_admissible({1, 1}, ActionMatrix()));
    CHECK(is_admissible({1, 0}, conjugation_action(1)));
    // f*(s) = t fails f*(s)^3 = 0 at (1,0) since t^3 = s^2 t there
    CHECK_FALSE(is_admissible({1, 0}, factor_swap_action()));
    CHECK(is_admissible({1, 1}, factor_swap_action()));
    // -I reverses the orientation class
    CHECK_FALSE(is_admissible({1, 1}, ActionMatrix(-1, 0, 0, -1)));
    CHECK_THROWS_AS(is_admissible({1, 1}, ActionMatrix(2, 0, 0, 2)), std::invalid_argument);
}

TEST_CASE("rep_image at the symmetric bundle r = -3") {
    AutomorphismSet im = rep_image({1, 1});
    CHECK(im == six_matrices_at_11());
    std::multiset<int> orders;
    for (const ActionMatrix& m : im) orders.insert(m.order());
    CHECK(orders == std::multiset<int>{1, 2, 2, 2, 3, 3});
}

TEST_CASE("rep_image away from r = -3 is {I, X_k}") {
    CHECK(rep_image({1, 0}) == AutomorphismSet{conjugation_action(1), ActionMatrix()});
    AutomorphismSet im01 = rep_image({0, 1});
    AutomorphismSet expected01{ActionMatrix(-1, 0, 0, 1), ActionMatrix()};
    std::sort(im01.begin(), im01.end());
    std::sort(expected01.begin(), expected01.end());
    CHECK(im01 == expected01);
}

TEST_CASE("rep_image on non-canonical presentations of r = -3") {
    // k^2 - 4l = -3 with k != 1: the six matrices conjugated by the basis
    // change t -> t - ((k-1)/2) s, confirmed by exhaustive search
    for (BundleParams p : {BundleParams{3, 3}, BundleParams{-1, 1}, BundleParams{-3, 3}}) {
        AutomorphismSet im = rep_image(p);
        CHECK(im.size() == 6);
        CHECK(im == brute_force_automorphisms(p, std::abs(p.k) + 3));
        std::multiset<int> orders;
        for (const ActionMatrix& m : im) orders.insert(m.order());
        CHECK(orders == std::multiset<int>{1, 2, 2, 2, 3, 3});
    }
}

TEST_CASE("brute_force_automorphisms") {
    CHECK(brute_force_automorphisms({1, 1}, 3) == rep_image({1, 1}));
    CHECK(brute_force_automorphisms({1, 0}, 3) == rep_image({1, 0}));
    // X_5 has an entry of magnitude 5; a bound of 2 only sees the identity
    CHECK(brute_force_automorphisms({5, 1}, 2) == AutomorphismSet{ActionMatrix()});
    CHECK_THROWS_AS(brute_force_automorphisms({1, 1}, 0), std::invalid_argument);
}

TEST_CASE("classifier agrees with exhaustive search on a small box") {
    for (long long k = -2; k <= 2; ++k)
        for (long long l = -2; l <= 2; ++l) {
            BundleParams p{k, l};
            CHECK(rep_image(p) == brute_force_automorphisms(p, std::abs(k) + 3));
        }
}

TEST_CASE("every matrix in the image preserves the orientation evaluation") {
    for (BundleParams p : {BundleParams{1, 1}, BundleParams{2, -1}, BundleParams{0, 3}}) {
        Ring ring = make_pn_ring(p.k, p.l);
        Element s = ring.generator(0);
        Element t = ring.generator(1);
        for (const ActionMatrix& m : rep_image(p)) {
            Element fs = m.at(0, 0) * s + m.at(1, 0) * t;
            Element ft = m.at(0, 1) * s + m.at(1, 1) * t;
            CHECK(evaluate(fs * fs * ft) == 1);
        }
    }
}

TEST_CASE("mcg_extension") {
    SUBCASE("r = -3: S3 quotient with Torelli Z_6 + Z_28") {
        ExtensionDescriptor e = mcg_extension(RInvariant(-3));
        CHECK(e.tag == QuotientTag::S3);
        CHECK(e.quotient_matrices.size() == 6);
        REQUIRE(e.torelli.has_value());
        CHECK(e.torelli->group == FinAbGroup::from_cyclic_orders({6, 28}));
        CHECK(e.torelli->dehn_twist_order == 6);
        CHECK(e.torelli->disk_diffeo_order == 28);
    }
    SUBCASE("r = 13: Z2 quotient with Torelli Z_6 + Z_4") {
        ExtensionDescriptor e = mcg_extension(RInvariant(13));
        CHECK(e.tag == QuotientTag::Z2);
        CHECK(e.quotient_matrices.size() == 2);
        REQUIRE(e.torelli.has_value());
        CHECK(e.torelli->group == FinAbGroup::from_cyclic_orders({6, 4}));
    }
    SUBCASE("r = 4: Z2 quotient, Torelli not computed") {
        ExtensionDescriptor e = mcg_extension(RInvariant(4));
        CHECK(e.tag == QuotientTag::Z2);
        CHECK_FALSE(e.torelli.has_value());
    }
    SUBCASE("inadmissible r is rejected") {
        CHECK_THROWS_AS(mcg_extension(RInvariant(7)), std::invalid_argument);
    }
}
