#include <random>

#include "doctest.h"
#include "test_support.hpp"

#include "cdga/cohomology.hpp"
#include "cdga/errors.hpp"

using namespace cdga;

TEST_CASE("Betti numbers of the solvable six-generator complex") {
    auto c = ts::cat("g6_15_m1");
    CHECK(betti(c, 6) == std::vector<int>{1, 1, 2, 4, 2, 1, 1});
    // beyond the top degree everything is zero
    CHECK(betti(c, 8) == std::vector<int>{1, 1, 2, 4, 2, 1, 1, 0, 0});
}

TEST_CASE("canonical representatives") {
    auto c = ts::cat("g6_15_m1");
    auto reps = [&](int k) {
        CohomologySpace h(c, k);
        std::vector<std::string> out;
        for (const auto& r : h.representatives()) out.push_back(r.str());
        return out;
    };
    CHECK(reps(0) == std::vector<std::string>{"1"});
    CHECK(reps(1) == std::vector<std::string>{"x6"});
    CHECK(reps(2) == std::vector<std::string>{"x1*x6 - x3*x4", "x2*x5 + x3*x4"});
    CHECK(reps(3) == std::vector<std::string>{"x1*x2*x3", "x1*x2*x5 + x1*x3*x4",
                                              "x3*x4*x6", "x4*x5*x6"});
    CHECK(reps(4) == std::vector<std::string>{"x1*x3*x4*x6", "x2*x3*x4*x5"});
    CHECK(reps(5) == std::vector<std::string>{"x1*x2*x3*x4*x5"});
    CHECK(reps(6) == std::vector<std::string>{"x1*x2*x3*x4*x5*x6"});
}

TEST_CASE("classes, coordinates, and lifts") {
    auto c = ts::cat("g6_15_m1");
    CohomologySpace h3(c, 3);
    REQUIRE(h3.dim() == 4);

    // the two cocycles x256 and x346 differ by d(x45), hence one class
    auto c256 = h3.class_of(ts::el(c, "x2*x5*x6"));
    auto c346 = h3.class_of(ts::el(c, "x3*x4*x6"));
    CHECK(c256.coords == Vec{0, 0, 1, 0});
    CHECK(c256.coords == c346.coords);
    CHECK(c256.representative == ts::el(c, "x3*x4*x6"));
    CHECK(!c256.is_zero());

    // exact cocycles are the zero class
    auto exact = h3.class_of(c.d(ts::el(c, "x2*x4")));
    CHECK(exact.is_zero());
    CHECK(exact.coords == Vec{0, 0, 0, 0});

    CohomologySpace h4(c, 4);
    CHECK(h4.class_of(ts::el(c, "x1*x2*x5*x6")).coords == Vec{1, -1});

    // lift of coordinate vectors is linear in the representatives
    CHECK(h3.lift(Vec{0, 0, 0, 2}) == ts::el(c, "2*x4*x5*x6"));
    CHECK(h3.to_vec(h3.from_vec(Vec(20, 0))) == Vec(20, 0));

    CHECK_THROWS_AS(h3.class_of(ts::el(c, "x1*x2*x4")), precondition_error); // not closed
    CHECK_THROWS_AS(h3.class_of(ts::el(c, "x6")), precondition_error);       // wrong degree
}

TEST_CASE("exactness witnesses are canonical primitives") {
    auto c = ts::cat("g6_15_m1");
    auto w = exactness_witness(c, ts::el(c, "x2*x5*x6 - x3*x4*x6"));
    REQUIRE(w.has_value());
    CHECK(*w == ts::el(c, "x4*x5"));
    CHECK(c.d(*w) == ts::el(c, "x2*x5*x6 - x3*x4*x6"));

    CHECK(!exactness_witness(c, ts::el(c, "x6")).has_value()); // closed, not exact
    auto zero = exactness_witness(c, Element::zero(c.algebra()));
    REQUIRE(zero.has_value());
    CHECK(zero->is_zero());
    CHECK_THROWS_AS(exactness_witness(c, ts::el(c, "x1*x2")), precondition_error);

    // randomized: witnesses of actual boundaries always exist and work
    std::mt19937 rng(555);
    for (int trial = 0; trial < 40; ++trial) {
        int p = 1 + (int)(rng() % 4);
        Element b = c.d(ts::random_element(c, p, rng));
        auto prim = exactness_witness(c, b);
        REQUIRE(prim.has_value());
        CHECK(c.d(*prim) == b);
    }
}

TEST_CASE("cup products") {
    auto c = ts::cat("g6_15_m1");
    CohomologySpace h1(c, 1), h2(c, 2), h3(c, 3), h4(c, 4);

    auto x6 = h1.class_of(ts::el(c, "x6"));
    auto omega = h2.class_of(ts::el(c, "2*x1*x6 + x2*x5 - x3*x4"));
    CHECK(cup(h1, h2, x6, omega).is_zero()); // x6 wedge omega is exact
    CHECK(cup(h1, h1, x6, x6).is_zero());

    // cup against a representative equals the class of the product
    auto a = h2.class_of(ts::el(c, "x1*x6 - x3*x4"));
    auto b = h2.class_of(ts::el(c, "x2*x5 + x3*x4"));
    auto ab = cup(h2, h2, a, b);
    CHECK(ab.coords == h4.class_of(a.representative * b.representative).coords);

    CHECK_THROWS_AS(cup(h1, CohomologySpace(ts::cat("circle"), 1), x6, x6),
                    precondition_error);
}

TEST_CASE("cup products do not depend on the representative") {
    auto c = ts::cat("g6_15_m1");
    std::mt19937 rng(808);
    CohomologySpace h2(c, 2), h3(c, 3);
    auto a = h2.class_of(ts::el(c, "x1*x6 - x3*x4"));
    for (int trial = 0; trial < 30; ++trial) {
        Element shift = c.d(ts::random_element(c, 1, rng));
        auto a2 = h2.class_of(a.representative + shift);
        CHECK(a2.coords == a.coords);
        Element shift3 = c.d(ts::random_element(c, 2, rng));
        auto z = h3.class_of(ts::el(c, "x4*x5*x6") + shift3);
        auto left = cup(h2, h3, a, h3.class_of(ts::el(c, "x4*x5*x6")));
        auto right = cup(h2, h3, a2, z);
        CHECK(left.coords == right.coords);
    }
}

TEST_CASE("rank of multiplication by a closed two-form") {
    auto c = ts::cat("g6_15_m1");
    Element omega_tilde = ts::el(c, "2*x1*x6 + x2*x5 - x3*x4");
    Element omega12 = ts::el(c, "3*x1*x6 + x2*x5 - 2*x3*x4");

    CHECK(cup_map_rank(c, omega_tilde, 1) == 0); // degenerate direction
    CHECK(cup_map_rank(c, omega12, 0) == 1);
    CHECK(cup_map_rank(c, omega12, 1) == 1);
    CHECK(cup_map_rank(c, omega12, 2) == 2);
    CHECK(cup_map_rank(c, omega12, 3) == 1);
    CHECK(cup_map_rank(c, omega12, 4) == 1);
    CHECK(cup_map_rank(c, omega12, 5) == 0);

    CHECK_THROWS_AS(cup_map_rank(c, ts::el(c, "x1*x2"), 1), precondition_error);
}

TEST_CASE("differential matrices") {
    auto c = ts::cat("g6_15_m1");
    auto d1 = differential_matrix(c, 1);
    CHECK(d1.rows() == 15);
    CHECK(d1.cols() == 6);
    CHECK(kernel_basis(d1).dim() == 1); // only x6 is closed
    CHECK(rref(d1).rank == 5);
    CHECK(rref(differential_matrix(c, 2)).rank == 8);
    CHECK(kernel_basis(differential_matrix(c, 3)).dim() == 12);
}

TEST_CASE("Betti numbers of the other catalog complexes") {
    CHECK(betti(ts::cat("heisenberg3"), 3) == std::vector<int>{1, 2, 2, 1});
    CHECK(betti(ts::cat("circle"), 1) == std::vector<int>{1, 1});
    CHECK(betti(ts::cat("s2_model"), 6) == std::vector<int>{1, 0, 1, 0, 0, 0, 0});
    auto ab4 = betti(ts::cat("abelian4"), 4);
    CHECK(ab4 == std::vector<int>{1, 4, 6, 4, 1});
}

TEST_CASE("Euler characteristic agrees between complex and cohomology") {
    auto c = ts::cat("g6_15_m1");
    long chi_complex = 0, chi_coh = 0;
    auto b = betti(c, 6);
    for (int k = 0; k <= 6; ++k) {
        int sgn = k % 2 ? -1 : 1;
        chi_complex += sgn * (long)basis_of_degree(*c.algebra(), k).size();
        chi_coh += sgn * b[k];
    }
    CHECK(chi_complex == 0);
    CHECK(chi_coh == 0);
}
