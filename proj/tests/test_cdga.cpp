#include <random>

#include "doctest.h"
#include "test_support.hpp"

#include "cdga/cdga.hpp"
#include "cdga/errors.hpp"

using namespace cdga;

TEST_CASE("solvable six-generator table") {
    auto c = ts::cat("g6_15_m1");
    auto dg = [&](const char* g) { return c.d(ts::el(c, g)); };
    CHECK(dg("x1") == ts::el(c, "-x2*x3"));
    CHECK(dg("x2") == ts::el(c, "-x2*x6"));
    CHECK(dg("x3") == ts::el(c, "x3*x6"));
    CHECK(dg("x4") == ts::el(c, "-x2*x6 - x4*x6"));
    CHECK(dg("x5") == ts::el(c, "-x3*x6 + x5*x6"));
    CHECK(dg("x6").is_zero());
}

TEST_CASE("Leibniz extension on two-forms and beyond") {
    auto c = ts::cat("g6_15_m1");
    auto d = [&](const char* g) { return c.d(ts::el(c, g)); };
    CHECK(d("x1*x6") == ts::el(c, "-x2*x3*x6"));
    CHECK(d("x2*x4") == ts::el(c, "2*x2*x4*x6"));
    CHECK(d("x4*x5") == ts::el(c, "x2*x5*x6 - x3*x4*x6"));
    CHECK(d("x1*x4*x5") == ts::el(c, "-x1*x2*x5*x6 + x1*x3*x4*x6 - x2*x3*x4*x5"));
    CHECK(d("x1*x5*x6") == ts::el(c, "-x2*x3*x5*x6"));
    CHECK(d("x2*x4*x5") == ts::el(c, "x2*x3*x4*x6 - x2*x4*x5*x6"));
    CHECK(d("x1*x2*x3*x5") == ts::el(c, "-x1*x2*x3*x5*x6"));
    CHECK(d("x1*x3*x4*x5") == ts::el(c, "-x1*x2*x3*x5*x6 - x1*x3*x4*x5*x6"));
    CHECK(d("x1*x2*x3*x4*x5").is_zero());
    // d is linear and kills the symplectic candidates
    CHECK(c.d(ts::el(c, "2*x1*x6 + x2*x5 - x3*x4")).is_zero());
    CHECK(c.d(ts::el(c, "3*x1*x6 + x2*x5 - 2*x3*x4")).is_zero());
}

TEST_CASE("d squares to zero and satisfies the product rule") {
    std::mt19937 rng(1234);
    for (const auto& name : catalog_names()) {
        auto c = ts::cat(name);
        for (int trial = 0; trial < 40; ++trial) {
            int p = 1 + (int)(rng() % 3), q = 1 + (int)(rng() % 3);
            Element a = ts::random_element(c, p, rng);
            Element b = ts::random_element(c, q, rng);
            CHECK(c.d(c.d(a)).is_zero());
            int sign = p % 2 ? -1 : 1;
            CHECK(c.d(a * b) == c.d(a) * b + (a * c.d(b)).scaled(sign));
        }
    }
}

TEST_CASE("validate flags broken differentials") {
    auto alg = Algebra::make({{"x1", 1}, {"x2", 1}, {"x3", 1}, {"x4", 1}, {"x5", 1}});
    auto e = [&](const char* t) {
        auto r = parse_element(alg, t);
        REQUIRE(r.ok());
        return *r.element;
    };

    SUBCASE("well formed") {
        DifferentialSpec spec;
        spec.by_generator["x1"] = e("x2*x3");
        auto out = validate(alg, spec);
        CHECK(out.ok());
        REQUIRE(out.cdga.has_value());
        CHECK(out.cdga->d(e("x1")) == e("x2*x3"));
        CHECK(out.cdga->d(e("x2")).is_zero()); // omitted generators are closed
    }

    SUBCASE("degree mismatch") {
        DifferentialSpec spec;
        spec.by_generator["x1"] = e("x2");
        auto out = validate(alg, spec);
        REQUIRE(out.issues.size() == 1);
        CHECK(out.issues[0].generator == "x1");
        CHECK(out.issues[0].message == "differential must be homogeneous of degree 2");
        CHECK_THROWS_AS(make_cdga(alg, spec), validation_error);
    }

    SUBCASE("d over d nonzero, with residue") {
        DifferentialSpec spec;
        spec.by_generator["x1"] = e("x2*x3");
        spec.by_generator["x2"] = e("x4*x5");
        auto out = validate(alg, spec);
        REQUIRE(out.issues.size() == 1);
        CHECK(out.issues[0].generator == "x1");
        CHECK(out.issues[0].message == "d(d g) is nonzero");
        CHECK(out.issues[0].residue == e("x3*x4*x5"));
    }

    SUBCASE("unknown generator") {
        DifferentialSpec spec;
        spec.by_generator["y"] = e("x2*x3");
        auto out = validate(alg, spec);
        REQUIRE(out.issues.size() == 1);
        CHECK(out.issues[0].message == "unknown generator");
    }
}

TEST_CASE("structure constants build the cochain complex") {
    StructureConstants sc;
    sc.n = 3;
    sc.c[{0, 1, 2}] = 1; // [e1, e2] = e3
    CHECK(!check_jacobi(sc).has_value());
    CHECK(sc.bracket_coeff(0, 1, 2) == 1);
    CHECK(sc.bracket_coeff(1, 0, 2) == -1); // antisymmetry
    CHECK(sc.bracket_coeff(0, 0, 2) == 0);

    Cdga heis = chevalley_eilenberg(sc);
    CHECK(heis == ts::cat("heisenberg3"));
    auto x3 = Element::generator(heis.algebra(), 2);
    auto x1 = Element::generator(heis.algebra(), 0);
    auto x2 = Element::generator(heis.algebra(), 1);
    CHECK(heis.d(x3) == -(x1 * x2));
    CHECK(heis.d(x1).is_zero());
}

TEST_CASE("Jacobi violations are reported with the offending triple") {
    StructureConstants sc;
    sc.n = 3;
    sc.c[{0, 1, 2}] = 1; // [e1, e2] = e3
    sc.c[{1, 2, 1}] = 1; // [e2, e3] = e2 breaks Jacobi
    auto fail = check_jacobi(sc);
    REQUIRE(fail.has_value());
    CHECK(fail->i == 0);
    CHECK(fail->j == 1);
    CHECK(fail->k == 2);
    CHECK_THROWS_WITH_AS(chevalley_eilenberg(sc),
                         doctest::Contains("(1, 2, 3)"), validation_error);

    // so(3)-style constants pass: [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2
    StructureConstants so3;
    so3.n = 3;
    so3.c[{0, 1, 2}] = 1;
    so3.c[{1, 2, 0}] = 1;
    so3.c[{0, 2, 1}] = -1;
    CHECK(!check_jacobi(so3).has_value());
}

TEST_CASE("catalog lookups") {
    CHECK(catalog_names() ==
          std::vector<std::string>{"g6_15_m1", "abelian3", "heisenberg3", "s2_model", "circle"});
    for (const auto& n : catalog_names()) CHECK(catalog(n).has_value());
    CHECK(catalog("abelian4").has_value());
    CHECK(catalog("abelian(4)").has_value());
    CHECK(*catalog("abelian4") == *catalog("abelian(4)"));
    CHECK(!catalog("abelian0").has_value());
    CHECK(!catalog("abelian99").has_value());
    CHECK(!catalog("nope").has_value());

    auto ab = *catalog("abelian3");
    CHECK(ab.algebra()->size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(ab.d_generator(i).is_zero());

    auto s2 = *catalog("s2_model");
    REQUIRE(s2.algebra()->size() == 2);
    CHECK(s2.algebra()->degree(0) == 2);
    CHECK(s2.algebra()->degree(1) == 3);
    auto u = Element::generator(s2.algebra(), 0);
    auto v = Element::generator(s2.algebra(), 1);
    CHECK(s2.d(v) == u * u);

    auto circ = *catalog("circle");
    CHECK(circ.algebra()->size() == 1);
    CHECK(circ.d_generator(0).is_zero());
}

TEST_CASE("complex equality") {
    CHECK(ts::cat("g6_15_m1") == ts::cat("g6_15_m1"));
    CHECK(!(ts::cat("g6_15_m1") == ts::cat("heisenberg3")));
    // same algebra, different differential
    auto a = ts::parse("algebra p { generators: x1:1, x2:1, x3:1\n d x3 = x1*x2 }");
    auto b = ts::parse("algebra p { generators: x1:1, x2:1, x3:1 }");
    CHECK(!(a == b));
}
