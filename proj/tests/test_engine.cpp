#include <fpoly/engine.hpp>

#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

using namespace fpoly;

namespace {

Polynomial poly_of(int rank, std::vector<std::pair<Monomial, Sqrt2>> terms) {
    Polynomial p(rank);
    for (auto& [m, c] : terms) p.add_term(m, c);
    return p;
}

}  // namespace

TEST_CASE("golden A3") {
    FResult res = f_polynomial({{Family::A, 3}, {{1, 3, 2}}, 2, 1, Method::Both});
    CHECK(res.polynomial.str() == "1 + t1 + t3 + t1*t3 + t1*t2*t3");
    REQUIRE(res.agreement.has_value());
    CHECK(*res.agreement);
}

TEST_CASE("golden D4 wedge with the coefficient-2 term") {
    FResult res = f_polynomial({{Family::D, 4}, {{1, 2, 3, 4}}, 2, 2, Method::Both});
    CHECK(res.polynomial.terms().size() == 10);
    CHECK(res.polynomial.coefficient({1, 1, 0, 0}) == Sqrt2{2, 0});
    CHECK(res.polynomial ==
          poly_of(4, {{{0, 0, 0, 0}, Sqrt2::one()},
                      {{1, 0, 0, 0}, Sqrt2::one()},
                      {{0, 1, 0, 0}, Sqrt2::one()},
                      {{1, 1, 0, 0}, Sqrt2{2, 0}},
                      {{1, 1, 1, 0}, Sqrt2::one()},
                      {{1, 1, 0, 1}, Sqrt2::one()},
                      {{1, 2, 0, 0}, Sqrt2::one()},
                      {{1, 2, 1, 0}, Sqrt2::one()},
                      {{1, 2, 0, 1}, Sqrt2::one()},
                      {{1, 2, 1, 1}, Sqrt2::one()}}));
}

TEST_CASE("golden D4 spin") {
    FResult res = f_polynomial({{Family::D, 4}, {{1, 2, 3, 4}}, 3, 2, Method::Both});
    CHECK(res.polynomial.str() == "1 + t2 + t2*t4");
}

TEST_CASE("golden B2 table rows") {
    LieType b2{Family::B, 2};
    CoxeterWord c{{2, 1}};
    auto table = f_table(b2, c, Method::Both);
    bool saw_k1m1 = false, saw_k2m2 = false;
    for (const auto& r : table) {
        CHECK(r.polynomial.constant_term() == Sqrt2::one());
        if (r.m == 0) CHECK(r.polynomial == Polynomial::one(2));
        if (r.k == 1 && r.m == 1) {
            saw_k1m1 = true;
            CHECK(r.polynomial.str() == "1 + 2*t2 + t2^2 + t1*t2^2");
        }
        if (r.k == 2 && r.m == 2) {
            saw_k2m2 = true;
            CHECK(r.polynomial.str() == "1 + t2 + t1*t2");
        }
    }
    CHECK(saw_k1m1);
    CHECK(saw_k2m2);
}

TEST_CASE("A1 table") {
    auto table = f_table({Family::A, 1}, CoxeterWord{{1}});
    REQUIRE(table.size() == 2);
    CHECK(table[0].polynomial == Polynomial::one(1));
    CHECK(table[1].polynomial.str() == "1 + t1");
}

TEST_CASE("request validation") {
    CHECK_THROWS_AS(f_polynomial({{Family::A, 3}, {{1, 3, 2}}, 2, -1, Method::Paths}).polynomial,
                    std::invalid_argument);
    int h = height({Family::A, 3}, CoxeterWord{{1, 3, 2}}, 2);
    CHECK_THROWS_AS(
        f_polynomial({{Family::A, 3}, {{1, 3, 2}}, 2, h + 1, Method::Paths}).polynomial,
        std::invalid_argument);
    CHECK_THROWS_AS(f_polynomial({{Family::A, 3}, {{1, 3, 2}}, 4, 0, Method::Paths}).polynomial,
                    std::invalid_argument);
    CHECK_THROWS_AS(f_polynomial({{Family::D, 3}, {{1, 3, 2}}, 1, 0, Method::Paths}).polynomial,
                    std::invalid_argument);
    CHECK_THROWS_AS(f_polynomial({{Family::A, 3}, {{1, 1, 2}}, 1, 0, Method::Paths}).polynomial,
                    std::invalid_argument);
}

TEST_CASE("m = h yields a non-constant polynomial on non-trivial orbits") {
    for (const LieType& type : testutil::sweep_types()) {
        if (type.rank < 2) continue;
        for (const CoxeterWord& c : testutil::coxeter_words(type))
            for (int k = 1; k <= type.rank; ++k) {
                WeightLabel base = fundamental_label(type, k);
                if (coxeter_apply(type, c, base, 1) == base) continue;
                int h = height(type, c, k);
                FResult res = f_polynomial({type, c, k, h, Method::Paths});
                CHECK(res.polynomial != Polynomial::one(type.rank));
            }
    }
}

TEST_CASE("crosscheck passes on reference inputs") {
    CrosscheckReport d4 = crosscheck({Family::D, 4}, CoxeterWord{{1, 2, 3, 4}});
    CHECK(d4.ok());
    CHECK(d4.str().find("all (k,m) agree") != std::string::npos);

    // Both Coxeter words of B2: h(1;c) = h(2;c) = 2 gives 6 (k,m) cells each.
    for (const CoxeterWord& c : {CoxeterWord{{1, 2}}, CoxeterWord{{2, 1}}}) {
        CrosscheckReport rep = crosscheck({Family::B, 2}, c);
        CHECK(rep.ok());
        CHECK(rep.cells == 6);
    }
}

TEST_CASE("f_table parallel and serial results agree") {
    LieType d4{Family::D, 4};
    CoxeterWord c{{3, 1, 4, 2}};
    setenv("FPOLY_THREADS", "1", 1);
    auto serial = f_table(d4, c);
    setenv("FPOLY_THREADS", "4", 1);
    auto parallel = f_table(d4, c);
    unsetenv("FPOLY_THREADS");
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].k == parallel[i].k);
        CHECK(serial[i].m == parallel[i].m);
        CHECK(serial[i].polynomial == parallel[i].polynomial);
    }
}
