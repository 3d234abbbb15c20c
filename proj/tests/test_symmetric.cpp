#include <pincert/elimination.hpp>
#include <pincert/poly_io.hpp>
#include <pincert/symmetric.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace pincert;

namespace {

const VarTable XYZ({"x", "y", "z"});

MultiPoly random_sigma_poly(std::mt19937_64& rng, int terms, int deg) {
    VarTable st = sigma_table();
    std::uniform_int_distribution<int> d(0, deg);
    std::uniform_int_distribution<long> co(-7, 7);
    MultiPoly p(Rational(0L), st);
    for (int i = 0; i < terms; ++i)
        p += MultiPoly::monomial(st, {d(rng), d(rng), d(rng)}, Rational(co(rng)));
    return p;
}

}  // namespace

TEST_CASE("symmetry detection") {
    CHECK(is_symmetric(parse_poly("x^2 + y^2 + z^2", XYZ), XYZ.names()));
    CHECK(is_symmetric(parse_poly("x*y*z - 4", XYZ), XYZ.names()));
    CHECK_FALSE(is_symmetric(parse_poly("x - y", XYZ), XYZ.names()));
    CHECK_FALSE(is_symmetric(parse_poly("x^2*y + y^2*z + z^2*x", XYZ), XYZ.names()));
    // symmetric in a subset only
    CHECK(is_symmetric(parse_poly("x*y + z", XYZ), {"x", "y"}));
    CHECK_FALSE(is_symmetric(parse_poly("x*y + z", XYZ), {"y", "z"}));
}

TEST_CASE("reduction to elementary symmetric polynomials") {
    VarTable st = sigma_table();
    CHECK(to_elementary(parse_poly("x^2 + y^2 + z^2", XYZ)).poly ==
          parse_poly("sigma1^2 - 2*sigma2", st));
    CHECK(to_elementary(parse_poly("x^3 + y^3 + z^3", XYZ)).poly ==
          parse_poly("sigma1^3 - 3*sigma1*sigma2 + 3*sigma3", st));
    CHECK(to_elementary(parse_poly("x*y + y*z + z*x", XYZ)).poly ==
          parse_poly("sigma2", st));
    CHECK(to_elementary(MultiPoly(Rational(5L), XYZ)).poly == parse_poly("5", st));
    CHECK_THROWS_AS(to_elementary(parse_poly("x - y", XYZ)), arithmetic_error);
}

TEST_CASE("reduction round-trips through back-substitution") {
    std::mt19937_64 rng(501);
    for (int trial = 0; trial < 60; ++trial) {
        // uniqueness of the elementary representation makes this exact
        ElemSymExpr e{random_sigma_poly(rng, 5, 3), 3};
        MultiPoly p = elementary_backsubstitute(e, XYZ);
        REQUIRE(is_symmetric(p, XYZ.names()));
        CHECK(to_elementary(p).poly == e.poly);
    }
}

TEST_CASE("newton power sums") {
    VarTable st = sigma_table();
    CHECK(power_sum_in_elementary(1, 3).poly == parse_poly("sigma1", st));
    CHECK(power_sum_in_elementary(2, 3).poly == parse_poly("sigma1^2 - 2*sigma2", st));
    CHECK(power_sum_in_elementary(4, 3).poly ==
          parse_poly("sigma1^4 - 4*sigma1^2*sigma2 + 2*sigma2^2 + 4*sigma1*sigma3", st));
    for (int m = 1; m <= 8; ++m) {
        MultiPoly direct = parse_poly("x^" + std::to_string(m) + " + y^" + std::to_string(m) +
                                      " + z^" + std::to_string(m), XYZ);
        CHECK(elementary_backsubstitute(power_sum_in_elementary(m, 3), XYZ) == direct);
    }
    // two-variable Newton: f2 = sigma1^2 - 2 sigma2 still, f3 loses the sigma3 term
    CHECK(power_sum_in_elementary(3, 2).poly ==
          parse_poly("sigma1^3 - 3*sigma1*sigma2", sigma_table(2)));
    CHECK_THROWS_AS(power_sum_in_elementary(0, 3), arithmetic_error);
}

TEST_CASE("tau substitution basics") {
    VarTable st = sigma_table();
    VarTable tt = tau_table();
    TauForm t1 = tau_substitute({parse_poly("sigma1^2 - 3*sigma2", st), 3});
    CHECK(t1.poly == parse_poly("tau^2", tt));
    TauForm t2 = tau_substitute({parse_poly("sigma2", st), 3});
    CHECK(t2.poly == parse_poly("(sigma1^2 - tau^2)/3", tt));
    TauForm t3 = tau_substitute({parse_poly("sigma3 + 1", st), 3});
    CHECK(t3.poly == parse_poly("sigma3 + 1", tt));
}

TEST_CASE("tau substitution round-trips on random inputs") {
    std::mt19937_64 rng(502);
    for (int trial = 0; trial < 60; ++trial) {
        ElemSymExpr e{random_sigma_poly(rng, 6, 3), 3};
        TauForm f = tau_substitute(e);
        CHECK(tau_back(f).poly == e.poly);
    }
}

TEST_CASE("cubic discriminant in tau form") {
    VarTable tc({"lambda", "sigma1", "sigma2", "sigma3"});
    MultiPoly cubic = parse_poly("lambda^3 - sigma1*lambda^2 + sigma2*lambda - sigma3", tc);
    MultiPoly disc = discriminant(cubic, "lambda").value.retable(sigma_table());
    TauForm f = tau_substitute({disc, 3});
    VarTable tt = tau_table();
    MultiPoly expect =
        parse_poly("4/27*tau^6 - 1/27*(3*sigma1*tau^2 - sigma1^3 + 27*sigma3)^2", tt);
    CHECK(f.poly == expect);
}
