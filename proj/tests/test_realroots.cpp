#include <pincert/elimination.hpp>
#include <pincert/realroots.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

using namespace pincert;

namespace {

const VarTable TX({"x"});

MultiPoly from_roots(const std::vector<Rational>& roots, const Rational& lc) {
    MultiPoly v = MultiPoly::variable(TX, "x");
    MultiPoly p(lc, TX);
    for (const auto& r : roots) p *= v - MultiPoly(r, TX);
    return p;
}

int brute_count(const std::vector<Rational>& roots, const DomainSpec& dom) {
    std::set<std::string> seen;
    int n = 0;
    for (const auto& r : roots)
        if (dom.contains(r) && seen.insert(r.str()).second) ++n;
    return n;
}

Rational random_rational(std::mt19937_64& rng, long span) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, 6);
    return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("sturm chains match hand computations") {
    SturmSeq s1 = sturm_sequence(parse_poly("x^2 + 1", TX), "x");
    REQUIRE(s1.polys.size() == 3);
    CHECK(s1.polys[0] == parse_poly("x^2 + 1", TX));
    CHECK(s1.polys[1] == parse_poly("2*x", TX));
    CHECK(s1.polys[2] == parse_poly("-1", TX));

    SturmSeq s2 = sturm_sequence(parse_poly("x^3 - x", TX), "x");
    REQUIRE(s2.polys.size() == 4);
    CHECK(s2.polys[1] == parse_poly("3*x^2 - 1", TX));
    CHECK(s2.polys[2] == parse_poly("2/3*x", TX));
    CHECK(s2.polys[3] == parse_poly("1", TX));

    // non-squarefree input: chain stops at the gcd stage, last entry non-constant
    SturmSeq s3 = sturm_sequence(parse_poly("x^2", TX), "x");
    REQUIRE(s3.polys.size() == 2);
    CHECK(s3.polys[1] == parse_poly("2*x", TX));
    CHECK(s3.polys.back().degree() > 0);

    CHECK_THROWS_AS(sturm_sequence(MultiPoly(), "x"), arithmetic_error);
    VarTable txy({"x", "y"});
    CHECK_THROWS_AS(sturm_sequence(parse_poly("x*y", txy), "x"), arithmetic_error);
    // a multivariate table is fine as long as only the chain variable occurs
    CHECK_NOTHROW(sturm_sequence(parse_poly("x^2 - 3", txy), "x"));
}

TEST_CASE("root counts on the standard examples") {
    CHECK(count_real_roots(parse_poly("x^2 + 1", TX), "x", DomainSpec::all()) == 0);
    CHECK(count_real_roots(parse_poly("x^3 - x", TX), "x",
                           DomainSpec::between(Rational(-2L), Rational(2L))) == 3);
    VarTable ty({"y"});
    CHECK(count_real_roots(parse_poly("720*y^4 + 1296*y^2 + 576", ty), "y",
                           DomainSpec::all()) == 0);
}

TEST_CASE("closed domains include endpoint roots via nudging") {
    MultiPoly p = parse_poly("x^2 - 1", TX);
    CHECK(count_real_roots(p, "x", DomainSpec::between(Rational(1L), Rational(2L))) == 1);
    CHECK(count_real_roots(p, "x", DomainSpec::between(Rational(-1L), Rational(1L))) == 2);
    CHECK(count_real_roots(p, "x", DomainSpec::geq(Rational(0L))) == 1);
    CHECK(count_real_roots(p, "x", DomainSpec::geq(Rational(1L))) == 1);
    CHECK(count_real_roots(p, "x", DomainSpec::geq(Rational(2L))) == 0);
    CHECK(count_real_roots(p, "x", DomainSpec::leq(Rational(-1L))) == 1);
    CHECK(count_real_roots(p, "x", DomainSpec::between(Rational(-1L), Rational(-1L))) == 1);
    // distinct-root counting on a non-squarefree polynomial
    MultiPoly q = parse_poly("(x - 1)^2*(x + 2)", TX);
    CHECK(count_real_roots(q, "x", DomainSpec::all()) == 2);
    CHECK(count_real_roots(q, "x", DomainSpec::geq(Rational(1L))) == 1);
}

TEST_CASE("sturm count equals brute force on factored polynomials") {
    std::mt19937_64 rng(401);
    std::uniform_int_distribution<int> nroots(1, 8);
    std::uniform_int_distribution<int> rep(0, 3);
    for (int trial = 0; trial < 1000; ++trial) {
        int k = nroots(rng);
        std::vector<Rational> roots;
        for (int i = 0; i < k; ++i) roots.push_back(random_rational(rng, 10));
        if (rep(rng) == 0 && static_cast<int>(roots.size()) < 8)
            roots.push_back(roots[0]);  // exercise multiplicity
        MultiPoly p = from_roots(roots, random_rational(rng, 3) + Rational(4L));
        DomainSpec dom;
        switch (trial % 4) {
            case 0: dom = DomainSpec::all(); break;
            case 1: dom = DomainSpec::geq(random_rational(rng, 8)); break;
            case 2: dom = DomainSpec::leq(random_rational(rng, 8)); break;
            default: {
                Rational a = random_rational(rng, 8), b = random_rational(rng, 8);
                if (b < a) std::swap(a, b);
                dom = DomainSpec::between(a, b);
            }
        }
        CHECK(count_real_roots(p, "x", dom) == brute_count(roots, dom));
    }
}

TEST_CASE("counts are additive across a non-root cut") {
    std::mt19937_64 rng(402);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rational> roots;
        for (int i = 0; i < 5; ++i) roots.push_back(random_rational(rng, 10));
        MultiPoly p = from_roots(roots, Rational(1L));
        Rational a(-20L), b = random_rational(rng, 12), c(20L);
        if (std::any_of(roots.begin(), roots.end(), [&](const Rational& r) { return r == b; }))
            continue;
        CHECK(count_real_roots(p, "x", DomainSpec::between(a, c)) ==
              count_real_roots(p, "x", DomainSpec::between(a, b)) +
                  count_real_roots(p, "x", DomainSpec::between(b, c)));
    }
}

TEST_CASE("positivity certificates on the stock examples") {
    VarTable tu({"u"});
    MultiPoly cubic = parse_poly("u^3 + 18*u^2 - 243*u + 648", tu);
    PositivityCert c1 = certify_positive(cubic, "u", DomainSpec::geq(Rational(0L)));
    CHECK(c1.pass);
    CHECK(c1.method == "sturm-no-roots+sample");

    // all-nonnegative coefficients short-circuit on rays
    MultiPoly easy = parse_poly("u^4 + 3*u + 7", tu);
    PositivityCert c2 = certify_positive(easy, "u", DomainSpec::geq(Rational(0L)));
    CHECK(c2.pass);
    CHECK(c2.method == "nonneg-coeffs-ray");
    // shifted ray: positive on [2, inf) after u -> u + 2
    MultiPoly sh = parse_poly("u^2 - 3*u + 3", tu);
    PositivityCert c3 = certify_positive(sh, "u", DomainSpec::geq(Rational(2L)));
    CHECK(c3.pass);
    CHECK(c3.method == "nonneg-coeffs-ray");
    // descending ray via reflection
    PositivityCert c4 = certify_positive(parse_poly("u^2 - 3*u + 3", tu), "u",
                                         DomainSpec::leq(Rational(0L)));
    CHECK(c4.pass);
    CHECK(c4.method == "nonneg-coeffs-ray");

    PositivityCert f1 = certify_positive(parse_poly("x^2 - 1", TX), "x", DomainSpec::all());
    CHECK_FALSE(f1.pass);
    bool has_interval = false;
    for (const auto& [k, v] : f1.witnesses) has_interval = has_interval || k == "root_interval";
    CHECK(has_interval);

    // value touching zero fails even with an even-order root
    PositivityCert f2 = certify_positive(parse_poly("(x - 1)^2", TX), "x", DomainSpec::all());
    CHECK_FALSE(f2.pass);

    PositivityCert z = certify_positive(MultiPoly(Rational(0L), TX), "x", DomainSpec::all());
    CHECK_FALSE(z.pass);

    PositivityCert k = certify_positive(MultiPoly(Rational(5L), TX), "x", DomainSpec::all());
    CHECK(k.pass);
}

TEST_CASE("passing certificates imply positive spot checks") {
    std::mt19937_64 rng(403);
    std::vector<std::pair<MultiPoly, DomainSpec>> cases = {
        {parse_poly("x^4 + x^2 + 1/2", TX), DomainSpec::all()},
        {parse_poly("x^2 - 4*x + 5", TX), DomainSpec::all()},
        {parse_poly("x^3 + 2", TX), DomainSpec::geq(Rational(0L))},
        {parse_poly("-x^3 + 2", TX), DomainSpec::leq(Rational(0L))},
        {parse_poly("x^2 + x + 1", TX), DomainSpec::between(Rational(-5L), Rational(5L))},
    };
    for (const auto& [p, dom] : cases) {
        PositivityCert cert = certify_positive(p, "x", dom);
        REQUIRE(cert.pass);
        for (int i = 0; i < 100; ++i) {
            Rational t = random_rational(rng, 30);
            switch (dom.kind) {
                case DomainSpec::Kind::ray_geq: t = dom.a + t.abs(); break;
                case DomainSpec::Kind::ray_leq: t = dom.b - t.abs(); break;
                case DomainSpec::Kind::segment:
                    t = dom.a + (dom.b - dom.a) * Rational(static_cast<long>(rng() % 101), 100);
                    break;
                default: break;
            }
            CHECK(p.evaluate({{"x", t}}).sign() > 0);
        }
    }
}

TEST_CASE("factor-product certificates expand and verify") {
    VarTable tr({"r"});
    MultiPoly f1 = parse_poly("r + 6", tr);
    MultiPoly f2 = parse_poly("3*r + 8", tr);
    MultiPoly target = MultiPoly(Rational(10L), tr) * f1.pow(2) * f2;
    PositivityCert ok = certify_positive_factors(
        target, Rational(10L), {{f1, 2}, {f2, 1}}, "r", DomainSpec::geq(Rational(0L)));
    CHECK(ok.pass);
    CHECK(ok.method == "factor-product");

    // expansion mismatch is fatal even with positive factors
    PositivityCert bad = certify_positive_factors(
        target + MultiPoly(Rational(1L), tr), Rational(10L), {{f1, 2}, {f2, 1}}, "r",
        DomainSpec::geq(Rational(0L)));
    CHECK_FALSE(bad.pass);

    // negative scale is fatal
    PositivityCert neg = certify_positive_factors(
        -target, Rational(-10L), {{f1, 2}, {f2, 1}}, "r", DomainSpec::geq(Rational(0L)));
    CHECK_FALSE(neg.pass);

    // factor not positive on the domain is fatal
    MultiPoly g = parse_poly("r - 1", tr);
    PositivityCert nf = certify_positive_factors(
        MultiPoly(Rational(2L), tr) * g, Rational(2L), {{g, 1}}, "r",
        DomainSpec::geq(Rational(0L)));
    CHECK_FALSE(nf.pass);
}

TEST_CASE("squarefree chains terminate in constants and discriminants agree") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 60; ++trial) {
        std::set<std::string> used;
        std::vector<Rational> roots;
        while (roots.size() < 4) {
            Rational r = random_rational(rng, 15);
            if (used.insert(r.str()).second) roots.push_back(r);
        }
        MultiPoly p = from_roots(roots, Rational(1L));
        SturmSeq seq = sturm_sequence(p, "x");
        CHECK(seq.polys.back().degree() == 0);
        CHECK_FALSE(discriminant(p, "x").value.is_zero());
        // a forced double root collapses the discriminant to zero
        MultiPoly v = MultiPoly::variable(TX, "x");
        MultiPoly dbl = p * (v - MultiPoly(roots[0], TX));
        CHECK(discriminant(dbl, "x").value.is_zero());
    }
}

TEST_CASE("domain parsing round trips") {
    CHECK(DomainSpec::parse("all").kind == DomainSpec::Kind::whole_line);
    CHECK(DomainSpec::parse("geq 3/2").a == Rational(3, 2));
    CHECK(DomainSpec::parse("leq -1").b == Rational(-1L));
    DomainSpec seg = DomainSpec::parse("-2, 7/2");
    CHECK(seg.a == Rational(-2L));
    CHECK(seg.b == Rational(7, 2));
    for (const char* text : {"all", "geq 0", "leq 5/3", "-1,2"})
        CHECK(DomainSpec::parse(DomainSpec::parse(text).str()).str() ==
              DomainSpec::parse(text).str());
    CHECK_THROWS_AS(DomainSpec::parse("between 1 and 2"), arithmetic_error);
    CHECK_THROWS_AS(DomainSpec::between(Rational(2L), Rational(1L)), arithmetic_error);
}
