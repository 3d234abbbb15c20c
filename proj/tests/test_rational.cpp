#include <pincert/rational.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

using pincert::BigInt;
using pincert::Rational;
using pincert::arithmetic_error;
using pincert::snap_to_denominator;

namespace {

// Uniform random integer with up to `digits` decimal digits, either sign.
BigInt random_bigint(std::mt19937_64& rng, int digits) {
    std::uniform_int_distribution<int> len(1, digits);
    std::uniform_int_distribution<int> digit(0, 9);
    std::uniform_int_distribution<int> coin(0, 1);
    int n = len(rng);
    std::string s;
    if (coin(rng)) s += '-';
    s += static_cast<char>('1' + digit(rng) % 9);
    for (int i = 1; i < n; ++i) s += static_cast<char>('0' + digit(rng));
    return BigInt(s);
}

Rational random_rational(std::mt19937_64& rng, int digits) {
    BigInt d = random_bigint(rng, digits);
    if (d.is_zero()) d = BigInt(1);
    return Rational(random_bigint(rng, digits), d);
}

}  // namespace

TEST_CASE("construction canonicalizes") {
    CHECK(Rational::make("6", "4").str() == "3/2");
    CHECK(Rational::make("0", "-7").str() == "0");
    CHECK(Rational::make("-13", "-2430").str() == "13/2430");
    CHECK(Rational::make("-6", "4").str() == "-3/2");
    CHECK(Rational::make("7", "-1").str() == "-7");
    CHECK(Rational(0L).str() == "0");
    CHECK(Rational(42L).str() == "42");
}

TEST_CASE("construction rejects zero denominator") {
    CHECK_THROWS_AS(Rational::make("1", "0"), arithmetic_error);
    CHECK_THROWS_AS(Rational(3L, 0L), arithmetic_error);
    CHECK_THROWS_WITH(Rational::make("1", "0"), "division by zero");
}

TEST_CASE("arithmetic matches worked examples") {
    CHECK(Rational(1, 18) + Rational(7, 18) == Rational(4, 9));
    CHECK(Rational(49, 486) * Rational(24, 5) == Rational(196, 405));
    CHECK(Rational::make("6323", "2835").cmp(Rational(2L)) > 0);
    CHECK(Rational(3, 2) - Rational(1, 6) == Rational(4, 3));
    CHECK(Rational(5, 7) / Rational(10, 21) == Rational(3, 2));
}

TEST_CASE("division by zero rational throws") {
    CHECK_THROWS_AS(Rational(1L) / Rational(0L), arithmetic_error);
    CHECK_THROWS_AS(Rational(0L).inverse(), arithmetic_error);
}

TEST_CASE("parse accepts fractions, integers, and decimals") {
    CHECK(Rational::parse("17.93") == Rational(1793, 100));
    CHECK(Rational::parse("-0.5") == Rational(-1, 2));
    CHECK(Rational::parse("7/18") == Rational(7, 18));
    CHECK(Rational::parse("-12") == Rational(-12L));
    CHECK(Rational::parse("24/5") == Rational(24, 5));
    CHECK_THROWS_AS(Rational::parse("1.2.3"), arithmetic_error);
    CHECK_THROWS_AS(Rational::parse("x"), arithmetic_error);
    CHECK_THROWS_AS(Rational::parse("1/"), arithmetic_error);
}

TEST_CASE("str round trips through parse") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Rational r = random_rational(rng, 40);
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("canonical form is idempotent and unique") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        Rational r = random_rational(rng, 64);
        // den > 0, gcd(num, den) = 1, and zero is 0/1
        CHECK(r.den().sign() > 0);
        CHECK(BigInt::gcd(r.num(), r.den()).abs() == BigInt(1));
        // equal values print identically no matter how they were built
        BigInt k = random_bigint(rng, 10);
        if (k.is_zero()) k = BigInt(3);
        Rational scaled(r.num() * k, r.den() * k);
        CHECK(scaled.str() == r.str());
    }
    CHECK(Rational(0, 5).den() == BigInt(1));
}

TEST_CASE("field axioms hold on random large operands") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 120; ++i) {
        Rational a = random_rational(rng, 64);
        Rational b = random_rational(rng, 64);
        Rational c = random_rational(rng, 64);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Rational() == a);
        CHECK(a * Rational(1L) == a);
        CHECK(a + (-a) == Rational());
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1L));
        CHECK(a - b == a + (-b));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("pow and comparisons") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(0) == Rational(1L));
    CHECK(Rational(-2, 3).pow(2) == Rational(4, 9));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-5, 3) < Rational(-1, 3));
    CHECK(Rational(1, 3) < Rational(1, 2));
    std::mt19937_64 rng(17);
    for (int i = 0; i < 60; ++i) {
        Rational a = random_rational(rng, 30);
        Rational b = random_rational(rng, 30);
        // order is compatible with subtraction
        CHECK((a.cmp(b) < 0) == ((a - b).sign() < 0));
        CHECK((a.cmp(b) == 0) == (a == b));
    }
}

TEST_CASE("bigint exact division and gcd") {
    CHECK(BigInt::div_exact(BigInt(84), BigInt(-7)) == BigInt(-12));
    CHECK_THROWS_AS(BigInt::div_exact(BigInt(5), BigInt(2)), arithmetic_error);
    CHECK_THROWS_AS(BigInt::div_exact(BigInt(5), BigInt(0)), arithmetic_error);
    CHECK(BigInt::gcd(BigInt(84), BigInt(-30)) == BigInt(6));
    CHECK(BigInt("123456789012345678901234567890") * BigInt(1) ==
          BigInt("123456789012345678901234567890"));
}

TEST_CASE("from_double is exact for representable values") {
    CHECK(Rational::from_double(0.5) == Rational(1, 2));
    CHECK(Rational::from_double(0.375) == Rational(3, 8));
    CHECK(Rational::from_double(-2.0) == Rational(-2L));
}

TEST_CASE("continued-fraction snapping") {
    // 0.0555555555... snaps to 1/18 under a modest denominator cap
    CHECK(snap_to_denominator(Rational::from_double(1.0 / 18.0), BigInt(10000)) ==
          Rational(1, 18));
    CHECK(snap_to_denominator(Rational::from_double(7.0 / 18.0), BigInt(10000)) ==
          Rational(7, 18));
    CHECK(snap_to_denominator(Rational::from_double(17.93), BigInt(10000)) ==
          Rational(1793, 100));
    // already-small fractions pass through untouched
    CHECK(snap_to_denominator(Rational(22, 7), BigInt(100)) == Rational(22, 7));
    // golden-ratio-like worst case stays within the cap
    Rational snapped = snap_to_denominator(Rational::from_double(1.6180339887498949), BigInt(1000));
    CHECK(snapped.den() <= BigInt(1000));
    CHECK((snapped - Rational::from_double(1.6180339887498949)).abs() < Rational(1, 100000));
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        Rational r(static_cast<long>(rng() % 20000) - 10000, static_cast<long>(rng() % 9999) + 1);
        Rational s = snap_to_denominator(r, BigInt(10000));
        CHECK(s == r);  // cap admits the exact value
    }
}
