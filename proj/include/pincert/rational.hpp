/*
 * rational.hpp
 *
 * Arbitrary-precision integers and canonical rationals, the coefficient
 * domain for every other module. Backed by GMP's mpz/mpq kernels behind
 * value-semantic wrappers: canonical form (positive denominator, reduced,
 * unique zero) is re-established after every operation.
 */
#ifndef PINCERT_RATIONAL_HH
#define PINCERT_RATIONAL_HH

#include <gmp.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace pincert {

class arithmetic_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

// Integer text is an optional leading '-' followed by decimal digits.
inline bool is_integer_text(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

class BigInt {
public:
    BigInt() { mpz_init(z_); }
    BigInt(long v) { mpz_init_set_si(z_, v); }

    explicit BigInt(std::string_view text) {
        if (!is_integer_text(text))
            throw arithmetic_error("invalid integer text: '" + std::string(text) + "'");
        mpz_init_set_str(z_, std::string(text).c_str(), 10);
    }

    BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~BigInt() { mpz_clear(z_); }

    int sign() const { return mpz_sgn(z_); }
    bool is_zero() const { return mpz_sgn(z_) == 0; }

    BigInt operator-() const {
        BigInt r;
        mpz_neg(r.z_, z_);
        return r;
    }
    BigInt abs() const {
        BigInt r;
        mpz_abs(r.z_, z_);
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }

    // Exact quotient; the caller guarantees divisibility.
    static BigInt div_exact(const BigInt& a, const BigInt& b) {
        if (b.is_zero()) throw arithmetic_error("division by zero");
        if (!mpz_divisible_p(a.z_, b.z_))
            throw arithmetic_error("inexact integer division");
        BigInt r;
        mpz_divexact(r.z_, a.z_, b.z_);
        return r;
    }

    static BigInt gcd(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_gcd(r.z_, a.z_, b.z_);
        return r;
    }

    BigInt pow(unsigned long e) const {
        BigInt r;
        mpz_pow_ui(r.z_, z_, e);
        return r;
    }

    int cmp(const BigInt& o) const { return mpz_cmp(z_, o.z_); }
    friend bool operator==(const BigInt& a, const BigInt& b) { return a.cmp(b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return a.cmp(b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return a.cmp(b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return a.cmp(b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return a.cmp(b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return a.cmp(b) >= 0; }

    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const {
        if (!fits_long()) throw arithmetic_error("integer too large for long");
        return mpz_get_si(z_);
    }

    std::string str() const {
        char* s = mpz_get_str(nullptr, 10, z_);
        std::string out(s);
        void (*freefn)(void*, std::size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    const mpz_t& raw() const { return z_; }
    mpz_t& raw() { return z_; }

private:
    mpz_t z_;
};

/*
 * Canonical rational: reduced, positive denominator, zero stored as 0/1.
 * Every constructor and operator leaves the value canonical.
 */
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(long v) {
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    Rational(long num, long den) {
        if (den == 0) throw arithmetic_error("division by zero");
        mpq_init(q_);
        mpq_set_si(q_, num, den);
        mpq_canonicalize(q_);
    }
    Rational(const BigInt& num, const BigInt& den) {
        if (den.is_zero()) throw arithmetic_error("division by zero");
        mpq_init(q_);
        mpz_set(mpq_numref(q_), num.raw());
        mpz_set(mpq_denref(q_), den.raw());
        mpq_canonicalize(q_);
    }
    explicit Rational(const BigInt& num) {
        mpq_init(q_);
        mpz_set(mpq_numref(q_), num.raw());
    }

    // From decimal integer texts, e.g. ("-13", "-2430") -> 13/2430.
    static Rational make(std::string_view num_text, std::string_view den_text) {
        return Rational(BigInt(num_text), BigInt(den_text));
    }

    // Accepts "a", "a/b", and decimal literals like "17.93" (exactly 1793/100).
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        if (slash != std::string_view::npos)
            return make(text.substr(0, slash), text.substr(slash + 1));
        auto dot = text.find('.');
        if (dot != std::string_view::npos) {
            std::string digits(text.substr(0, dot));
            std::string frac(text.substr(dot + 1));
            if (frac.empty() || !is_integer_text(digits + frac))
                throw arithmetic_error("invalid rational text: '" + std::string(text) + "'");
            BigInt num(digits + frac);
            return Rational(num, BigInt(10).pow(frac.size()));
        }
        return Rational(BigInt(text));
    }

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_si(mpq_denref(q_), 1) == 0; }

    BigInt num() const {
        BigInt r;
        mpz_set(r.raw(), mpq_numref(q_));
        return r;
    }
    BigInt den() const {
        BigInt r;
        mpz_set(r.raw(), mpq_denref(q_));
        return r;
    }

    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }
    Rational abs() const {
        Rational r;
        mpq_abs(r.q_, q_);
        return r;
    }
    Rational inverse() const {
        if (is_zero()) throw arithmetic_error("division by zero");
        Rational r;
        mpq_inv(r.q_, q_);
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw arithmetic_error("division by zero");
        Rational r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Rational r;
        mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), static_cast<unsigned long>(e));
        mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), static_cast<unsigned long>(e));
        return r;  // powers of a canonical fraction stay canonical
    }

    int cmp(const Rational& o) const { return mpq_cmp(q_, o.q_); }
    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return a.cmp(b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.cmp(b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.cmp(b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.cmp(b) >= 0; }

    // "a" when integral, "a/b" otherwise.
    std::string str() const {
        std::string out = num().str();
        if (!is_integer()) out += "/" + den().str();
        return out;
    }

    double to_double() const { return mpq_get_d(q_); }

    // Exact binary expansion of the double (no rounding).
    static Rational from_double(double d) {
        Rational r;
        mpq_set_d(r.q_, d);
        return r;
    }

private:
    mpq_t q_;
};

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw arithmetic_error("division by zero");
    BigInt q;
    mpz_fdiv_q(q.raw(), a.raw(), b.raw());
    return q;
}

inline BigInt isqrt(const BigInt& a) {
    if (a.sign() < 0) throw arithmetic_error("square root of a negative integer");
    BigInt r;
    mpz_sqrt(r.raw(), a.raw());
    return r;
}

/*
 * Best rational approximation to x with denominator <= den_limit, via the
 * continued-fraction convergents of x. Used to snap float-guided search
 * candidates onto small exact rationals.
 */
inline Rational snap_to_denominator(const Rational& x, const BigInt& den_limit) {
    if (den_limit < BigInt(1))
        throw arithmetic_error("denominator limit must be positive");
    if (x.den() <= den_limit) return x;
    BigInt p_prev(0), q_prev(1);  // h_{-2}/k_{-2}
    BigInt p_cur(1), q_cur(0);    // h_{-1}/k_{-1}; first step yields a0/1
    Rational rest = x;
    while (true) {
        BigInt a;
        mpz_fdiv_q(a.raw(), rest.num().raw(), rest.den().raw());
        BigInt p_next = a * p_cur + p_prev;
        BigInt q_next = a * q_cur + q_prev;
        if (q_next > den_limit) {
            // Semiconvergent with the largest admissible partial quotient,
            // steps = floor((den_limit - q_prev) / q_cur).
            BigInt steps;
            mpz_fdiv_q(steps.raw(), (den_limit - q_prev).raw(), q_cur.raw());
            if (steps.sign() > 0) {
                BigInt ps = steps * p_cur + p_prev;
                BigInt qs = steps * q_cur + q_prev;
                Rational cand_semi(ps, qs), cand_conv(p_cur, q_cur);
                return ((x - cand_semi).abs() < (x - cand_conv).abs()) ? cand_semi : cand_conv;
            }
            return Rational(p_cur, q_cur);
        }
        p_prev = std::move(p_cur);
        q_prev = std::move(q_cur);
        p_cur = std::move(p_next);
        q_cur = std::move(q_next);
        Rational frac = rest - Rational(a);
        if (frac.is_zero()) return Rational(p_cur, q_cur);
        rest = frac.inverse();
    }
}

inline Rational snap_to_denominator(double x, long den_limit) {
    return snap_to_denominator(Rational::from_double(x), BigInt(den_limit));
}

}  // namespace pincert

#endif
