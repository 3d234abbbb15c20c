#pragma once

#include <pincert/multipoly.hpp>
#include <pincert/rational.hpp>

#include <string_view>
#include <utility>

namespace pincert {

// Formal quotient of polynomials. No reduction is attempted; equality is by
// cross-multiplication, derivatives by the quotient rule, so every identity
// checked through this type is an identity of the cleared numerators.
struct RatFunc {
    MultiPoly num, den;

    RatFunc(MultiPoly n, MultiPoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw arithmetic_error("division by zero");
    }

    explicit RatFunc(MultiPoly n)
        : num(std::move(n)), den(MultiPoly(Rational(1L), num.table())) {}

    RatFunc derivative(std::string_view v) const {
        return {num.derivative(v) * den - num * den.derivative(v), den * den};
    }

    RatFunc operator+(const RatFunc& o) const {
        return {num * o.den + o.num * den, den * o.den};
    }
    RatFunc operator-(const RatFunc& o) const {
        return {num * o.den - o.num * den, den * o.den};
    }
    RatFunc operator*(const RatFunc& o) const { return {num * o.num, den * o.den}; }
    RatFunc operator/(const RatFunc& o) const {
        if (o.num.is_zero()) throw arithmetic_error("division by zero");
        return {num * o.den, den * o.num};
    }
    RatFunc operator-() const { return {-num, den}; }

    bool is_zero() const { return num.is_zero(); }
    bool equals(const RatFunc& o) const { return num * o.den == o.num * den; }
};

}  // namespace pincert
