/*
 * symmetric.hpp
 *
 * Symmetric-polynomial machinery for triples of eigenvalues: symmetry
 * detection, reduction to elementary symmetric polynomials by Gauss's
 * leading-term subtraction, Newton power-sum identities, and the
 * substitution sigma2 = (sigma1^2 - tau^2)/3.
 *
 * Every reduction is verified by back-substitution before it is returned;
 * a wrong answer here would silently poison the lemma certificates, so the
 * round-trip law is an assertion, not just a test.
 */
#ifndef PINCERT_SYMMETRIC_HH
#define PINCERT_SYMMETRIC_HH

#include <pincert/multipoly.hpp>

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pincert {

struct ElemSymExpr {
    MultiPoly poly;  // over sigma1..sigma_arity
    int arity = 3;
};

struct TauForm {
    MultiPoly poly;  // over sigma1, tau, sigma3; tau occurs only in even powers
};

inline VarTable sigma_table(int arity = 3) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(arity));
    for (int i = 1; i <= arity; ++i) names.push_back("sigma" + std::to_string(i));
    return VarTable(std::move(names));
}

inline VarTable tau_table() { return VarTable({"sigma1", "tau", "sigma3"}); }

// p with the two named variables exchanged (same table).
inline MultiPoly transpose_vars(const MultiPoly& p, std::string_view u, std::string_view w) {
    std::size_t iu = p.table().require(u), iw = p.table().require(w);
    MultiPoly r(Rational(0L), p.table());
    for (const auto& [e, c] : p.terms()) {
        Exponents ne = e;
        std::swap(ne[iu], ne[iw]);
        r += MultiPoly::monomial(p.table(), std::move(ne), c);
    }
    return r;
}

// Invariance under all transpositions of vars, checked through the
// adjacent transpositions that generate the symmetric group.
inline bool is_symmetric(const MultiPoly& p, const std::vector<std::string>& vars) {
    for (std::size_t i = 0; i + 1 < vars.size(); ++i)
        if (transpose_vars(p, vars[i], vars[i + 1]) != p) return false;
    return true;
}

// e1, e2, e3 of the three variables of t, expanded.
inline std::vector<MultiPoly> elementary_basis(const VarTable& t) {
    MultiPoly x = MultiPoly::variable(t, t.name(0));
    MultiPoly y = MultiPoly::variable(t, t.name(1));
    MultiPoly z = MultiPoly::variable(t, t.name(2));
    return {x + y + z, x * y + y * z + z * x, x * y * z};
}

// sigma_i -> e_i(vars of xyz); inverse of to_elementary.
inline MultiPoly elementary_backsubstitute(const ElemSymExpr& e, const VarTable& xyz) {
    if (e.arity != 3 || xyz.arity() != 3)
        throw arithmetic_error("back-substitution supports exactly three variables");
    std::vector<MultiPoly> basis = elementary_basis(xyz);
    MultiPoly r(Rational(0L), xyz);
    for (const auto& [exp, c] : e.poly.terms())
        r += MultiPoly(c, xyz) * basis[0].pow(exp[0]) * basis[1].pow(exp[1]) * basis[2].pow(exp[2]);
    return r;
}

/*
 * Gauss's reduction: the leading monomial x^a y^b z^c of a symmetric
 * polynomial in graded-lex order has a >= b >= c, and
 * sigma1^(a-b) sigma2^(b-c) sigma3^c has exactly that leading monomial, so
 * subtracting it strictly lowers the lead. The result is verified by
 * back-substitution before returning.
 */
inline ElemSymExpr to_elementary(const MultiPoly& p) {
    const VarTable& t = p.table();
    if (t.arity() != 3) throw arithmetic_error("reduction requires exactly three variables");
    if (!is_symmetric(p, t.names())) throw arithmetic_error("non-symmetric input");
    VarTable st = sigma_table();
    std::vector<MultiPoly> basis = elementary_basis(t);
    MultiPoly rem = p;
    MultiPoly acc(Rational(0L), st);
    while (!rem.is_zero()) {
        const Exponents& e = rem.leading_exponents();
        if (!(e[0] >= e[1] && e[1] >= e[2]))
            throw arithmetic_error("non-symmetric input");
        Rational c = rem.leading_coeff();
        Exponents se{e[0] - e[1], e[1] - e[2], e[2]};
        rem -= MultiPoly(c, t) * basis[0].pow(se[0]) * basis[1].pow(se[1]) * basis[2].pow(se[2]);
        acc += MultiPoly::monomial(st, std::move(se), c);
    }
    ElemSymExpr result{std::move(acc), 3};
    if (elementary_backsubstitute(result, t) != p)
        throw arithmetic_error("internal: elementary reduction failed round-trip");
    return result;
}

// f_m = sum of m-th powers, via Newton's recurrence over sigma1..sigma_arity.
inline ElemSymExpr power_sum_in_elementary(int m, int arity) {
    if (m < 1 || arity < 1) throw arithmetic_error("power sum requires m >= 1, arity >= 1");
    VarTable st = sigma_table(arity);
    auto sigma = [&](int i) { return MultiPoly::variable(st, "sigma" + std::to_string(i)); };
    std::vector<MultiPoly> f;
    f.emplace_back(Rational(static_cast<long>(arity)), st);  // f0 = arity
    for (int k = 1; k <= m; ++k) {
        MultiPoly fk(Rational(0L), st);
        int top = std::min(k, arity);
        for (int i = 1; i <= top; ++i) {
            MultiPoly term = (k <= arity && i == k)
                                 ? MultiPoly(Rational(static_cast<long>(k)), st) * sigma(i)
                                 : sigma(i) * f[static_cast<std::size_t>(k - i)];
            fk += (i % 2 != 0) ? term : -term;
        }
        f.push_back(std::move(fk));
    }
    return {f.back(), arity};
}

// Substitute tau^2 -> sigma1^2 - 3*sigma2 (each tau^{2k} expands exactly).
inline ElemSymExpr tau_back(const TauForm& form) {
    VarTable st = sigma_table();
    MultiPoly s1 = MultiPoly::variable(st, "sigma1");
    MultiPoly s2 = MultiPoly::variable(st, "sigma2");
    MultiPoly tausq = s1 * s1 - MultiPoly(Rational(3L), st) * s2;
    const VarTable& tt = form.poly.table();
    std::size_t it = tt.require("tau");
    MultiPoly r(Rational(0L), st);
    for (const auto& [e, c] : form.poly.terms()) {
        if (e[it] % 2 != 0) throw arithmetic_error("tau parity violated");
        Exponents se{e[tt.require("sigma1")], 0, e[tt.require("sigma3")]};
        r += MultiPoly::monomial(st, std::move(se), c) *
             tausq.pow(static_cast<unsigned long>(e[it] / 2));
    }
    return {r, 3};
}

/*
 * Substitute sigma2 = (sigma1^2 - tau^2)/3. The result lives over
 * (sigma1, tau, sigma3) with tau only in even powers; the inverse
 * substitution is applied and compared before returning.
 */
inline TauForm tau_substitute(const ElemSymExpr& e) {
    if (e.arity != 3) throw arithmetic_error("tau substitution requires arity 3");
    VarTable tt = tau_table();
    MultiPoly s1 = MultiPoly::variable(tt, "sigma1");
    MultiPoly tau = MultiPoly::variable(tt, "tau");
    MultiPoly repl = (s1 * s1 - tau * tau) / Rational(3L);
    TauForm form{e.poly.substitute("sigma2", repl).retable(tt)};
    std::size_t it = tt.require("tau");
    for (const auto& [exp, c] : form.poly.terms())
        if (exp[it] % 2 != 0) throw arithmetic_error("internal: tau parity violated");
    if (tau_back(form).poly != e.poly)
        throw arithmetic_error("internal: tau substitution failed round-trip");
    return form;
}

}  // namespace pincert

#endif
