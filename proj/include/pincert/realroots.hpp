/*
 * realroots.hpp
 *
 * Sturm-sequence real-root counting and certified positivity for univariate
 * rational polynomials on the whole line, rays, and segments. Everything is
 * decided in exact arithmetic: signs at +-infinity come from leading
 * coefficients and degree parity, and endpoint roots are handled by nudging
 * the endpoint with a rational clearance radius below the distance to the
 * nearest other root, so closed-domain counts stay exact.
 */
#ifndef PINCERT_REALROOTS_HH
#define PINCERT_REALROOTS_HH

#include <pincert/multipoly.hpp>
#include <pincert/poly_io.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pincert {

struct DomainSpec {
    enum class Kind { whole_line, ray_geq, ray_leq, segment };
    Kind kind = Kind::whole_line;
    Rational a, b;  // ray_geq uses a; ray_leq uses b; segment uses both

    static DomainSpec all() { return {}; }
    static DomainSpec geq(Rational lo) {
        DomainSpec d;
        d.kind = Kind::ray_geq;
        d.a = std::move(lo);
        return d;
    }
    static DomainSpec leq(Rational hi) {
        DomainSpec d;
        d.kind = Kind::ray_leq;
        d.b = std::move(hi);
        return d;
    }
    static DomainSpec between(Rational lo, Rational hi) {
        if (hi < lo) throw arithmetic_error("segment endpoints out of order");
        DomainSpec d;
        d.kind = Kind::segment;
        d.a = std::move(lo);
        d.b = std::move(hi);
        return d;
    }

    bool contains(const Rational& x) const {
        switch (kind) {
            case Kind::whole_line: return true;
            case Kind::ray_geq: return x >= a;
            case Kind::ray_leq: return x <= b;
            case Kind::segment: return a <= x && x <= b;
        }
        return false;
    }

    // A convenient interior-ish point for sampling.
    Rational sample_point() const {
        switch (kind) {
            case Kind::whole_line: return Rational(0L);
            case Kind::ray_geq: return a;
            case Kind::ray_leq: return b;
            case Kind::segment: return (a + b) / Rational(2L);
        }
        return Rational(0L);
    }

    // Same syntax the CLI accepts: "all" | "geq a" | "leq b" | "a,b".
    std::string str() const {
        switch (kind) {
            case Kind::whole_line: return "all";
            case Kind::ray_geq: return "geq " + a.str();
            case Kind::ray_leq: return "leq " + b.str();
            case Kind::segment: return a.str() + "," + b.str();
        }
        return "all";
    }

    static DomainSpec parse(std::string_view text) {
        auto trim = [](std::string_view s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
            return s;
        };
        std::string_view t = trim(text);
        if (t == "all") return all();
        if (t.substr(0, 4) == "geq ") return geq(Rational::parse(std::string(trim(t.substr(4)))));
        if (t.substr(0, 4) == "leq ") return leq(Rational::parse(std::string(trim(t.substr(4)))));
        auto comma = t.find(',');
        if (comma == std::string_view::npos)
            throw arithmetic_error("invalid domain: '" + std::string(text) + "'");
        return between(Rational::parse(std::string(trim(t.substr(0, comma)))),
                       Rational::parse(std::string(trim(t.substr(comma + 1)))));
    }
};

// Dense univariate coefficients, index = power, no trailing zeros.
using DenseUni = std::vector<Rational>;

namespace unipoly {

inline void normalize(DenseUni& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Requires that no variable other than v occurs in p.
inline DenseUni to_dense(const MultiPoly& p, std::string_view v) {
    std::size_t iv = p.table().require(v);
    DenseUni d;
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != iv && e[i] != 0)
                throw arithmetic_error("polynomial is not univariate in '" + std::string(v) + "'");
        if (d.size() <= static_cast<std::size_t>(e[iv])) d.resize(e[iv] + 1);
        d[e[iv]] = c;
    }
    return d;
}

inline MultiPoly from_dense(const DenseUni& d, const VarTable& table, std::string_view v) {
    std::size_t iv = table.require(v);
    MultiPoly p(Rational(0L), table);
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i].is_zero()) continue;
        Exponents e(table.arity(), 0);
        e[iv] = static_cast<int>(i);
        p += MultiPoly::monomial(table, e, d[i]);
    }
    return p;
}

inline Rational eval(const DenseUni& p, const Rational& x) {
    Rational r;
    for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

inline DenseUni derivative(const DenseUni& p) {
    DenseUni d;
    for (std::size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * Rational(static_cast<long>(i)));
    normalize(d);
    return d;
}

// Euclidean remainder of a by b over the rationals.
inline DenseUni remainder(DenseUni a, const DenseUni& b) {
    normalize(a);
    if (b.empty()) throw arithmetic_error("division by zero");
    while (a.size() >= b.size()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();  // leading term cancelled exactly
        normalize(a);
        if (a.empty()) break;
    }
    return a;
}

// Taylor shift: coefficients of p(c + t) in t, by iterated synthetic division.
inline DenseUni shift(DenseUni p, const Rational& c) {
    if (p.empty()) return p;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        for (std::size_t j = p.size() - 1; j > i; --j) p[j - 1] += c * p[j];
    return p;
}

// p(-t): negate odd coefficients.
inline DenseUni reflect(DenseUni p) {
    for (std::size_t i = 1; i < p.size(); i += 2) p[i] = -p[i];
    return p;
}

// Clearance radius around x0: a positive rational strictly below the
// distance from x0 to the nearest OTHER root of p. From the Taylor
// expansion sum d_i t^i at x0 with first nonzero d_m, every nonzero root
// of the stripped series satisfies |t| >= |d_m| / (|d_m| + max |d_i|).
inline Rational clearance_radius(const DenseUni& p, const Rational& x0) {
    DenseUni d = shift(p, x0);
    std::size_t m = 0;
    while (m < d.size() && d[m].is_zero()) ++m;
    if (m >= d.size()) throw arithmetic_error("clearance radius of zero polynomial");
    Rational dm = d[m].abs();
    Rational mx;
    for (std::size_t i = m + 1; i < d.size(); ++i)
        if (d[i].abs() > mx) mx = d[i].abs();
    if (mx.is_zero()) return Rational(1, 2);  // pure power around x0, no other roots
    return dm / ((dm + mx) * Rational(2L));
}

}  // namespace unipoly

/*
 * The signed Euclidean chain p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i),
 * stopping at the zero remainder. Sign-variation differences between two
 * non-root points count the distinct real roots between them, including
 * for non-squarefree p.
 */
struct SturmSeq {
    std::vector<MultiPoly> polys;
    std::string var;
    std::vector<DenseUni> dense;

    int variations_at(const Rational& x) const {
        int count = 0, prev = 0;
        for (const auto& d : dense) {
            int s = unipoly::eval(d, x).sign();
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    }

    // +1 for +infinity, -1 for -infinity.
    int variations_at_infinity(int side) const {
        int count = 0, prev = 0;
        for (const auto& d : dense) {
            if (d.empty()) continue;
            int s = d.back().sign();
            if (side < 0 && (d.size() - 1) % 2 != 0) s = -s;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    }
};

inline SturmSeq sturm_sequence(const MultiPoly& p, std::string_view v) {
    if (p.is_zero()) throw arithmetic_error("sturm sequence of zero polynomial");
    SturmSeq seq;
    seq.var = std::string(v);
    seq.dense.push_back(unipoly::to_dense(p, v));  // also validates univariateness
    DenseUni d1 = unipoly::derivative(seq.dense[0]);
    if (!d1.empty()) {
        seq.dense.push_back(std::move(d1));
        while (true) {
            DenseUni r = unipoly::remainder(seq.dense[seq.dense.size() - 2], seq.dense.back());
            if (r.empty()) break;
            for (auto& c : r) c = -c;
            seq.dense.push_back(std::move(r));
        }
    }
    for (const auto& d : seq.dense)
        seq.polys.push_back(unipoly::from_dense(d, p.table(), v));
    return seq;
}

namespace detail {

struct CountDetail {
    int count = 0;
    std::vector<std::string> notes;
};

// Distinct real roots in the CLOSED domain. Endpoints that are roots are
// nudged outward by a clearance radius so the variation counts still apply.
inline CountDetail count_roots_detailed(const SturmSeq& seq, const DomainSpec& dom) {
    const DenseUni& p = seq.dense[0];
    CountDetail out;
    auto lower = [&](const Rational& a) {
        Rational at = a;
        if (unipoly::eval(p, a).is_zero()) {
            Rational eps = unipoly::clearance_radius(p, a);
            at = a - eps;
            out.notes.push_back("endpoint " + a.str() + " is a root; counted from " + at.str());
        }
        return seq.variations_at(at);
    };
    auto upper = [&](const Rational& b) {
        Rational at = b;
        if (unipoly::eval(p, b).is_zero()) {
            Rational eps = unipoly::clearance_radius(p, b);
            at = b + eps;
            out.notes.push_back("endpoint " + b.str() + " is a root; counted to " + at.str());
        }
        return seq.variations_at(at);
    };
    switch (dom.kind) {
        case DomainSpec::Kind::whole_line:
            out.count = seq.variations_at_infinity(-1) - seq.variations_at_infinity(+1);
            break;
        case DomainSpec::Kind::ray_geq:
            out.count = lower(dom.a) - seq.variations_at_infinity(+1);
            break;
        case DomainSpec::Kind::ray_leq:
            out.count = seq.variations_at_infinity(-1) - upper(dom.b);
            break;
        case DomainSpec::Kind::segment:
            out.count = lower(dom.a) - upper(dom.b);
            break;
    }
    return out;
}

}  // namespace detail

inline int count_real_roots(const MultiPoly& p, std::string_view v, const DomainSpec& dom) {
    return detail::count_roots_detailed(sturm_sequence(p, v), dom).count;
}

struct PositivityCert {
    MultiPoly subject;
    DomainSpec domain;
    std::string method;
    std::vector<std::pair<std::string, std::string>> witnesses;
    bool pass = false;
};

namespace detail {

// Narrow an interval known (by Sturm count) to contain a root.
inline std::pair<Rational, Rational> isolate_root(const SturmSeq& seq, Rational lo, Rational hi) {
    auto count_in = [&](const Rational& x, const Rational& y) {
        return count_roots_detailed(seq, DomainSpec::between(x, y)).count;
    };
    for (int iter = 0; iter < 60 && !(hi - lo).is_zero(); ++iter) {
        Rational mid = (lo + hi) / Rational(2L);
        if (unipoly::eval(seq.dense[0], mid).is_zero()) return {mid, mid};
        if (count_in(lo, mid) > 0)
            hi = mid;
        else
            lo = mid;
    }
    return {lo, hi};
}

// Cauchy bound: all real roots lie in [-M, M].
inline Rational cauchy_bound(const DenseUni& p) {
    Rational mx;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i].abs() > mx) mx = p[i].abs();
    return Rational(1L) + mx / p.back().abs();
}

inline void clip_to_domain(const DomainSpec& dom, Rational& lo, Rational& hi) {
    switch (dom.kind) {
        case DomainSpec::Kind::whole_line: break;
        case DomainSpec::Kind::ray_geq:
            if (lo < dom.a) lo = dom.a;
            if (hi < dom.a) hi = dom.a;
            break;
        case DomainSpec::Kind::ray_leq:
            if (hi > dom.b) hi = dom.b;
            if (lo > dom.b) lo = dom.b;
            break;
        case DomainSpec::Kind::segment:
            lo = dom.a;
            hi = dom.b;
            break;
    }
}

}  // namespace detail

/*
 * Strict positivity of p on the closed domain. Tries, in order:
 *   nonneg-coeffs-ray   on rays, after the exact shift v -> v + a (or the
 *                       reflection v -> -v for descending rays): every
 *                       coefficient >= 0 and constant term > 0
 *   sturm-no-roots+sample   zero roots on the domain plus one positive sample
 * Failure carries a witness: either a sample point with value <= 0 or an
 * isolated root interval inside the domain.
 */
inline PositivityCert certify_positive(const MultiPoly& p, std::string_view v,
                                       const DomainSpec& dom) {
    PositivityCert cert{p, dom, "", {}, false};
    if (p.is_zero()) {
        cert.method = "sturm-no-roots+sample";
        cert.witnesses.emplace_back("failure", "zero polynomial");
        return cert;
    }
    DenseUni d = unipoly::to_dense(p, v);

    if (dom.kind == DomainSpec::Kind::ray_geq || dom.kind == DomainSpec::Kind::ray_leq) {
        DenseUni s = dom.kind == DomainSpec::Kind::ray_geq
                         ? unipoly::shift(d, dom.a)
                         : unipoly::shift(unipoly::reflect(d), -dom.b);
        bool ok = !s.empty() && s[0].sign() > 0;
        for (const auto& c : s) ok = ok && c.sign() >= 0;
        if (ok) {
            cert.method = "nonneg-coeffs-ray";
            cert.witnesses.emplace_back("shifted_constant_term", s[0].str());
            std::string vn(v);
            cert.witnesses.emplace_back(
                "shift", dom.kind == DomainSpec::Kind::ray_geq
                             ? vn + " -> " + vn + " + (" + dom.a.str() + ")"
                             : vn + " -> -" + vn + " + (" + dom.b.str() + ")");
            cert.pass = true;
            return cert;
        }
    }

    cert.method = "sturm-no-roots+sample";
    SturmSeq seq = sturm_sequence(p, v);
    detail::CountDetail roots = detail::count_roots_detailed(seq, dom);
    for (const auto& n : roots.notes) cert.witnesses.emplace_back("note", n);
    cert.witnesses.emplace_back("root_count", std::to_string(roots.count));
    Rational sample = dom.sample_point();
    Rational value = unipoly::eval(d, sample);
    cert.witnesses.emplace_back("sample_point", sample.str());
    cert.witnesses.emplace_back("sample_value", value.str());
    if (roots.count == 0 && value.sign() > 0) {
        cert.pass = true;
        return cert;
    }
    if (roots.count > 0) {
        Rational m = detail::cauchy_bound(d);
        Rational lo = -m, hi = m;
        detail::clip_to_domain(dom, lo, hi);
        auto iv = detail::isolate_root(seq, lo, hi);
        cert.witnesses.emplace_back("root_interval", "[" + iv.first.str() + ", " + iv.second.str() + "]");
    }
    return cert;
}

/*
 * Factor-product positivity: target == scale * prod factors[i]^mult[i] as an
 * exact identity, scale > 0, and every base factor certified positive on the
 * domain. The expansion check means the claimed factorization is verified,
 * never trusted.
 */
inline PositivityCert certify_positive_factors(
    const MultiPoly& target, const Rational& scale,
    const std::vector<std::pair<MultiPoly, unsigned>>& factors, std::string_view v,
    const DomainSpec& dom) {
    PositivityCert cert{target, dom, "factor-product", {}, false};
    MultiPoly prod(scale, target.table());
    for (const auto& [f, mult] : factors) prod *= f.retable(target.table()).pow(mult);
    bool identity = prod == target;
    cert.witnesses.emplace_back("expansion_matches", identity ? "yes" : "no");
    cert.witnesses.emplace_back("scale", scale.str());
    bool all = identity && scale.sign() > 0;
    for (const auto& [f, mult] : factors) {
        PositivityCert sub = certify_positive(f, v, dom);
        cert.witnesses.emplace_back(
            "factor(" + to_string(f) + ")^" + std::to_string(mult),
            sub.pass ? "positive via " + sub.method : "NOT certified positive");
        all = all && sub.pass;
    }
    cert.pass = all;
    return cert;
}

}  // namespace pincert

#endif
