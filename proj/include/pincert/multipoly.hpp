/*
 * multipoly.hpp
 *
 * Sparse multivariate polynomials over Rational with a fixed, ordered
 * variable table. Terms are kept in descending graded lexicographic order,
 * which doubles as the canonical printing order, so two equal polynomials
 * over compatible tables always render to the same text.
 *
 * Mixed-table arithmetic is allowed exactly when one table is a prefix of
 * the other (the shorter operand is lifted by zero-padding its exponent
 * vectors). Anything else is a caller bug and throws; retable() converts
 * explicitly by variable name when an operand has to move between tables.
 */
#ifndef PINCERT_MULTIPOLY_HH
#define PINCERT_MULTIPOLY_HH

#include <pincert/rational.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pincert {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
}

// Map comparator: true when a precedes b, i.e. a is graded-lex greater.
struct GradedLexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        std::size_t n = std::max(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            int ai = i < a.size() ? a[i] : 0;
            int bi = i < b.size() ? b[i] : 0;
            if (ai != bi) return ai > bi;
        }
        return false;
    }
};

// Legal variable names: [A-Za-z][A-Za-z0-9_]*
inline bool is_identifier(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

class VarTable {
public:
    VarTable() = default;
    explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (!is_identifier(names_[i]))
                throw arithmetic_error("invalid variable name: '" + names_[i] + "'");
            for (std::size_t j = 0; j < i; ++j)
                if (names_[j] == names_[i])
                    throw arithmetic_error("duplicate variable name: '" + names_[i] + "'");
        }
    }

    std::size_t arity() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    std::size_t require(std::string_view name) const {
        auto i = index_of(name);
        if (!i) throw arithmetic_error("unknown variable: '" + std::string(name) + "'");
        return *i;
    }

    std::size_t add(std::string_view name) {
        if (!is_identifier(name))
            throw arithmetic_error("invalid variable name: '" + std::string(name) + "'");
        if (index_of(name))
            throw arithmetic_error("duplicate variable name: '" + std::string(name) + "'");
        names_.emplace_back(name);
        return names_.size() - 1;
    }

    bool is_prefix_of(const VarTable& o) const {
        if (names_.size() > o.names_.size()) return false;
        return std::equal(names_.begin(), names_.end(), o.names_.begin());
    }

    // Left operand's order, then the right operand's unseen names appended.
    static VarTable unite(const VarTable& a, const VarTable& b) {
        VarTable u = a;
        for (const auto& n : b.names_)
            if (!u.index_of(n)) u.names_.push_back(n);
        return u;
    }

    friend bool operator==(const VarTable& a, const VarTable& b) {
        return a.names_ == b.names_;
    }
    friend bool operator!=(const VarTable& a, const VarTable& b) { return !(a == b); }

private:
    std::vector<std::string> names_;
};

class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexDesc>;

    MultiPoly() = default;  // zero over the empty table

    explicit MultiPoly(const Rational& c, VarTable table = {}) : table_(std::move(table)) {
        if (!c.is_zero()) terms_.emplace(Exponents(table_.arity(), 0), c);
    }
    explicit MultiPoly(long c, VarTable table = {}) : MultiPoly(Rational(c), std::move(table)) {}

    static MultiPoly variable(const VarTable& table, std::string_view name) {
        Exponents e(table.arity(), 0);
        e[table.require(name)] = 1;
        return monomial(table, std::move(e), Rational(1L));
    }

    static MultiPoly monomial(const VarTable& table, Exponents e, const Rational& c) {
        if (e.size() != table.arity())
            throw arithmetic_error("exponent vector arity mismatch");
        for (int x : e)
            if (x < 0) throw arithmetic_error("negative exponent");
        MultiPoly p;
        p.table_ = table;
        if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
        return p;
    }

    const VarTable& table() const { return table_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }

    // Total degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }

    int degree_in(std::string_view var) const {
        std::size_t i = table_.require(var);
        if (terms_.empty()) return -1;
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
        return d;
    }

    bool occurs(std::string_view var) const {
        auto i = table_.index_of(var);
        if (!i) return false;
        for (const auto& [e, c] : terms_)
            if (e[*i] > 0) return true;
        return false;
    }

    const Rational& leading_coeff() const {
        if (terms_.empty()) throw arithmetic_error("leading coefficient of zero polynomial");
        return terms_.begin()->second;
    }
    const Exponents& leading_exponents() const {
        if (terms_.empty()) throw arithmetic_error("leading term of zero polynomial");
        return terms_.begin()->first;
    }

    Rational coeff(const Exponents& e) const {
        Exponents key = e;
        key.resize(table_.arity(), 0);
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational() : it->second;
    }
    Rational constant_term() const { return coeff(Exponents(table_.arity(), 0)); }

    // As a Rational; throws when the polynomial is not constant.
    Rational to_rational() const {
        if (!is_constant()) throw arithmetic_error("polynomial is not constant");
        return constant_term();
    }

    // Zero-pad into a table this one is a prefix of.
    MultiPoly lift_to(const VarTable& target) const {
        if (table_ == target) return *this;
        if (!table_.is_prefix_of(target))
            throw arithmetic_error("variable table is not a prefix of the target table");
        MultiPoly r;
        r.table_ = target;
        for (const auto& [e, c] : terms_) {
            Exponents ne = e;
            ne.resize(target.arity(), 0);
            r.terms_.emplace(std::move(ne), c);
        }
        return r;
    }

    // Move to an arbitrary table by variable name. Every variable that
    // actually occurs must exist in the target.
    MultiPoly retable(const VarTable& target) const {
        std::vector<std::optional<std::size_t>> pos(table_.arity());
        for (std::size_t i = 0; i < table_.arity(); ++i)
            pos[i] = target.index_of(table_.name(i));
        MultiPoly r;
        r.table_ = target;
        for (const auto& [e, c] : terms_) {
            Exponents ne(target.arity(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!pos[i])
                    throw arithmetic_error("variable '" + table_.name(i) +
                                           "' does not exist in the target table");
                ne[*pos[i]] = e[i];
            }
            r.add_term(std::move(ne), c);
        }
        return r;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        auto [x, y] = align(a, b);
        for (const auto& [e, c] : y.terms_) x.add_term(e, c);
        return x;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        auto [x, y] = align(a, b);
        for (const auto& [e, c] : y.terms_) x.add_term(e, -c);
        return x;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        auto [x, y] = align(a, b);
        MultiPoly r;
        r.table_ = x.table_;
        for (const auto& [ea, ca] : x.terms_) {
            for (const auto& [eb, cb] : y.terms_) {
                Exponents e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        }
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const Rational& c) {
        MultiPoly r;
        r.table_ = a.table_;
        if (c.is_zero()) return r;
        r.terms_ = a.terms_;
        for (auto& [e, v] : r.terms_) v *= c;
        return r;
    }
    friend MultiPoly operator*(const Rational& c, const MultiPoly& a) { return a * c; }
    friend MultiPoly operator/(const MultiPoly& a, const Rational& c) {
        return a * c.inverse();
    }

    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly& operator*=(const Rational& c) { return *this = *this * c; }

    MultiPoly pow(unsigned long e) const {
        MultiPoly base = *this;
        MultiPoly r(Rational(1L), table_);  // x^0 = 1, including 0^0
        while (e > 0) {
            if (e & 1) r *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return r;
    }

    MultiPoly derivative(std::string_view var) const {
        std::size_t i = table_.require(var);
        MultiPoly r;
        r.table_ = table_;
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exponents ne = e;
            ne[i] -= 1;
            r.add_term(std::move(ne), c * Rational(static_cast<long>(e[i])));
        }
        return r;
    }

    // Replace var by s. The result lives in unite(this->table, s.table).
    MultiPoly substitute(std::string_view var, const MultiPoly& s) const {
        std::size_t iv = table_.require(var);
        VarTable ut = VarTable::unite(table_, s.table());
        MultiPoly sl = s.retable(ut);
        std::vector<MultiPoly> powers;  // powers[k] = sl^k, filled on demand
        powers.push_back(MultiPoly(Rational(1L), ut));
        MultiPoly r;
        r.table_ = ut;
        for (const auto& [e, c] : terms_) {
            Exponents base(ut.arity(), 0);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (i != iv) base[i] = e[i];
            while (powers.size() <= static_cast<std::size_t>(e[iv]))
                powers.push_back(powers.back() * sl);
            r += monomial(ut, std::move(base), c) * powers[e[iv]];
        }
        return r;
    }

    // Assignments must cover every variable that occurs; extras are ignored.
    Rational evaluate(const std::map<std::string, Rational>& assign) const {
        std::vector<std::optional<Rational>> vals(table_.arity());
        for (std::size_t i = 0; i < table_.arity(); ++i) {
            auto it = assign.find(table_.name(i));
            if (it != assign.end()) vals[i] = it->second;
        }
        Rational total;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!vals[i])
                    throw arithmetic_error("missing assignment for variable '" +
                                           table_.name(i) + "'");
                t *= vals[i]->pow(e[i]);
            }
            total += t;
        }
        return total;
    }

    // Exact quotient in the polynomial ring; throws when q does not divide p.
    static MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& q) {
        if (q.is_zero()) throw arithmetic_error("division by zero");
        auto [r, d] = align(p, q);
        MultiPoly quot;
        quot.table_ = r.table_;
        const Exponents& lq = d.leading_exponents();
        const Rational& cq = d.leading_coeff();
        while (!r.is_zero()) {
            const Exponents& lr = r.leading_exponents();
            Exponents e(lr.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = lr[i] - lq[i];
                if (e[i] < 0) throw arithmetic_error("inexact polynomial division");
            }
            MultiPoly t = monomial(r.table_, std::move(e), r.leading_coeff() / cq);
            quot += t;
            r -= t * d;
        }
        return quot;
    }

    // Name-based equality: operands are moved onto the union table first,
    // so polynomials from different tables compare by mathematical value.
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (a.table_ == b.table_) return a.terms_ == b.terms_;
        VarTable ut = VarTable::unite(a.table_, b.table_);
        return a.retable(ut).terms_ == b.retable(ut).terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

private:
    void add_term(Exponents e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(std::move(e), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // Lift the prefix-side operand so both live in the same table.
    static std::pair<MultiPoly, MultiPoly> align(const MultiPoly& a, const MultiPoly& b) {
        if (a.table_ == b.table_) return {a, b};
        if (a.table_.is_prefix_of(b.table_)) return {a.lift_to(b.table_), b};
        if (b.table_.is_prefix_of(a.table_)) return {a, b.lift_to(a.table_)};
        throw arithmetic_error("incompatible variable tables (use retable)");
    }

    VarTable table_;
    TermMap terms_;
};

/*
 * A multivariate polynomial read as univariate in one designated variable.
 * coeff(k) is the coefficient of var^k, a polynomial over the same table
 * in which the designated variable no longer occurs. Construction verifies
 * the decomposition reassembles to the original polynomial.
 */
class UniView {
public:
    UniView(const MultiPoly& p, std::string_view var)
        : table_(p.table()), var_(var), zero_(Rational(0L), p.table()) {
        std::size_t iv = table_.require(var);
        for (const auto& [e, c] : p.terms()) {
            Exponents stripped = e;
            int k = stripped[iv];
            stripped[iv] = 0;
            auto [it, fresh] = coeffs_.try_emplace(k, zero_);
            it->second += MultiPoly::monomial(table_, std::move(stripped), c);
        }
        MultiPoly check = zero_;
        MultiPoly v = MultiPoly::variable(table_, var_);
        for (const auto& [k, q] : coeffs_)
            check += q * v.pow(static_cast<unsigned long>(k));
        if (check != p) throw arithmetic_error("univariate view failed to reassemble");
    }

    const VarTable& table() const { return table_; }
    const std::string& var() const { return var_; }

    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

    const MultiPoly& coeff(int k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? zero_ : it->second;
    }

    const MultiPoly& lc() const {
        if (coeffs_.empty()) throw arithmetic_error("leading coefficient of zero polynomial");
        return coeffs_.rbegin()->second;
    }

    // Dense coefficient list, index = power, size = degree + 1.
    std::vector<MultiPoly> coeff_vector() const {
        std::vector<MultiPoly> v(static_cast<std::size_t>(degree() + 1), zero_);
        for (const auto& [k, q] : coeffs_) v[static_cast<std::size_t>(k)] = q;
        return v;
    }

private:
    VarTable table_;
    std::string var_;
    std::map<int, MultiPoly> coeffs_;
    MultiPoly zero_;
};

}  // namespace pincert

#endif
