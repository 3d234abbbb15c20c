/*
 * elimination.hpp
 *
 * Sylvester matrices, resultants, and discriminants over MultiPoly entries.
 * Determinants use Bareiss fraction-free elimination: every division along
 * the way is an exact polynomial division by the previous pivot, so entries
 * stay in the ring and never grow spurious denominators. Row swaps are
 * tracked for sign. Cofactor expansion would be factorial; the degree-6
 * discriminants here need 11x11 determinants, which Bareiss handles in
 * polynomial time while staying exact.
 */
#ifndef PINCERT_ELIMINATION_HH
#define PINCERT_ELIMINATION_HH

#include <pincert/multipoly.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pincert {

struct SylMatrix {
    std::size_t dim = 0;
    std::vector<std::vector<MultiPoly>> entries;
    std::string var;
    std::pair<int, int> degrees;  // (deg_v p, deg_v q)
};

struct ElimResult {
    MultiPoly value;
    std::string eliminated_var;
    std::pair<int, int> degrees;
};

/*
 * The (m+k) x (m+k) matrix of p (degree m) and q (degree k) in v: the first
 * k rows carry p's coefficients from the leading one down, each row shifted
 * right by its index; the last m rows carry q's the same way.
 */
inline SylMatrix sylvester_matrix(const MultiPoly& p, const MultiPoly& q, std::string_view v) {
    UniView vp(p, v), vq(q, v);
    int m = vp.degree(), k = vq.degree();
    if (m < 1 || k < 1)
        throw arithmetic_error("degree zero polynomial in sylvester_matrix");
    std::size_t dim = static_cast<std::size_t>(m + k);
    MultiPoly zero(Rational(0L), vp.table());
    SylMatrix s;
    s.dim = dim;
    s.var = std::string(v);
    s.degrees = {m, k};
    s.entries.assign(dim, std::vector<MultiPoly>(dim, zero));
    for (int row = 0; row < k; ++row)
        for (int j = 0; j <= m; ++j)
            s.entries[row][row + j] = vp.coeff(m - j);
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= k; ++j)
            s.entries[k + row][row + j] = vq.coeff(k - j);
    return s;
}

/*
 * Bareiss elimination. After step r, entry (i, j) is the (r+2)-minor
 * determinant of the leading rows/columns, so the final corner is the
 * determinant itself and each division by the previous pivot is exact.
 * A fully zero pivot column means a zero determinant.
 */
inline MultiPoly determinant_fraction_free(std::vector<std::vector<MultiPoly>> m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw arithmetic_error("non-square matrix");
    if (n == 0) return MultiPoly(Rational(1L));
    VarTable table = m[0][0].table();
    MultiPoly zero(Rational(0L), table);
    MultiPoly prev(Rational(1L), table);
    int sign = 1;
    for (std::size_t r = 0; r + 1 < n; ++r) {
        std::size_t pivot = r;
        while (pivot < n && m[pivot][r].is_zero()) ++pivot;
        if (pivot == n) return zero;
        if (pivot != r) {
            std::swap(m[pivot], m[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = r + 1; j < n; ++j)
                m[i][j] = MultiPoly::divide_exact(m[r][r] * m[i][j] - m[i][r] * m[r][j], prev);
            m[i][r] = zero;
        }
        prev = m[r][r];
    }
    MultiPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

inline MultiPoly determinant_fraction_free(const SylMatrix& s) {
    return determinant_fraction_free(s.entries);
}

inline ElimResult resultant(const MultiPoly& p, const MultiPoly& q, std::string_view v) {
    SylMatrix s = sylvester_matrix(p, q, v);
    ElimResult r{determinant_fraction_free(s), s.var, s.degrees};
    if (r.value.occurs(v))
        throw arithmetic_error("internal: resultant still contains the eliminated variable");
    return r;
}

// disc_v(p) = (-1)^{m(m-1)/2} / lc_v(p) * res_v(p, dp/dv). The leading
// coefficient divides the resultant exactly; anything else is an
// arithmetic bug, not a property of the input.
inline ElimResult discriminant(const MultiPoly& p, std::string_view v) {
    UniView vp(p, v);
    int m = vp.degree();
    if (m < 1) throw arithmetic_error("degree zero polynomial in discriminant");
    MultiPoly dp = p.derivative(v);
    MultiPoly res;
    if (m == 1) {
        // Syl(p, p') degenerates to the 1x1 matrix [lc], so res = lc
        res = vp.lc();
    } else {
        res = resultant(p, dp, v).value;
    }
    MultiPoly disc = MultiPoly::divide_exact(res, vp.lc());
    if ((m * (m - 1) / 2) % 2 != 0) disc = -disc;
    ElimResult r{std::move(disc), std::string(v), {m, m - 1}};
    if (r.value.occurs(v))
        throw arithmetic_error("internal: discriminant still contains the eliminated variable");
    return r;
}

}  // namespace pincert

#endif
