#include "tamedeg/linalg.hpp"

#include <stdexcept>

namespace tamedeg {

namespace {

void require_square(const RationalMatrix& m)
{
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("matrix is not square");
}

}  // namespace

Rational determinant(const RationalMatrix& m)
{
    require_square(m);
    RationalMatrix a = m;
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m)
{
    require_square(m);
    const std::size_t n = m.size();
    RationalMatrix a = m;
    RationalMatrix inv(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        const Rational pivot = a[c][c];
        for (std::size_t k = 0; k < n; ++k) {
            a[c][k] /= pivot;
            inv[c][k] /= pivot;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const Rational f = a[r][c];
            for (std::size_t k = 0; k < n; ++k) {
                a[r][k] -= f * a[c][k];
                inv[r][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("solve: row count mismatch");
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a.front().size();

    // Augmented integer matrix [A | b], each row scaled by its denominators' lcm.
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        if (a[r].size() != cols) throw std::invalid_argument("solve: ragged matrix");
        mpz_class scale = 1;
        for (const auto& q : a[r]) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), b[r].get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c) m[r][c] = a[r][c].get_num() * (scale / a[r][c].get_den());
        m[r][cols] = b[r].get_num() * (scale / b[r].get_den());
    }

    std::vector<std::size_t> pivot_cols;
    mpz_class prev = 1;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < cols && prow < rows; ++c) {
        std::size_t p = prow;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[prow]);
        const mpz_class& pivot = m[prow][c];
        for (std::size_t r = prow + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k <= cols; ++k) {
                m[r][k] = pivot * m[r][k] - m[r][c] * m[prow][k];
                mpz_divexact(m[r][k].get_mpz_t(), m[r][k].get_mpz_t(), prev.get_mpz_t());
            }
            m[r][c] = 0;
        }
        prev = pivot;
        pivot_cols.push_back(c);
        ++prow;
    }
    for (std::size_t r = prow; r < rows; ++r)
        if (m[r][cols] != 0) return std::nullopt;

    std::vector<Rational> x(cols, 0);
    for (std::size_t i = pivot_cols.size(); i-- > 0;) {
        const std::size_t c = pivot_cols[i];
        Rational rhs(m[i][cols]);
        for (std::size_t k = c + 1; k < cols; ++k)
            if (m[i][k] != 0 && x[k] != 0) rhs -= Rational(m[i][k]) * x[k];
        x[c] = rhs / Rational(m[i][c]);
        x[c].canonicalize();
    }
    return x;
}

}  // namespace tamedeg
