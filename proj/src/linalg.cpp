// Part of the nplc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace nplc {

int rank_z(ZMat m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            // row_i <- pivot*row_i - m[i][c]*row_r, then strip content
            Z f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[r][c] * m[i][j] - f * m[r][j];
            Z g = vec_gcd(m[i]);
            if (g > 1)
                for (Z& x : m[i]) x /= g;
        }
        ++r;
    }
    return static_cast<int>(r);
}

Z det_z(ZMat m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det_z: not square");
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    Z prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

Z minor_gcd(const ZMat& rows) {
    const std::size_t k = rows.size();
    if (k == 0) throw std::invalid_argument("minor_gcd: empty matrix");
    const std::size_t n = rows[0].size();
    if (k > n) throw std::invalid_argument("minor_gcd: more rows than columns");
    // enumerate column subsets of size k
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    Z g = 0;
    while (true) {
        ZMat sub(k, ZVec(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = rows[i][idx[j]];
        g = boost::multiprecision::gcd(g, det_z(std::move(sub)));
        // next combination
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) {
                if (g == 0) throw std::invalid_argument("minor_gcd: dependent rows");
                return g < 0 ? -g : g;
            }
        }
        if (idx[0] > n - k) break;
    }
    if (g == 0) throw std::invalid_argument("minor_gcd: dependent rows");
    return g < 0 ? -g : g;
}

QVec solve_q(const ZMat& m, const ZVec& rhs) {
    const std::size_t n = m.size();
    if (n == 0 || rhs.size() != n) throw std::invalid_argument("solve_q: bad dimensions");
    QMat a(n, QVec(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("solve_q: not square");
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Q(m[i][j]);
        a[i][n] = Q(rhs[i]);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) throw std::invalid_argument("solve_q: singular matrix");
        std::swap(a[c], a[piv]);
        Q d = a[c][c];
        for (std::size_t j = c; j <= n; ++j) a[c][j] /= d;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Q f = a[i][c];
            for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    QVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

RankResult rank_with_kernel_q(const QMat& rows, std::size_t ncols) {
    QMat a = rows;
    const std::size_t nrows = a.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t piv = r;
        while (piv < nrows && a[piv][c] == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(a[r], a[piv]);
        Q d = a[r][c];
        for (std::size_t j = c; j < ncols; ++j) a[r][j] /= d;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Q f = a[i][c];
            for (std::size_t j = c; j < ncols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    RankResult res;
    res.rank = static_cast<int>(r);
    if (r < ncols) {
        // express the first free column in terms of pivots
        std::size_t free_col = 0;
        std::vector<bool> is_pivot(ncols, false);
        for (std::size_t pc : pivot_col) is_pivot[pc] = true;
        while (free_col < ncols && is_pivot[free_col]) ++free_col;
        QVec k(ncols, Q(0));
        k[free_col] = Q(1);
        for (std::size_t i = 0; i < r; ++i) k[pivot_col[i]] = -a[i][free_col];
        res.kernel = std::move(k);
    }
    return res;
}

int rank_mod_p(const std::vector<std::vector<std::uint32_t>>& rows_in, std::size_t ncols, std::uint32_t p) {
    auto rows = rows_in;
    const std::size_t nrows = rows.size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t piv = r;
        while (piv < nrows && rows[piv][c] % p == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(rows[r], rows[piv]);
        // normalize pivot to 1
        std::uint64_t inv = 1, base = rows[r][c] % p, e = p - 2;
        while (e) {  // fermat inverse
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (std::size_t j = c; j < ncols; ++j) rows[r][j] = static_cast<std::uint32_t>(rows[r][j] * inv % p);
        for (std::size_t i = r + 1; i < nrows; ++i) {
            std::uint64_t f = rows[i][c] % p;
            if (f == 0) continue;
            for (std::size_t j = c; j < ncols; ++j) {
                std::uint64_t v = rows[i][j] + (p - f) * rows[r][j] % p;
                rows[i][j] = static_cast<std::uint32_t>(v % p);
            }
        }
        ++r;
    }
    return static_cast<int>(r);
}

SmithResult smith_normal_form(ZMat m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("smith_normal_form: not square");
    // U tracks row ops; we need U^{-1}, accumulated as column ops on identity.
    ZMat uinv(n, ZVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) uinv[i][i] = 1;

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        std::swap(m[a], m[b]);
        for (std::size_t i = 0; i < n; ++i) std::swap(uinv[i][a], uinv[i][b]);  // inverse op on columns
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Z& f) {
        // row_dst += f*row_src  =>  uinv col_src -= f*col_dst
        for (std::size_t j = 0; j < n; ++j) m[dst][j] += f * m[src][j];
        for (std::size_t i = 0; i < n; ++i) uinv[i][src] -= f * uinv[i][dst];
    };
    auto negate_row = [&](std::size_t a) {
        for (std::size_t j = 0; j < n; ++j) m[a][j] = -m[a][j];
        for (std::size_t i = 0; i < n; ++i) uinv[i][a] = -uinv[i][a];
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < n; ++i) std::swap(m[i][a], m[i][b]);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Z& f) {
        for (std::size_t i = 0; i < n; ++i) m[i][dst] += f * m[i][src];
    };
    auto negate_col = [&](std::size_t a) {
        for (std::size_t i = 0; i < n; ++i) m[i][a] = -m[i][a];
    };

    for (std::size_t k = 0; k < n; ++k) {
        while (true) {
            // find smallest nonzero entry in the remaining block
            std::size_t bi = n, bj = n;
            Z best = 0;
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j) {
                    if (m[i][j] == 0) continue;
                    Z a = m[i][j] < 0 ? Z(-m[i][j]) : m[i][j];
                    if (best == 0 || a < best) {
                        best = a;
                        bi = i;
                        bj = j;
                    }
                }
            if (best == 0) break;  // block is zero
            if (bi != k) swap_rows(k, bi);
            if (bj != k) swap_cols(k, bj);
            if (m[k][k] < 0) negate_row(k);
            bool clean = true;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (m[i][k] == 0) continue;
                Z q = m[i][k] / m[k][k];
                add_row(i, k, -q);
                if (m[i][k] != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (m[k][j] == 0) continue;
                Z q = m[k][j] / m[k][k];
                add_col(j, k, -q);
                if (m[k][j] != 0) clean = false;
            }
            if (!clean) continue;
            // ensure divisibility of the remaining block is not required for
            // quotient enumeration; plain diagonal form suffices here
            break;
        }
    }
    (void)negate_col;
    SmithResult res;
    res.divisors.resize(n);
    for (std::size_t i = 0; i < n; ++i) res.divisors[i] = m[i][i] < 0 ? Z(-m[i][i]) : m[i][i];
    res.uinv = std::move(uinv);
    return res;
}

ZVec gcd_combination(const ZVec& a) {
    const std::size_t n = a.size();
    ZVec w(n, 0);
    Z g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        if (g == 0) {
            g = a[i] < 0 ? Z(-a[i]) : a[i];
            w[i] = a[i] < 0 ? -1 : 1;
            continue;
        }
        // extended gcd of (g, a[i])
        Z old_r = g, r = a[i], old_s = 1, s = 0, old_t = 0, t = 1;
        while (r != 0) {
            Z q = old_r / r;
            Z tmp = old_r - q * r;
            old_r = r;
            r = tmp;
            tmp = old_s - q * s;
            old_s = s;
            s = tmp;
            tmp = old_t - q * t;
            old_t = t;
            t = tmp;
        }
        if (old_r < 0) {
            old_r = -old_r;
            old_s = -old_s;
            old_t = -old_t;
        }
        for (Z& x : w) x *= old_s;
        w[i] += old_t;
        g = old_r;
    }
    if (g == 0) throw std::invalid_argument("gcd_combination: zero vector");
    return w;
}

}  // namespace nplc
