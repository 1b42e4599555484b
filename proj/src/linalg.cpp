#include "voa/linalg.hpp"

#include <stdexcept>

namespace voa {

QMatrix qmatrix(std::size_t rows, std::size_t cols) {
    return QMatrix(rows, std::vector<BigRat>(cols, BigRat(0)));
}

std::size_t rref(QMatrix& m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        BigRat inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            BigRat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

std::size_t rank(QMatrix m) { return rref(m); }

std::vector<std::vector<BigRat>> kernel(const QMatrix& m, std::size_t cols) {
    if (m.empty()) {
        std::vector<std::vector<BigRat>> full;
        for (std::size_t j = 0; j < cols; ++j) {
            std::vector<BigRat> e(cols, BigRat(0));
            e[j] = 1;
            full.push_back(std::move(e));
        }
        return full;
    }
    if (m[0].size() != cols) throw std::invalid_argument("kernel: cols mismatch");
    QMatrix e = m;
    rref(e);
    // pivot column of each nonzero row
    std::vector<long long> pivot_of_col(cols, -1);
    std::size_t r = 0;
    for (; r < e.size(); ++r) {
        std::size_t c = 0;
        while (c < cols && e[r][c] == 0) ++c;
        if (c == cols) break;
        pivot_of_col[c] = static_cast<long long>(r);
    }
    std::vector<std::vector<BigRat>> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<BigRat> v(cols, BigRat(0));
        v[c] = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            if (pivot_of_col[j] < 0) continue;
            v[j] = -e[static_cast<std::size_t>(pivot_of_col[j])][c];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

QMatrix matmul(const QMatrix& a, const QMatrix& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t n = a.size(), k = b.size(), m = b[0].size();
    if (a[0].size() != k) throw std::invalid_argument("matmul: shape mismatch");
    QMatrix c = qmatrix(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) {
                if (b[t][j] == 0) continue;
                c[i][j] += a[i][t] * b[t][j];
            }
        }
    return c;
}

}  // namespace voa
