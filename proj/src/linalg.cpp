#include "parabraid/linalg.hpp"

namespace parabraid {

ScalarMatrix identity_matrix(std::size_t n) {
    ScalarMatrix m = zero_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
    return m;
}

ScalarMatrix zero_matrix(std::size_t rows, std::size_t cols) {
    return ScalarMatrix(rows, std::vector<Scalar>(cols));
}

ScalarMatrix matmul(const ScalarMatrix& a, const ScalarMatrix& b) {
    const std::size_t inner = b.size();
    const std::size_t cols = inner ? b[0].size() : 0;
    ScalarMatrix out = zero_matrix(a.size(), cols);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

std::size_t matrix_rank(ScalarMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t sel = rank;
        while (sel < rows && m[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[rank]);
        Scalar inv = m[rank][c].inverse();
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c].is_zero()) continue;
            Scalar f = m[r][c] * inv;
            for (std::size_t k = c; k < cols; ++k) {
                if (!m[rank][k].is_zero()) m[r][k] -= f * m[rank][k];
            }
        }
        ++rank;
    }
    return rank;
}

std::optional<ScalarMatrix> matrix_inverse(const ScalarMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) return std::nullopt;
    }
    ScalarMatrix a = m;
    ScalarMatrix inv = identity_matrix(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && a[sel][c].is_zero()) ++sel;
        if (sel == n) return std::nullopt;
        std::swap(a[sel], a[c]);
        std::swap(inv[sel], inv[c]);
        Scalar p = a[c][c].inverse();
        for (std::size_t k = 0; k < n; ++k) {
            a[c][k] *= p;
            inv[c][k] *= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            Scalar f = a[r][c];
            for (std::size_t k = 0; k < n; ++k) {
                a[r][k] -= f * a[c][k];
                inv[r][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

}  // namespace parabraid
