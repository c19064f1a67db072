#include "ckgeom/linalg.hpp"

#include "ckgeom/errors.hpp"

#include <utility>

namespace ckgeom {

JetMatrix solve_linear(JetMatrix a, JetMatrix b) {
    const std::size_t m = a.size();
    if (b.size() != m) {
        throw DimensionMismatch("solve_linear: right-hand side has wrong row count");
    }
    for (const auto& row : a) {
        if (row.size() != m) {
            throw DimensionMismatch("solve_linear: matrix is not square");
        }
    }
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        while (pivot < m && a[pivot][col].constant_term() == 0) {
            ++pivot;
        }
        if (pivot == m) {
            throw SingularJet("solve_linear: constant-term matrix is singular (column " +
                              std::to_string(col) + ")");
        }
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);

        const Jet inv = reciprocal(a[col][col]);
        for (auto& entry : a[col]) {
            entry = entry * inv;
        }
        for (auto& entry : b[col]) {
            entry = entry * inv;
        }
        for (std::size_t row = 0; row < m; ++row) {
            if (row == col || a[row][col].is_zero()) {
                continue;
            }
            const Jet factor = a[row][col];
            for (std::size_t k = 0; k < m; ++k) {
                if (!a[col][k].is_zero()) {
                    a[row][k] -= factor * a[col][k];
                }
            }
            for (std::size_t k = 0; k < b[row].size(); ++k) {
                if (!b[col][k].is_zero()) {
                    b[row][k] -= factor * b[col][k];
                }
            }
        }
    }
    return b;
}

JetMatrix inverse(const JetMatrix& a) {
    const std::size_t m = a.size();
    if (m == 0) {
        return {};
    }
    const Jet& sample = a.front().front();
    JetMatrix identity(m, std::vector<Jet>(m, Jet::zero(sample.dim(), sample.degree_cap())));
    for (std::size_t i = 0; i < m; ++i) {
        identity[i][i] = Jet::constant(sample.dim(), sample.degree_cap(), 1);
    }
    return solve_linear(a, std::move(identity));
}

std::vector<std::vector<Rational>> rational_inverse(std::vector<std::vector<Rational>> a) {
    const std::size_t m = a.size();
    std::vector<std::vector<Rational>> inv(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i) {
        inv[i][i] = 1;
    }
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        while (pivot < m && a[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == m) {
            return {};
        }
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational scale = 1 / a[col][col];
        for (std::size_t k = 0; k < m; ++k) {
            a[col][k] *= scale;
            inv[col][k] *= scale;
        }
        for (std::size_t row = 0; row < m; ++row) {
            if (row == col || a[row][col] == 0) {
                continue;
            }
            const Rational factor = a[row][col];
            for (std::size_t k = 0; k < m; ++k) {
                a[row][k] -= factor * a[col][k];
                inv[row][k] -= factor * inv[col][k];
            }
        }
    }
    return inv;
}

} // namespace ckgeom
