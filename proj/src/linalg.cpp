#include "tresse/linalg.hpp"

#include "tresse/errors.hpp"

namespace tresse {

RFMatrix jacobian(const std::vector<RationalFunction>& fs) {
    RFMatrix m;
    m.reserve(fs.size());
    for (const auto& f : fs) {
        std::vector<RationalFunction> row;
        row.reserve(static_cast<std::size_t>(f.nvars()));
        for (int j = 0; j < f.nvars(); ++j) row.push_back(f.derive(j));
        m.push_back(std::move(row));
    }
    return m;
}

static void check_square(const RFMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw dimension_error("matrix is not square");
}

RationalFunction det(const RFMatrix& m_in) {
    check_square(m_in);
    const std::size_t n = m_in.size();
    if (n == 0) throw dimension_error("empty matrix");
    RFMatrix m = m_in;
    const auto& vars = m[0][0].vars();
    RationalFunction d = RationalFunction::constant(vars, Rat(1));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return RationalFunction::constant(vars, Rat(0));
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            d = -d;
        }
        d = d * m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            RationalFunction factor = m[r][col] / m[col][col];
            for (std::size_t c = col + 1; c < n; ++c) m[r][c] = m[r][c] - factor * m[col][c];
            m[r][col] = RationalFunction::constant(vars, Rat(0));
        }
    }
    return d;
}

RationalFunction jacobian_det(const std::vector<RationalFunction>& fs) {
    if (fs.empty()) throw dimension_error("empty function list");
    if (static_cast<int>(fs.size()) != fs[0].nvars())
        throw dimension_error("jacobian_det needs as many functions as variables");
    return det(jacobian(fs));
}

std::vector<RationalFunction> solve_linear(const RFMatrix& m_in, const std::vector<RationalFunction>& b_in) {
    check_square(m_in);
    const std::size_t n = m_in.size();
    if (b_in.size() != n) throw dimension_error("right-hand side has wrong length");
    RFMatrix m = m_in;
    std::vector<RationalFunction> b = b_in;
    const auto& vars = m[0][0].vars();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw singular_matrix_error("matrix determinant is identically zero");
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            std::swap(b[pivot], b[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            RationalFunction factor = m[r][col] / m[col][col];
            for (std::size_t c = col + 1; c < n; ++c) m[r][c] = m[r][c] - factor * m[col][c];
            b[r] = b[r] - factor * b[col];
            m[r][col] = RationalFunction::constant(vars, Rat(0));
        }
    }
    std::vector<RationalFunction> x(n, RationalFunction::constant(vars, Rat(0)));
    for (std::size_t r = n; r-- > 0;) {
        RationalFunction s = b[r];
        for (std::size_t c = r + 1; c < n; ++c) s = s - m[r][c] * x[c];
        x[r] = s / m[r][r];
    }
    return x;
}

std::vector<Rat> solve_linear_rat(std::vector<std::vector<Rat>> m, std::vector<Rat> b) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw dimension_error("matrix is not square");
    if (b.size() != n) throw dimension_error("right-hand side has wrong length");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) throw singular_matrix_error("singular matrix");
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            std::swap(b[pivot], b[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat factor = m[r][col] / m[col][col];
            for (std::size_t c = col + 1; c < n; ++c) m[r][c] -= factor * m[col][c];
            b[r] -= factor * b[col];
            m[r][col] = 0;
        }
    }
    std::vector<Rat> x(n, Rat(0));
    for (std::size_t r = n; r-- > 0;) {
        Rat s = b[r];
        for (std::size_t c = r + 1; c < n; ++c) s -= m[r][c] * x[c];
        x[r] = s / m[r][r];
    }
    return x;
}

std::vector<std::vector<Rat>> invert_rat_matrix(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) throw singular_matrix_error("singular matrix");
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            std::swap(inv[pivot], inv[col]);
        }
        Rat p = m[col][col];
        for (std::size_t c = 0; c < n; ++c) {
            m[col][c] /= p;
            inv[col][c] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat factor = m[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                m[r][c] -= factor * m[col][c];
                inv[r][c] -= factor * inv[col][c];
            }
        }
    }
    return inv;
}

} // namespace tresse
