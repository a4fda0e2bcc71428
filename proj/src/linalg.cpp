#include "symgrass/linalg.hpp"

namespace symgrass {

namespace {

void axpy_row(const Field& f, Repr* dst, const Repr* src, Repr c, int from, int n) {
    if (c == 0) return;
    for (int j = from; j < n; ++j)
        if (src[j] != 0) dst[j] = f.add(dst[j], f.mul(c, src[j]));
}

}  // namespace

RowEchelon rref(const Matrix& m) {
    const Field& f = m.field();
    Matrix a = m;
    const int rows = a.rows(), cols = a.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = r;
        while (piv < rows && a(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
        const Repr inv = f.inv(a(r, c));
        for (int j = c; j < cols; ++j) a(r, j) = f.mul(inv, a(r, j));
        for (int i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            axpy_row(f, a.row(i), a.row(r), f.neg(a(i, c)), c, cols);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced(f, r, cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < cols; ++j) reduced(i, j) = a(i, j);
    return {std::move(reduced), std::move(pivots)};
}

int rank(const Matrix& m) { return rref(m).rank(); }

Matrix nullspace(const Matrix& m) {
    const Field& f = m.field();
    const RowEchelon e = rref(m);
    const int n = m.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    Matrix out(f, n - e.rank(), n);
    int row = 0;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        out(row, free) = 1;
        for (int i = 0; i < e.rank(); ++i) out(row, e.pivots[static_cast<std::size_t>(i)]) = f.neg(e.reduced(i, free));
        ++row;
    }
    return out;
}

bool in_row_space(const RowEchelon& e, std::span<const Repr> v) {
    const Field& f = e.reduced.field();
    const int n = e.reduced.cols();
    if (static_cast<int>(v.size()) != n) throw Error(Errc::shape_mismatch, "vector length");
    std::vector<Repr> w(v.begin(), v.end());
    for (int i = 0; i < e.rank(); ++i) {
        const int p = e.pivots[static_cast<std::size_t>(i)];
        if (w[static_cast<std::size_t>(p)] != 0)
            axpy_row(f, w.data(), e.reduced.row(i), f.neg(w[static_cast<std::size_t>(p)]), p, n);
    }
    for (Repr x : w)
        if (x != 0) return false;
    return true;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(Errc::shape_mismatch, "inverse of non-square matrix");
    const int n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const RowEchelon e = rref(aug);
    if (e.rank() < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1)
        throw Error(Errc::singular_matrix, "matrix is not invertible");
    Matrix inv(m.field(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw Error(Errc::shape_mismatch, "vstack column counts");
    Matrix out(a.field(), a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
    return out;
}

Matrix select_columns(const Matrix& m, const std::vector<std::size_t>& cols) {
    Matrix out(m.field(), m.rows(), static_cast<int>(cols.size()));
    for (int i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j] >= static_cast<std::size_t>(m.cols())) throw Error(Errc::index_out_of_range, "column index");
            out(i, static_cast<int>(j)) = m(i, static_cast<int>(cols[j]));
        }
    return out;
}

bool row_space_equal(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) return false;
    const int ra = rank(a);
    return ra == rank(b) && ra == rank(vstack(a, b));
}

RowSolver::RowSolver(const Matrix& m) : m_(&m), inv_(m.field(), 0, 0) {
    const RowEchelon e = rref(m);
    if (e.rank() != m.rows()) throw Error(Errc::singular_matrix, "rows are linearly dependent");
    cols_ = e.pivots;
    std::vector<std::size_t> sel(cols_.begin(), cols_.end());
    inv_ = inverse(select_columns(m, sel));
}

std::optional<std::vector<Repr>> RowSolver::solve(std::span<const Repr> v) const {
    const Field& f = m_->field();
    const int k = m_->rows(), n = m_->cols();
    if (static_cast<int>(v.size()) != n) throw Error(Errc::shape_mismatch, "vector length");
    // x * M_P = v_P  =>  x = v_P * M_P^{-1}
    std::vector<Repr> x(static_cast<std::size_t>(k), 0);
    for (int a = 0; a < k; ++a) {
        const Repr va = v[static_cast<std::size_t>(cols_[static_cast<std::size_t>(a)])];
        if (va == 0) continue;
        for (int b = 0; b < k; ++b) x[static_cast<std::size_t>(b)] = f.add(x[static_cast<std::size_t>(b)], f.mul(va, inv_(a, b)));
    }
    std::vector<Repr> check(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < k; ++a) axpy_row(f, check.data(), m_->row(a), x[static_cast<std::size_t>(a)], 0, n);
    for (int j = 0; j < n; ++j)
        if (check[static_cast<std::size_t>(j)] != v[static_cast<std::size_t>(j)]) return std::nullopt;
    return x;
}

}  // namespace symgrass
