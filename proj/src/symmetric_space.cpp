#include "symgrass/symmetric_space.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace symgrass {

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(const Field& field, int rows, int cols)
    : field_(&field), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0) {
    if (rows < 0 || cols < 0) throw Error(Errc::shape_mismatch, "negative matrix dimension");
}

Matrix Matrix::identity(const Field& field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::elementary(const Field& field, int n, int i, int j, Repr coeff) {
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
        throw Error(Errc::index_out_of_range, "elementary matrix indices");
    Matrix m = identity(field, n);
    m(i, j) = coeff;
    return m;
}

Matrix Matrix::permutation(const Field& field, const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(perm.size(), false);
    Matrix m(field, n, n);
    for (int a = 0; a < n; ++a) {
        const int t = perm[static_cast<std::size_t>(a)];
        if (t < 0 || t >= n || seen[static_cast<std::size_t>(t)])
            throw Error(Errc::shape_mismatch, "not a permutation");
        seen[static_cast<std::size_t>(t)] = true;
        m(t, a) = 1;
    }
    return m;
}

Matrix Matrix::from_index(const Field& field, int rows, int cols, std::uint64_t index) {
    Matrix m(field, rows, cols);
    const std::uint64_t q = field.order();
    for (std::size_t t = m.data_.size(); t-- > 0;) {
        m.data_[t] = static_cast<Repr>(index % q);
        index /= q;
    }
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error(Errc::shape_mismatch, "matrix product dimensions");
    if (!(*field_ == *o.field_)) throw Error(Errc::spec_mismatch, "matrix product fields");
    Matrix r(*field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Repr a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) = field_->add(r(i, j), field_->mul(a, o(k, j)));
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::shape_mismatch, "matrix sum dimensions");
    if (!(*field_ == *o.field_)) throw Error(Errc::spec_mismatch, "matrix sum fields");
    Matrix r(*field_, rows_, cols_);
    for (std::size_t t = 0; t < data_.size(); ++t) r.data_[t] = field_->add(data_[t], o.data_[t]);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(*field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool Matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

Repr Matrix::determinant() const {
    if (rows_ != cols_) throw Error(Errc::shape_mismatch, "determinant of non-square matrix");
    std::vector<Repr> copy = data_;
    return determinant_in_place(*field_, copy, rows_);
}

std::uint64_t Matrix::index() const {
    std::uint64_t idx = 0;
    for (Repr v : data_) idx = idx * field_->order() + v;
    return idx;
}

// ---------------------------------------------------------------- SymMatrix

SymMatrix::SymMatrix(const Field& field, int ell)
    : field_(&field), ell_(ell), upper_(triangle_size(ell), 0) {
    if (ell < 1) throw Error(Errc::shape_mismatch, "symmetric matrix size must be >= 1");
}

SymMatrix SymMatrix::from_index(const Field& field, int ell, std::uint64_t index) {
    SymMatrix s(field, ell);
    const std::uint64_t q = field.order();
    for (std::size_t t = s.upper_.size(); t-- > 0;) {
        s.upper_[t] = static_cast<Repr>(index % q);
        index /= q;
    }
    if (index != 0) throw Error(Errc::index_out_of_range, "symmetric matrix index too large");
    return s;
}

SymMatrix SymMatrix::from_matrix(const Matrix& m) {
    if (m.rows() != m.cols() || !m.is_symmetric())
        throw Error(Errc::shape_mismatch, "matrix is not square symmetric");
    SymMatrix s(m.field(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i; j < m.cols(); ++j) s.set(i, j, m(i, j));
    return s;
}

void SymMatrix::set(int i, int j, Repr v) {
    if (i < 0 || j < 0 || i >= ell_ || j >= ell_) throw Error(Errc::index_out_of_range, "symmetric entry");
    if (!field_->contains(v)) throw Error(Errc::index_out_of_range, "entry outside field");
    upper_[slot(i, j)] = v;
}

std::uint64_t SymMatrix::index() const {
    std::uint64_t idx = 0;
    for (Repr v : upper_) idx = idx * field_->order() + v;
    return idx;
}

Matrix SymMatrix::to_matrix() const {
    Matrix m(*field_, ell_, ell_);
    for (int i = 0; i < ell_; ++i)
        for (int j = 0; j < ell_; ++j) m(i, j) = (*this)(i, j);
    return m;
}

std::uint64_t symmetric_count(int ell, std::uint32_t q) {
    return sat_pow(q, static_cast<unsigned>(SymMatrix::triangle_size(ell)));
}

std::vector<SymMatrix> enumerate_symmetric(int ell, const Field& field, std::uint64_t budget) {
    if (ell < 1) throw Error(Errc::shape_mismatch, "ell must be >= 1");
    const std::uint64_t n = symmetric_count(ell, field.order());
    if (n > budget) throw BudgetExceeded(n, budget, "enumerate_symmetric");
    std::vector<SymMatrix> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(SymMatrix::from_index(field, ell, i));
    return out;
}

// ---------------------------------------------------------------- minors

bool MinorIndex::operator<(const MinorIndex& o) const {
    if (rows.size() != o.rows.size()) return rows.size() < o.rows.size();
    if (rows != o.rows) return rows < o.rows;
    return cols < o.cols;
}

bool is_doset(const MinorIndex& pair) {
    if (pair.rows.size() != pair.cols.size()) return false;
    for (std::size_t a = 0; a < pair.rows.size(); ++a)
        if (pair.rows[a] > pair.cols[a]) return false;
    return true;
}

std::vector<int> spread(const MinorIndex& pair) {
    std::vector<int> out;
    std::set_union(pair.rows.begin(), pair.rows.end(), pair.cols.begin(), pair.cols.end(),
                   std::back_inserter(out));
    return out;
}

MinorIndex transposed(const MinorIndex& pair) { return {pair.cols, pair.rows}; }

void validate_minor(const MinorIndex& pair, int n_rows, int n_cols) {
    if (pair.rows.size() != pair.cols.size())
        throw Error(Errc::shape_mismatch, "row and column sets differ in size");
    auto check = [](const std::vector<int>& v, int bound, const char* what) {
        for (std::size_t a = 0; a < v.size(); ++a) {
            if (v[a] < 0 || v[a] >= bound)
                throw Error(Errc::index_out_of_range, std::string(what) + " index out of range");
            if (a > 0 && v[a] <= v[a - 1])
                throw Error(Errc::shape_mismatch, std::string(what) + " indices not strictly increasing");
        }
    };
    check(pair.rows, n_rows, "row");
    check(pair.cols, n_cols, "column");
}

Repr determinant_in_place(const Field& f, std::span<Repr> a, int n) {
    Repr det = 1;
    const auto at = [&](int i, int j) -> Repr& { return a[static_cast<std::size_t>(i * n + j)]; };
    for (int c = 0; c < n; ++c) {
        int piv = c;
        while (piv < n && at(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (int j = c; j < n; ++j) std::swap(at(piv, j), at(c, j));
            det = f.neg(det);
        }
        const Repr pv = at(c, c);
        det = f.mul(det, pv);
        const Repr pinv = f.inv(pv);
        for (int r = c + 1; r < n; ++r) {
            const Repr factor = f.mul(at(r, c), pinv);
            if (factor == 0) continue;
            for (int j = c; j < n; ++j) at(r, j) = f.sub(at(r, j), f.mul(factor, at(c, j)));
        }
    }
    return det;
}

Repr minor_value(const Matrix& m, const MinorIndex& pair) {
    validate_minor(pair, m.rows(), m.cols());
    const int t = static_cast<int>(pair.size());
    if (t == 0) return 1;
    Repr buf[64];
    std::vector<Repr> heap;
    std::span<Repr> sub;
    if (t * t <= 64) {
        sub = std::span<Repr>(buf, static_cast<std::size_t>(t * t));
    } else {
        heap.resize(static_cast<std::size_t>(t * t));
        sub = heap;
    }
    for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b)
            sub[static_cast<std::size_t>(a * t + b)] =
                m(pair.rows[static_cast<std::size_t>(a)], pair.cols[static_cast<std::size_t>(b)]);
    return determinant_in_place(m.field(), sub, t);
}

Repr minor_value(const SymMatrix& m, const MinorIndex& pair) {
    validate_minor(pair, m.ell(), m.ell());
    const int t = static_cast<int>(pair.size());
    if (t == 0) return 1;
    std::vector<Repr> sub(static_cast<std::size_t>(t * t));
    for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b)
            sub[static_cast<std::size_t>(a * t + b)] =
                m(pair.rows[static_cast<std::size_t>(a)], pair.cols[static_cast<std::size_t>(b)]);
    return determinant_in_place(m.field(), sub, t);
}

namespace {

void combinations(int n, int t, std::vector<std::vector<int>>& out) {
    std::vector<int> c(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) c[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(c);
        int i = t - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - t + i) --i;
        if (i < 0) return;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < t; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
}

std::vector<MinorIndex> pairs_impl(int ell, bool doset_only) {
    if (ell < 1) throw Error(Errc::shape_mismatch, "ell must be >= 1");
    std::vector<MinorIndex> out;
    out.push_back({});
    for (int t = 1; t <= ell; ++t) {
        std::vector<std::vector<int>> sets;
        combinations(ell, t, sets);
        for (const auto& r : sets)
            for (const auto& c : sets) {
                MinorIndex p{r, c};
                if (!doset_only || is_doset(p)) out.push_back(std::move(p));
            }
    }
    return out;
}

}  // namespace

std::vector<MinorIndex> doset_pairs(int ell) { return pairs_impl(ell, true); }

std::vector<MinorIndex> all_minor_pairs(int ell) { return pairs_impl(ell, false); }

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::uint64_t narayana(unsigned n, unsigned k) {
    if (n == 0 || k == 0 || k > n) return 0;
    return binomial(n, k) * binomial(n, k - 1) / n;
}

std::uint64_t catalan(unsigned n) {
    return binomial(2 * n, n) / (n + 1);
}

std::uint64_t fullrank_symmetric_formula(int ell, std::uint32_t q) {
    // q^{N} prod_{i=1}^{c} (q^{2i-1} - 1) / q^{2i-1}, with sum of (2i-1) = c^2 <= N.
    const unsigned n_entries = static_cast<unsigned>(SymMatrix::triangle_size(ell));
    const unsigned c = static_cast<unsigned>((ell + 1) / 2);
    std::uint64_t r = sat_pow(q, n_entries - c * c);
    for (unsigned i = 1; i <= c; ++i) r = sat_mul(r, sat_pow(q, 2 * i - 1) - 1);
    return r;
}

FullRankCount count_fullrank_symmetric(int ell, const Field& field, std::uint64_t budget) {
    const std::uint64_t n = symmetric_count(ell, field.order());
    if (n > budget) throw BudgetExceeded(n, budget, "count_fullrank_symmetric");
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < n; ++i)
        if (SymMatrix::from_index(field, ell, i).to_matrix().determinant() != 0) ++count;
    return {count, fullrank_symmetric_formula(ell, field.order())};
}

bool isotropic_embed_check(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(Errc::shape_mismatch, "isotropic check needs a square matrix");
    const Field& f = m.field();
    const int ell = m.rows();
    const int width = 2 * ell;
    Matrix w(f, ell, width);
    for (int r = 0; r < ell; ++r) {
        for (int c = 0; c < ell; ++c) w(r, c) = m(r, c);
        w(r, ell + (ell - 1 - r)) = 1;
    }
    // A(i, 2l-1-i) = +1 for i < l and -1 otherwise (0-based).
    for (int r = 0; r < ell; ++r)
        for (int s = 0; s < ell; ++s) {
            Repr b = 0;
            for (int i = 0; i < width; ++i) {
                const Repr term = f.mul(w(r, i), w(s, width - 1 - i));
                b = i < ell ? f.add(b, term) : f.sub(b, term);
            }
            if (b != 0) return false;
        }
    return true;
}

SymMatrix congruence_translate(const Matrix& a, const SymMatrix& s, const SymMatrix& m) {
    const int ell = m.ell();
    if (a.rows() != ell || a.cols() != ell || s.ell() != ell)
        throw Error(Errc::shape_mismatch, "congruence dimensions");
    const Field& f = m.field();
    // (A^T M A)(i,j) = sum_{u,v} A(u,i) M(u,v) A(v,j); only the upper triangle is needed.
    std::vector<Repr> ma(static_cast<std::size_t>(ell * ell), 0);
    for (int u = 0; u < ell; ++u)
        for (int j = 0; j < ell; ++j) {
            Repr acc = 0;
            for (int v = 0; v < ell; ++v) acc = f.add(acc, f.mul(m(u, v), a(v, j)));
            ma[static_cast<std::size_t>(u * ell + j)] = acc;
        }
    SymMatrix out(f, ell);
    for (int i = 0; i < ell; ++i)
        for (int j = i; j < ell; ++j) {
            Repr acc = s(i, j);
            for (int u = 0; u < ell; ++u) acc = f.add(acc, f.mul(a(u, i), ma[static_cast<std::size_t>(u * ell + j)]));
            out.set(i, j, acc);
        }
    return out;
}

// ---------------------------------------------------------------- text I/O

void write_matrix(std::ostream& os, const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(Errc::shape_mismatch, "matrix file holds square matrices");
    const Field& f = m.field();
    os << f.order() << ' ' << f.p() << ' ' << f.m() << ' ' << m.rows() << '\n';
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
        os << '\n';
    }
}

MatrixFile read_matrix(std::istream& is) {
    long long q = 0, p = 0, mdeg = 0, ell = 0;
    if (!(is >> q >> p >> mdeg >> ell)) throw Error(Errc::parse_error, "matrix header 'q p m ell'");
    if (ell < 1 || ell > 64) throw Error(Errc::parse_error, "matrix size out of range");
    FieldSpec field = field_make(static_cast<int>(p), static_cast<int>(mdeg));
    if (field->order() != static_cast<std::uint64_t>(q)) throw Error(Errc::parse_error, "q does not equal p^m");
    Matrix m(*field, static_cast<int>(ell), static_cast<int>(ell));
    for (int i = 0; i < ell; ++i)
        for (int j = 0; j < ell; ++j) {
            long long v = -1;
            if (!(is >> v)) throw Error(Errc::parse_error, "matrix entry missing");
            if (v < 0 || v >= q) throw Error(Errc::parse_error, "matrix entry outside field");
            m(i, j) = static_cast<Repr>(v);
        }
    return {std::move(field), std::move(m)};
}

std::string format_index_set(const std::vector<int>& idx) {
    if (idx.empty()) return "-";
    std::string s;
    for (std::size_t a = 0; a < idx.size(); ++a) {
        if (a) s += ',';
        s += std::to_string(idx[a] + 1);
    }
    return s;
}

std::vector<int> parse_index_set(const std::string& text) {
    if (text == "-") return {};
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size() || v < 1) throw Error(Errc::parse_error, "bad index '" + tok + "'");
            out.push_back(v - 1);
        } catch (const std::logic_error&) {
            throw Error(Errc::parse_error, "bad index '" + tok + "'");
        }
    }
    if (out.empty()) throw Error(Errc::parse_error, "empty index set must be written '-'");
    return out;
}

}  // namespace symgrass
