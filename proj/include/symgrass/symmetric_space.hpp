#pragma once

// The evaluation domain S^l(F_q) of l x l symmetric matrices, minors, and
// doset-pair combinatorics.
//
// Indices are 0-based in memory and 1-based in every text format.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "symgrass/galois_field.hpp"

namespace symgrass {

inline constexpr std::uint64_t kDefaultPointBudget = std::uint64_t{1} << 26;

/// Dense rows x cols matrix over a field.
class Matrix {
public:
    Matrix(const Field& field, int rows, int cols);

    static Matrix identity(const Field& field, int n);
    /// I + coeff * E_{i,j}: adds coeff times row j to row i when multiplied on the left.
    static Matrix elementary(const Field& field, int n, int i, int j, Repr coeff);
    /// P with P(perm[a], a) = 1, so (P^T X P)(a,b) = X(perm[a], perm[b]).
    static Matrix permutation(const Field& field, const std::vector<int>& perm);
    /// Inverse of index(): big-endian base-q digits over all entries in row-major order.
    static Matrix from_index(const Field& field, int rows, int cols, std::uint64_t index);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    const Field& field() const noexcept { return *field_; }

    Repr operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
    Repr& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
    const Repr* row(int i) const { return data_.data() + static_cast<std::size_t>(i) * cols_; }
    Repr* row(int i) { return data_.data() + static_cast<std::size_t>(i) * cols_; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix transpose() const;
    bool is_symmetric() const;
    Repr determinant() const;
    std::uint64_t index() const;

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

private:
    const Field* field_;
    int rows_, cols_;
    std::vector<Repr> data_;
};

/// Symmetric l x l matrix stored as its upper triangle in row-major order.
class SymMatrix {
public:
    SymMatrix(const Field& field, int ell);

    /// Canonical index: big-endian base-q digits of the upper triangle, row-major.
    static SymMatrix from_index(const Field& field, int ell, std::uint64_t index);
    /// ShapeMismatch unless m is square and symmetric.
    static SymMatrix from_matrix(const Matrix& m);

    int ell() const noexcept { return ell_; }
    const Field& field() const noexcept { return *field_; }
    std::span<const Repr> upper() const noexcept { return upper_; }

    Repr operator()(int i, int j) const { return upper_[slot(i, j)]; }
    void set(int i, int j, Repr v);

    std::uint64_t index() const;
    Matrix to_matrix() const;

    bool operator==(const SymMatrix& o) const { return ell_ == o.ell_ && upper_ == o.upper_; }

    static std::size_t triangle_size(int ell) { return static_cast<std::size_t>(ell) * (ell + 1) / 2; }

private:
    std::size_t slot(int i, int j) const {
        if (i > j) std::swap(i, j);
        // Row i starts after i rows of lengths ell, ell-1, ..., ell-i+1.
        return static_cast<std::size_t>(i * ell_ - i * (i - 1) / 2 + (j - i));
    }

    const Field* field_;
    int ell_;
    std::vector<Repr> upper_;
};

/// Number of symmetric l x l matrices, q^{l(l+1)/2}, saturating.
std::uint64_t symmetric_count(int ell, std::uint32_t q);

/// Every symmetric matrix in canonical-index order. BudgetExceeded if the count exceeds budget.
std::vector<SymMatrix> enumerate_symmetric(int ell, const Field& field,
                                           std::uint64_t budget = kDefaultPointBudget);

/// Row/column index sets of a minor; strictly increasing, equal length, 0-based.
struct MinorIndex {
    std::vector<int> rows;
    std::vector<int> cols;

    std::size_t size() const noexcept { return rows.size(); }
    /// Ordered by (size, rows lexicographic, cols lexicographic).
    bool operator<(const MinorIndex& o) const;
    bool operator==(const MinorIndex& o) const = default;
};

/// Doset condition: rows[a] <= cols[a] for every a.
bool is_doset(const MinorIndex& pair);

/// rows ∪ cols.
std::vector<int> spread(const MinorIndex& pair);

/// Transposed pair (cols, rows).
MinorIndex transposed(const MinorIndex& pair);

/// Validates sizes, ordering and range; ShapeMismatch or IndexOutOfRange.
void validate_minor(const MinorIndex& pair, int n_rows, int n_cols);

/// Determinant of the selected submatrix; the empty minor is 1.
Repr minor_value(const Matrix& m, const MinorIndex& pair);
Repr minor_value(const SymMatrix& m, const MinorIndex& pair);

/// Determinant of an n x n row-major block (destroys the input).
Repr determinant_in_place(const Field& field, std::span<Repr> a, int n);

/// All doset pairs for sizes 0..l, ordered by (size, rows, cols).
std::vector<MinorIndex> doset_pairs(int ell);

/// All (I, J) with |I| = |J| for sizes 0..l, same ordering.
std::vector<MinorIndex> all_minor_pairs(int ell);

std::uint64_t binomial(unsigned n, unsigned k);
std::uint64_t narayana(unsigned n, unsigned k);
std::uint64_t catalan(unsigned n);

struct FullRankCount {
    std::uint64_t enumerated;
    std::uint64_t formula;
};

/// Invertible symmetric l x l matrices by enumeration and by the closed form
/// q^{C(l+1,2)} prod_{i=1}^{ceil(l/2)} (1 - q^{1-2i}).
FullRankCount count_fullrank_symmetric(int ell, const Field& field,
                                       std::uint64_t budget = kDefaultPointBudget);

/// Closed form alone (exact integer arithmetic).
std::uint64_t fullrank_symmetric_formula(int ell, std::uint32_t q);

/// True iff the rows of [M | J] (J the 0/1 anti-diagonal) are pairwise orthogonal
/// under B(x, y) = sum_{i<=l} x_i y_{2l+1-i} - sum_{i>l} x_i y_{2l+1-i}.
bool isotropic_embed_check(const Matrix& m);

/// A^T M A + S.
SymMatrix congruence_translate(const Matrix& a, const SymMatrix& s, const SymMatrix& m);

// Text format: header "q p m ell", then ell lines of ell integer entries.
void write_matrix(std::ostream& os, const Matrix& m);

struct MatrixFile {
    FieldSpec field;
    Matrix matrix;
};
MatrixFile read_matrix(std::istream& is);

/// "1,2" or "-" for the empty set.
std::string format_index_set(const std::vector<int>& idx);
std::vector<int> parse_index_set(const std::string& text);

}  // namespace symgrass
