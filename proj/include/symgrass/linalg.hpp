#pragma once

// Dense Gaussian elimination over GF(q) on Matrix.

#include <optional>
#include <span>
#include <vector>

#include "symgrass/symmetric_space.hpp"

namespace symgrass {

struct RowEchelon {
    Matrix reduced;            // rank x cols, reduced row echelon form
    std::vector<int> pivots;   // pivot column of each row
    int rank() const noexcept { return static_cast<int>(pivots.size()); }
};

RowEchelon rref(const Matrix& m);
int rank(const Matrix& m);

/// Rows form a basis of { x : m x^T = 0 }.
Matrix nullspace(const Matrix& m);

/// Reduces v against e; true iff v lies in the row space.
bool in_row_space(const RowEchelon& e, std::span<const Repr> v);

/// SingularMatrix if m is not invertible.
Matrix inverse(const Matrix& m);

Matrix vstack(const Matrix& a, const Matrix& b);
Matrix select_columns(const Matrix& m, const std::vector<std::size_t>& cols);

bool row_space_equal(const Matrix& a, const Matrix& b);

/// Solves x * m = v for a full-row-rank m. Keeps a reference to m.
class RowSolver {
public:
    explicit RowSolver(const Matrix& m);
    /// Coefficients of v in the rows of m; nullopt when v is not in the row space.
    std::optional<std::vector<Repr>> solve(std::span<const Repr> v) const;

private:
    const Matrix* m_;
    std::vector<int> cols_;   // k independent columns
    Matrix inv_;              // inverse of m restricted to cols_
};

}  // namespace symgrass
