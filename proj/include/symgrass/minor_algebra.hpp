#pragma once

// The function space Fl spanned by doset minors of the generic symmetric
// matrix, polynomial expansions in the l^2 variables X_{i,j}, and the affine
// congruence action X -> A^T X A + S.

#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "symgrass/linalg.hpp"
#include "symgrass/symmetric_space.hpp"

namespace symgrass {

/// f = sum f_{I,J} det_{I,J}(X) over doset pairs; absent keys are zero.
class MinorCombination {
public:
    MinorCombination(const Field& field, int ell);

    static MinorCombination constant(const Field& field, int ell, Repr c);
    static MinorCombination minor(const Field& field, int ell, const MinorIndex& pair, Repr c = 1);

    int ell() const noexcept { return ell_; }
    const Field& field() const noexcept { return *field_; }

    Repr coeff(const MinorIndex& pair) const;
    /// ShapeMismatch/IndexOutOfRange for malformed pairs, LabelMismatch for non-doset pairs.
    void set(const MinorIndex& pair, Repr c);
    void add(const MinorIndex& pair, Repr c);

    const std::map<MinorIndex, Repr>& terms() const noexcept { return terms_; }
    std::vector<MinorIndex> support() const;
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Largest minor size in the support; -1 for the zero function.
    int max_size() const;

    MinorCombination operator+(const MinorCombination& o) const;
    MinorCombination operator-(const MinorCombination& o) const;
    MinorCombination scaled(Repr c) const;

    bool operator==(const MinorCombination& o) const {
        return ell_ == o.ell_ && *field_ == *o.field_ && terms_ == o.terms_;
    }

private:
    void require_compatible(const MinorCombination& o) const;

    const Field* field_;
    int ell_;
    std::map<MinorIndex, Repr> terms_;
};

/// Support pairs not strictly contained (rows and cols) in another support pair.
std::vector<MinorIndex> maximal_minors(const MinorCombination& f);
bool is_maximal(const MinorCombination& f, const MinorIndex& pair);

Repr evaluate(const MinorCombination& f, const SymMatrix& m);

// Text format: one term per line, "I|J|coeff", 1-based indices, "-" for the empty set.
void write_combination(std::ostream& os, const MinorCombination& f);
MinorCombination read_combination(std::istream& is, const Field& field, int ell);
std::string to_string(const MinorCombination& f);

/// Exponents of the l^2 variables X_{i,j}, row-major (X_{1,1} first).
struct Monomial {
    std::vector<unsigned> exps;

    unsigned degree() const;
    bool operator==(const Monomial& o) const = default;
};

/// X_{i,j} precedes X_{i',j'} iff (i,j) is earlier in row-major order; monomials
/// are compared lexicographically from the largest variable X_{l,l} downward.
struct LexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

Monomial variable(int ell, int i, int j);
std::string to_string(const Monomial& m, int ell);

class Polynomial {
public:
    Polynomial(const Field& field, int ell);

    static Polynomial constant(const Field& field, int ell, Repr c);
    static Polynomial from_monomial(const Field& field, const Monomial& m, Repr c = 1);

    int ell() const noexcept { return ell_; }
    const Field& field() const noexcept { return *field_; }
    /// Terms in increasing LexLess order.
    const std::map<Monomial, Repr, LexLess>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Monomial& m, Repr c);
    Repr coeff(const Monomial& m) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(Repr c) const;

    /// Value at a general l x l matrix.
    Repr evaluate(const Matrix& x) const;

    bool operator==(const Polynomial& o) const { return ell_ == o.ell_ && terms_ == o.terms_; }

private:
    const Field* field_;
    int ell_;
    std::map<Monomial, Repr, LexLess> terms_;
};

std::string to_string(const Polynomial& p);

/// Signed permutation expansion of det_{I,J} in all l^2 variables.
Polynomial expand_to_polynomial(const MinorIndex& pair, const Field& field, int ell);
Polynomial expand_to_polynomial(const MinorCombination& f);

/// Reduction modulo X_{i,j} - X_{j,i} and X_{i,j}^q - X_{i,j}.
Polynomial normal_form(const Polynomial& p);

/// LexLess-maximal monomial; ZeroPolynomial for p = 0.
Monomial leading_term(const Polynomial& p);

/// Generator of C^S(l): row r is the evaluation of doset pair r at every symmetric
/// matrix in canonical order. Shared per (field, l) and immutable.
class EvaluationBasis {
public:
    static std::shared_ptr<const EvaluationBasis> get(const Field& field, int ell,
                                                      std::uint64_t budget = kDefaultPointBudget);

    EvaluationBasis(const Field& field, int ell);

    const Field& field() const noexcept { return *field_; }
    int ell() const noexcept { return ell_; }
    const std::vector<MinorIndex>& pairs() const noexcept { return pairs_; }
    const Matrix& generator() const noexcept { return generator_; }
    std::size_t points() const noexcept { return static_cast<std::size_t>(generator_.cols()); }
    int row_of(const MinorIndex& pair) const;

    std::vector<Repr> codeword(const MinorCombination& f) const;
    /// Inverse of codeword(); nullopt if v is not the evaluation of any f.
    std::optional<MinorCombination> decode(std::span<const Repr> v) const;

private:
    FieldSpec keep_;
    const Field* field_;
    int ell_;
    std::vector<MinorIndex> pairs_;
    std::map<MinorIndex, int> rows_;
    Matrix generator_;
    std::unique_ptr<RowSolver> solver_;
};

std::vector<Repr> codeword(const MinorCombination& f);
std::uint64_t weight(const MinorCombination& f);

/// X -> A^T X A + S.
struct AffineCongruence {
    Matrix a;
    SymMatrix s;

    static AffineCongruence identity(const Field& field, int ell);
    /// Acting by `first` and then by `second` equals acting by the result.
    static AffineCongruence compose(const AffineCongruence& first, const AffineCongruence& second);

    SymMatrix apply(const SymMatrix& x) const { return congruence_translate(a, s, x); }
};

/// g with g(X) = f(A^T X A + S). SingularMatrix if A is not invertible.
MinorCombination act(const MinorCombination& f, const Matrix& a, const SymMatrix& s);
MinorCombination act(const MinorCombination& f, const AffineCongruence& t);

struct ClearedMinors {
    MinorCombination g;
    SymMatrix s;
};

/// Translates f so that no (|I|-1)-minor inside I remains; det_{I,I} must be a
/// maximal minor of f with coefficient 1 and q must be odd.
ClearedMinors clear_subminors(const MinorCombination& f, const std::vector<int>& index_set);

struct SpreadReduction {
    MinorCombination g;
    Matrix a;          // g(X) = f(A^T X A)
    MinorIndex minor;  // size-k pair of spread s-1 in supp(g)
};

/// One spread-reduction step on a maximal minor of largest size k and minimal spread s.
/// AlreadyMinimal when s = k.
SpreadReduction spread_reduce(const MinorCombination& f);

}  // namespace symgrass
