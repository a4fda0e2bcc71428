#pragma once

// Linear codes C^S(l) (symplectic) and C^A(l) (affine Grassmann): generators,
// exhaustive weight searches, dual low-weight structure, puncturing and
// automorphisms.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "symgrass/minor_algebra.hpp"

namespace symgrass {

enum class Variant { symplectic, affine, derived };

std::string_view variant_name(Variant v);
Variant parse_variant(std::string_view s);

struct LinearCode {
    FieldSpec field;
    int ell = 0;
    Variant variant = Variant::derived;
    Matrix generator;
    std::vector<MinorIndex> row_labels;           // empty for derived codes
    std::vector<std::uint64_t> column_labels;     // canonical matrix indices

    std::size_t n() const noexcept { return static_cast<std::size_t>(generator.cols()); }
    int k() const noexcept { return generator.rows(); }
};

/// Symplectic: doset minors over all symmetric matrices. Affine: all (I,J) minors
/// with |I| = |J| over all l x l matrices. BudgetExceeded when n exceeds budget.
LinearCode build_generator(int ell, const FieldSpec& field, Variant variant,
                           std::uint64_t budget = kDefaultPointBudget);

/// Codeword of f in column order. LabelMismatch if f uses a pair that is not a row label.
std::vector<Repr> encode(const LinearCode& code, const MinorCombination& f);

int code_rank(const LinearCode& code);

std::uint64_t hamming_weight(std::span<const Repr> v);

/// Work budget for exhaustive searches: SYMGRASS_BUDGET if set, else 1e10.
std::uint64_t default_budget();

struct SearchOptions {
    std::uint64_t budget = default_budget();
    unsigned workers = 1;
};

struct WeightReport {
    int ell = 0;
    std::uint32_t q = 0;
    std::size_t n = 0;
    int k = 0;
    std::uint64_t d = 0;
    std::vector<Repr> witness;                           // message vector of a weight-d codeword
    std::optional<std::vector<std::uint64_t>> histogram; // index = weight, sums to q^k
    std::uint64_t enumerated = 0;                        // messages visited
    bool exhaustive = false;
    unsigned workers = 1;
    double elapsed_seconds = 0;
};

/// Deterministic fields only; timing lives under "runtime".
nlohmann::json to_json(const WeightReport& r);

/// Exact minimum distance over one representative per codeword line. The generator
/// must have full row rank. BudgetExceeded when (q^k - 1)/(q - 1) * n > budget.
WeightReport min_distance_exhaustive(const LinearCode& code, const SearchOptions& opt = {});

/// Full weight histogram. BudgetExceeded when q^k * n > budget.
WeightReport weight_enumerator(const LinearCode& code, const SearchOptions& opt = {});

struct DualScanResult {
    std::optional<int> min_weight;       // nullopt: no dual codeword of weight <= wmax
    std::vector<std::size_t> support;    // witness coordinates
    std::vector<Repr> coefficients;
};

/// Smallest dual weight up to wmax (<= 4) by column-dependence search.
DualScanResult dual_low_weight_scan(const LinearCode& code, int wmax,
                                    std::uint64_t budget = default_budget());

/// A candidate dual codeword given by evaluation points and coefficients.
struct DualWitness {
    std::vector<SymMatrix> support;
    std::vector<Repr> coefficients;
};

/// True iff the witness is well formed and sum c_S f(S) = 0 for every generator row.
bool dual_witness_check(const LinearCode& code, const DualWitness& w);

/// Support {0, E11, alpha E11} with coefficients c0, -alpha/(alpha-1) c0, 1/(alpha-1) c0.
DualWitness alpha_dual_witness(const Field& field, int ell, Repr alpha, Repr c0 = 1);
/// Support {0, E11, E12+E21, E11+E12+E21}, all coefficients 1.
DualWitness even_dual_witness(const Field& field, int ell);

enum class PunctureMode { puncture, shorten };

/// Deletes (puncture) or zero-restricts then deletes (shorten) the given
/// coordinates; the result has a full-rank reduced generator. EmptyResult for a zero code.
LinearCode puncture_shorten(const LinearCode& code, const std::vector<std::size_t>& coords, PunctureMode mode);

/// Coordinates of an affine code whose matrices are not symmetric.
std::vector<std::size_t> non_symmetric_coordinates(const LinearCode& affine);

/// True iff the row space is unchanged by coordinate relabelling
/// c'[j] = c[perm[j]].
bool permutation_preserves(const LinearCode& code, const std::vector<std::size_t>& perm);

/// Coordinate map M -> A^T M A + S on a symplectic code.
std::vector<std::size_t> congruence_permutation(const LinearCode& code, const Matrix& a, const SymMatrix& s);
bool automorphism_check(const LinearCode& code, const Matrix& a, const SymMatrix& s);

/// Right nullspace of the generator.
LinearCode dual_code(const LinearCode& code);

/// Weight distribution of the dual from the primal distribution a (a.size() = n+1).
std::vector<std::uint64_t> macwilliams_transform(const std::vector<std::uint64_t>& a, std::uint32_t q, int k);

// Text format: header "q p m ell variant k n", then k rows of n entries.
void write_generator(std::ostream& os, const LinearCode& code);
LinearCode read_generator(std::istream& is);

}  // namespace symgrass
