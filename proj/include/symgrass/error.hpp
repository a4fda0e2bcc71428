#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symgrass {

enum class Errc {
    non_prime,
    degree_out_of_range,
    spec_mismatch,
    division_by_zero,
    budget_exceeded,
    index_out_of_range,
    shape_mismatch,
    zero_polynomial,
    singular_matrix,
    even_characteristic,
    not_maximal,
    coefficient_not_one,
    already_minimal,
    label_mismatch,
    empty_result,
    unknown_suite,
    unsupported_format,
    parse_error,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Raised when an exhaustive operation would exceed its work budget.
/// Exhaustive claims are exact or absent, so callers get the numbers needed to
/// report a skipped check.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::uint64_t required, std::uint64_t budget, const std::string& what)
        : Error(Errc::budget_exceeded,
                what + " (required " + std::to_string(required) + ", budget " + std::to_string(budget) + ")"),
          required_(required),
          budget_(budget) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

inline std::string_view errc_name(Errc code) {
    switch (code) {
    case Errc::non_prime: return "NonPrime";
    case Errc::degree_out_of_range: return "DegreeOutOfRange";
    case Errc::spec_mismatch: return "SpecMismatch";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::zero_polynomial: return "ZeroPolynomial";
    case Errc::singular_matrix: return "SingularMatrix";
    case Errc::even_characteristic: return "EvenCharacteristic";
    case Errc::not_maximal: return "NotMaximal";
    case Errc::coefficient_not_one: return "CoefficientNotOne";
    case Errc::already_minimal: return "AlreadyMinimal";
    case Errc::label_mismatch: return "LabelMismatch";
    case Errc::empty_result: return "EmptyResult";
    case Errc::unknown_suite: return "UnknownSuite";
    case Errc::unsupported_format: return "UnsupportedFormat";
    case Errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

// Saturating helpers for budget arithmetic.
inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

inline std::uint64_t sat_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r = sat_mul(r, base);
    return r;
}

}  // namespace symgrass
