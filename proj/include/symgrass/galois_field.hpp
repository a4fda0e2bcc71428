#pragma once

// Exact arithmetic in GF(p^m) for small prime powers.
//
// Elements are integers in [0, q): the base-p digits, least significant first,
// are the coefficients of a polynomial in x reduced modulo the field's monic
// irreducible modulus. This integer is also the on-disk and CLI encoding.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "symgrass/error.hpp"

namespace symgrass {

using Repr = std::uint32_t;

inline constexpr std::uint32_t kDefaultMaxOrder = 1u << 16;

class Field {
public:
    int p() const noexcept { return p_; }
    int m() const noexcept { return m_; }
    std::uint32_t order() const noexcept { return q_; }
    bool is_prime_field() const noexcept { return m_ == 1; }

    /// Coefficients of the modulus, constant term first; size m+1, leading entry 1.
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    Repr zero() const noexcept { return 0; }
    Repr one() const noexcept { return 1; }

    Repr add(Repr a, Repr b) const {
        if (small_) return add_tab_[a * q_ + b];
        return slow_add(a, b);
    }
    Repr neg(Repr a) const { return small_ ? neg_tab_[a] : slow_neg(a); }
    Repr sub(Repr a, Repr b) const { return add(a, neg(b)); }
    Repr mul(Repr a, Repr b) const {
        if (small_) return mul_tab_[a * q_ + b];
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Repr inv(Repr a) const;
    Repr div(Repr a, Repr b) const { return mul(a, inv(b)); }
    Repr pow(Repr a, std::uint64_t e) const;

    /// Image of an integer under Z -> GF(p) -> GF(q).
    Repr from_int(long long v) const;

    /// All elements in increasing repr order (0, 1, ...).
    std::vector<Repr> elements() const;

    bool contains(Repr a) const noexcept { return a < q_; }

    /// Same (p, m); the modulus is a deterministic function of both.
    bool operator==(const Field& other) const noexcept { return p_ == other.p_ && m_ == other.m_; }

    std::string name() const;

    // Tables are fully precomputed when q <= this bound.
    static constexpr std::uint32_t kTableOrder = 256;

private:
    friend std::shared_ptr<const Field> field_make(int p, int m, std::uint32_t max_order);
    Field(int p, int m, std::vector<int> modulus);
    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    Repr slow_add(Repr a, Repr b) const;
    Repr slow_neg(Repr a) const;
    Repr poly_mul(Repr a, Repr b) const;

    int p_;
    int m_;
    std::uint32_t q_;
    std::vector<int> modulus_;
    bool small_;
    std::vector<std::uint16_t> add_tab_, mul_tab_, neg_tab_;
    std::vector<std::uint32_t> exp_, log_;
};

using FieldSpec = std::shared_ptr<const Field>;

/// Builds GF(p^m) with the smallest-encoded monic irreducible modulus of degree m.
/// Fields are interned: equal (p, m) return the same object, which lives for the
/// whole process, so raw Field pointers held by matrices never dangle.
/// Throws NonPrime for composite p, DegreeOutOfRange for m < 1 or p^m > max_order.
FieldSpec field_make(int p, int m, std::uint32_t max_order = kDefaultMaxOrder);

/// GF(q) for a prime power q; NonPrime if q is not a prime power.
FieldSpec field_for_order(std::uint32_t q, std::uint32_t max_order = kDefaultMaxOrder);

bool is_prime(long long n);

/// Monic polynomial over GF(p), coefficients constant term first.
bool is_irreducible(const std::vector<int>& poly, int p);

/// A field element bound to its field. The field must outlive the element.
class FieldElement {
public:
    FieldElement(const Field& field, Repr repr);

    Repr repr() const noexcept { return repr_; }
    const Field& field() const noexcept { return *field_; }
    bool is_zero() const noexcept { return repr_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const { return {*field_, field_->neg(repr_)}; }
    FieldElement inverse() const { return {*field_, field_->inv(repr_)}; }

    bool operator==(const FieldElement& o) const noexcept {
        return repr_ == o.repr_ && *field_ == *o.field_;
    }

private:
    void require_same(const FieldElement& o) const;

    const Field* field_;
    Repr repr_;
};

/// Roots of x^2 + b x + c by exhaustive search, ascending by repr.
std::vector<Repr> solve_quadratic(const Field& field, Repr b, Repr c);

}  // namespace symgrass
