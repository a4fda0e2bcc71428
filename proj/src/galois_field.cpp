#include "symgrass/galois_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace symgrass {

namespace {

std::vector<int> digits(Repr a, int p, int m) {
    std::vector<int> d(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        d[static_cast<std::size_t>(i)] = static_cast<int>(a % static_cast<Repr>(p));
        a /= static_cast<Repr>(p);
    }
    return d;
}

Repr from_digits(const std::vector<int>& d, int p) {
    Repr r = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) r = r * static_cast<Repr>(p) + static_cast<Repr>(*it);
    return r;
}

int mod_p(long long v, int p) {
    long long r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

// Remainder of a by monic b over GF(p); both constant term first.
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const int lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i <= db; ++i)
                a[shift + i] = mod_p(a[shift + i] - static_cast<long long>(lead) * b[i], p);
        }
        a.pop_back();
    }
    return a;
}

}  // namespace

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible(const std::vector<int>& poly, int p) {
    const int deg = static_cast<int>(poly.size()) - 1;
    if (deg < 1) return false;
    if (deg == 1) return true;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (int d = 1; d <= deg / 2; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long c = 0; c < count; ++c) {
            std::vector<int> div(static_cast<std::size_t>(d) + 1);
            long long v = c;
            for (int i = 0; i < d; ++i) {
                div[static_cast<std::size_t>(i)] = static_cast<int>(v % p);
                v /= p;
            }
            div.back() = 1;
            auto r = poly_rem(poly, div, p);
            if (std::all_of(r.begin(), r.end(), [](int x) { return x == 0; })) return false;
        }
    }
    return true;
}

FieldSpec field_make(int p, int m, std::uint32_t max_order) {
    if (!is_prime(p)) throw Error(Errc::non_prime, std::to_string(p) + " is not prime");
    if (m < 1) throw Error(Errc::degree_out_of_range, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (int i = 0; i < m; ++i) {
        q *= static_cast<std::uint64_t>(p);
        if (q > max_order)
            throw Error(Errc::degree_out_of_range,
                        std::to_string(p) + "^" + std::to_string(m) + " exceeds order bound " +
                            std::to_string(max_order));
    }
    static std::mutex mu;
    static std::map<std::pair<int, int>, FieldSpec> registry;
    std::lock_guard lock(mu);
    if (auto it = registry.find({p, m}); it != registry.end()) return it->second;

    std::vector<int> modulus;
    if (m == 1) {
        modulus = {0, 1};
    } else {
        for (std::uint64_t c = 0; c < q; ++c) {
            auto cand = digits(static_cast<Repr>(c), p, m);
            cand.push_back(1);
            if (is_irreducible(cand, p)) {
                modulus = std::move(cand);
                break;
            }
        }
    }
    FieldSpec spec(new Field(p, m, std::move(modulus)));
    registry.emplace(std::make_pair(p, m), spec);
    return spec;
}

FieldSpec field_for_order(std::uint32_t q, std::uint32_t max_order) {
    if (q < 2) throw Error(Errc::non_prime, "field order must be a prime power >= 2");
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    int m = 0;
    std::uint32_t r = q;
    while (r % p == 0) {
        r /= p;
        ++m;
    }
    if (r != 1) throw Error(Errc::non_prime, std::to_string(q) + " is not a prime power");
    return field_make(static_cast<int>(p), m, max_order);
}

Field::Field(int p, int m, std::vector<int> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
    for (int i = 0; i < m_; ++i) q_ *= static_cast<std::uint32_t>(p_);
    small_ = false;

    // Primitive element and exp/log tables.
    const std::uint32_t n = q_ - 1;
    exp_.assign(2 * static_cast<std::size_t>(n) + 1, 0);
    log_.assign(q_, 0);
    for (Repr g = (q_ == 2 ? 1 : 2); g < q_; ++g) {
        Repr x = 1;
        std::uint32_t ord = 0;
        do {
            x = poly_mul(x, g);
            ++ord;
        } while (x != 1 && ord <= n);
        if (ord != n) continue;
        x = 1;
        for (std::uint32_t i = 0; i < 2 * n + 1; ++i) {
            exp_[i] = x;
            if (i < n) log_[x] = i;
            x = poly_mul(x, g);
        }
        break;
    }

    if (q_ <= kTableOrder) {
        const std::size_t qq = static_cast<std::size_t>(q_) * q_;
        add_tab_.resize(qq);
        mul_tab_.resize(qq);
        neg_tab_.resize(q_);
        for (Repr a = 0; a < q_; ++a) {
            neg_tab_[a] = static_cast<std::uint16_t>(slow_neg(a));
            for (Repr b = 0; b < q_; ++b) {
                add_tab_[a * q_ + b] = static_cast<std::uint16_t>(slow_add(a, b));
                mul_tab_[a * q_ + b] =
                    static_cast<std::uint16_t>((a == 0 || b == 0) ? 0 : exp_[log_[a] + log_[b]]);
            }
        }
        small_ = true;
    }
}

Repr Field::slow_add(Repr a, Repr b) const {
    if (m_ == 1) return (a + b) % q_;
    if (p_ == 2) return a ^ b;
    auto da = digits(a, p_, m_), db = digits(b, p_, m_);
    for (std::size_t i = 0; i < da.size(); ++i) da[i] = (da[i] + db[i]) % p_;
    return from_digits(da, p_);
}

Repr Field::slow_neg(Repr a) const {
    if (m_ == 1) return a == 0 ? 0 : q_ - a;
    if (p_ == 2) return a;
    auto d = digits(a, p_, m_);
    for (auto& x : d) x = (p_ - x) % p_;
    return from_digits(d, p_);
}

Repr Field::poly_mul(Repr a, Repr b) const {
    auto da = digits(a, p_, m_), db = digits(b, p_, m_);
    std::vector<int> prod(static_cast<std::size_t>(2 * m_ - 1), 0);
    for (std::size_t i = 0; i < da.size(); ++i)
        for (std::size_t j = 0; j < db.size(); ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    return from_digits(poly_rem(prod, modulus_, p_), p_);
}

Repr Field::inv(Repr a) const {
    if (a == 0) throw Error(Errc::division_by_zero, "inverse of zero in " + name());
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Repr Field::pow(Repr a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[static_cast<std::size_t>((static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1))];
}

Repr Field::from_int(long long v) const { return static_cast<Repr>(mod_p(v, p_)); }

std::vector<Repr> Field::elements() const {
    std::vector<Repr> out(q_);
    for (Repr a = 0; a < q_; ++a) out[a] = a;
    return out;
}

std::string Field::name() const {
    return "GF(" + std::to_string(q_) + ")";
}

FieldElement::FieldElement(const Field& field, Repr repr) : field_(&field), repr_(repr) {
    if (!field.contains(repr))
        throw Error(Errc::index_out_of_range,
                    "element " + std::to_string(repr) + " outside " + field.name());
}

void FieldElement::require_same(const FieldElement& o) const {
    if (!(*field_ == *o.field_))
        throw Error(Errc::spec_mismatch, field_->name() + " vs " + o.field_->name());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same(o);
    return {*field_, field_->add(repr_, o.repr_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same(o);
    return {*field_, field_->sub(repr_, o.repr_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same(o);
    return {*field_, field_->mul(repr_, o.repr_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    require_same(o);
    return {*field_, field_->div(repr_, o.repr_)};
}

std::vector<Repr> solve_quadratic(const Field& field, Repr b, Repr c) {
    std::vector<Repr> roots;
    for (Repr x = 0; x < field.order(); ++x) {
        const Repr v = field.add(field.add(field.mul(x, x), field.mul(b, x)), c);
        if (v == 0) roots.push_back(x);
    }
    return roots;
}

}  // namespace symgrass
