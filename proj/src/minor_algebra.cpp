#include "symgrass/minor_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace symgrass {

// ---------------------------------------------------------------- MinorCombination

MinorCombination::MinorCombination(const Field& field, int ell) : field_(&field), ell_(ell) {
    if (ell < 1) throw Error(Errc::shape_mismatch, "ell must be >= 1");
}

MinorCombination MinorCombination::constant(const Field& field, int ell, Repr c) {
    MinorCombination f(field, ell);
    f.set({}, c);
    return f;
}

MinorCombination MinorCombination::minor(const Field& field, int ell, const MinorIndex& pair, Repr c) {
    MinorCombination f(field, ell);
    f.set(pair, c);
    return f;
}

Repr MinorCombination::coeff(const MinorIndex& pair) const {
    auto it = terms_.find(pair);
    return it == terms_.end() ? 0 : it->second;
}

void MinorCombination::set(const MinorIndex& pair, Repr c) {
    validate_minor(pair, ell_, ell_);
    if (!is_doset(pair))
        throw Error(Errc::label_mismatch, "(" + format_index_set(pair.rows) + "|" + format_index_set(pair.cols) +
                                               ") is not a doset pair");
    if (!field_->contains(c)) throw Error(Errc::index_out_of_range, "coefficient outside field");
    if (c == 0)
        terms_.erase(pair);
    else
        terms_[pair] = c;
}

void MinorCombination::add(const MinorIndex& pair, Repr c) { set(pair, field_->add(coeff(pair), c)); }

std::vector<MinorIndex> MinorCombination::support() const {
    std::vector<MinorIndex> out;
    for (const auto& [k, v] : terms_) out.push_back(k);
    return out;
}

int MinorCombination::max_size() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size());
}

void MinorCombination::require_compatible(const MinorCombination& o) const {
    if (!(*field_ == *o.field_)) throw Error(Errc::spec_mismatch, field_->name() + " vs " + o.field_->name());
    if (ell_ != o.ell_) throw Error(Errc::shape_mismatch, "combinations for different ell");
}

MinorCombination MinorCombination::operator+(const MinorCombination& o) const {
    require_compatible(o);
    MinorCombination r = *this;
    for (const auto& [k, v] : o.terms_) r.add(k, v);
    return r;
}

MinorCombination MinorCombination::operator-(const MinorCombination& o) const {
    require_compatible(o);
    MinorCombination r = *this;
    for (const auto& [k, v] : o.terms_) r.add(k, field_->neg(v));
    return r;
}

MinorCombination MinorCombination::scaled(Repr c) const {
    MinorCombination r(*field_, ell_);
    for (const auto& [k, v] : terms_) r.set(k, field_->mul(c, v));
    return r;
}

namespace {

bool contains_all(const std::vector<int>& big, const std::vector<int>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

bool is_maximal(const MinorCombination& f, const MinorIndex& pair) {
    if (f.coeff(pair) == 0) return false;
    for (const auto& [k, v] : f.terms()) {
        if (k == pair || k.size() <= pair.size()) continue;
        if (contains_all(k.rows, pair.rows) && contains_all(k.cols, pair.cols)) return false;
    }
    return true;
}

std::vector<MinorIndex> maximal_minors(const MinorCombination& f) {
    std::vector<MinorIndex> out;
    for (const auto& [k, v] : f.terms())
        if (is_maximal(f, k)) out.push_back(k);
    return out;
}

Repr evaluate(const MinorCombination& f, const SymMatrix& m) {
    if (!(f.field() == m.field())) throw Error(Errc::spec_mismatch, "evaluation point over a different field");
    if (f.ell() != m.ell()) throw Error(Errc::shape_mismatch, "evaluation point of different size");
    const Field& fld = f.field();
    Repr acc = 0;
    for (const auto& [pair, c] : f.terms()) acc = fld.add(acc, fld.mul(c, minor_value(m, pair)));
    return acc;
}

void write_combination(std::ostream& os, const MinorCombination& f) {
    for (const auto& [pair, c] : f.terms())
        os << format_index_set(pair.rows) << '|' << format_index_set(pair.cols) << '|' << c << '\n';
}

MinorCombination read_combination(std::istream& is, const Field& field, int ell) {
    MinorCombination f(field, ell);
    std::string line;
    while (std::getline(is, line)) {
        line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char ch) { return std::isspace(ch); }),
                   line.end());
        if (line.empty() || line[0] == '#') continue;
        const auto a = line.find('|');
        const auto b = a == std::string::npos ? a : line.find('|', a + 1);
        if (b == std::string::npos) throw Error(Errc::parse_error, "expected 'I|J|coeff': " + line);
        MinorIndex pair{parse_index_set(line.substr(0, a)), parse_index_set(line.substr(a + 1, b - a - 1))};
        long long c = 0;
        try {
            c = std::stoll(line.substr(b + 1));
        } catch (const std::logic_error&) {
            throw Error(Errc::parse_error, "bad coefficient: " + line);
        }
        if (c < 0 || c >= field.order()) throw Error(Errc::parse_error, "coefficient outside field: " + line);
        f.add(pair, static_cast<Repr>(c));
    }
    return f;
}

std::string to_string(const MinorCombination& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (const auto& [pair, c] : f.terms()) {
        if (!s.empty()) s += " + ";
        if (pair.size() == 0) {
            s += std::to_string(c);
            continue;
        }
        if (c != 1) s += std::to_string(c) + "*";
        s += "det(" + format_index_set(pair.rows) + "|" + format_index_set(pair.cols) + ")";
    }
    return s;
}

// ---------------------------------------------------------------- polynomials

unsigned Monomial::degree() const { return std::accumulate(exps.begin(), exps.end(), 0u); }

bool LexLess::operator()(const Monomial& a, const Monomial& b) const {
    for (std::size_t v = a.exps.size(); v-- > 0;)
        if (a.exps[v] != b.exps[v]) return a.exps[v] < b.exps[v];
    return false;
}

Monomial variable(int ell, int i, int j) {
    if (i < 0 || j < 0 || i >= ell || j >= ell) throw Error(Errc::index_out_of_range, "variable index");
    Monomial m{std::vector<unsigned>(static_cast<std::size_t>(ell * ell), 0)};
    m.exps[static_cast<std::size_t>(i * ell + j)] = 1;
    return m;
}

std::string to_string(const Monomial& m, int ell) {
    std::string s;
    for (std::size_t v = 0; v < m.exps.size(); ++v) {
        if (m.exps[v] == 0) continue;
        if (!s.empty()) s += '*';
        s += "X" + std::to_string(v / static_cast<std::size_t>(ell) + 1) + std::to_string(v % static_cast<std::size_t>(ell) + 1);
        if (m.exps[v] > 1) s += "^" + std::to_string(m.exps[v]);
    }
    return s.empty() ? "1" : s;
}

Polynomial::Polynomial(const Field& field, int ell) : field_(&field), ell_(ell) {}

Polynomial Polynomial::constant(const Field& field, int ell, Repr c) {
    Polynomial p(field, ell);
    p.add_term(Monomial{std::vector<unsigned>(static_cast<std::size_t>(ell * ell), 0)}, c);
    return p;
}

Polynomial Polynomial::from_monomial(const Field& field, const Monomial& m, Repr c) {
    int ell = 0;
    while (static_cast<std::size_t>(ell * ell) < m.exps.size()) ++ell;
    if (static_cast<std::size_t>(ell * ell) != m.exps.size()) throw Error(Errc::shape_mismatch, "monomial size");
    Polynomial p(field, ell);
    p.add_term(m, c);
    return p;
}

void Polynomial::add_term(const Monomial& m, Repr c) {
    if (m.exps.size() != static_cast<std::size_t>(ell_ * ell_)) throw Error(Errc::shape_mismatch, "monomial size");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second = field_->add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

Repr Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r(*field_, ell_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            for (std::size_t v = 0; v < m.exps.size(); ++v) m.exps[v] += mb.exps[v];
            r.add_term(m, field_->mul(ca, cb));
        }
    return r;
}

Polynomial Polynomial::scaled(Repr c) const {
    Polynomial r(*field_, ell_);
    for (const auto& [m, v] : terms_) r.add_term(m, field_->mul(c, v));
    return r;
}

Repr Polynomial::evaluate(const Matrix& x) const {
    if (x.rows() != ell_ || x.cols() != ell_) throw Error(Errc::shape_mismatch, "evaluation point size");
    Repr acc = 0;
    for (const auto& [m, c] : terms_) {
        Repr t = c;
        for (std::size_t v = 0; v < m.exps.size(); ++v)
            if (m.exps[v] != 0)
                t = field_->mul(t, field_->pow(x(static_cast<int>(v) / ell_, static_cast<int>(v) % ell_), m.exps[v]));
        acc = field_->add(acc, t);
    }
    return acc;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!s.empty()) s += " + ";
        const std::string mono = to_string(it->first, p.ell());
        if (it->second != 1 || mono == "1") s += std::to_string(it->second);
        if (mono != "1") s += (it->second != 1 ? "*" : "") + mono;
    }
    return s;
}

Polynomial expand_to_polynomial(const MinorIndex& pair, const Field& field, int ell) {
    validate_minor(pair, ell, ell);
    const std::size_t t = pair.size();
    Polynomial p(field, ell);
    std::vector<int> perm(t);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < t; ++a)
            for (std::size_t b = a + 1; b < t; ++b)
                if (perm[a] > perm[b]) ++inversions;
        Monomial m{std::vector<unsigned>(static_cast<std::size_t>(ell * ell), 0)};
        for (std::size_t a = 0; a < t; ++a)
            ++m.exps[static_cast<std::size_t>(pair.rows[a] * ell + pair.cols[static_cast<std::size_t>(perm[a])])];
        p.add_term(m, inversions % 2 ? field.neg(1) : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return p;
}

Polynomial expand_to_polynomial(const MinorCombination& f) {
    Polynomial p(f.field(), f.ell());
    for (const auto& [pair, c] : f.terms()) p = p + expand_to_polynomial(pair, f.field(), f.ell()).scaled(c);
    return p;
}

Polynomial normal_form(const Polynomial& p) {
    const int ell = p.ell();
    const unsigned qm1 = p.field().order() - 1;
    Polynomial r(p.field(), ell);
    for (const auto& [m, c] : p.terms()) {
        Monomial n = m;
        for (int i = 0; i < ell; ++i)
            for (int j = 0; j < i; ++j) {
                n.exps[static_cast<std::size_t>(j * ell + i)] += n.exps[static_cast<std::size_t>(i * ell + j)];
                n.exps[static_cast<std::size_t>(i * ell + j)] = 0;
            }
        for (auto& e : n.exps)
            if (e > 0) e = (e - 1) % qm1 + 1;
        r.add_term(n, c);
    }
    return r;
}

Monomial leading_term(const Polynomial& p) {
    if (p.is_zero()) throw Error(Errc::zero_polynomial, "leading term of the zero polynomial");
    return p.terms().rbegin()->first;
}

// ---------------------------------------------------------------- evaluation basis

std::shared_ptr<const EvaluationBasis> EvaluationBasis::get(const Field& field, int ell, std::uint64_t budget) {
    const std::uint64_t n = symmetric_count(ell, field.order());
    if (n > budget) throw BudgetExceeded(n, budget, "evaluation basis");
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::shared_ptr<const EvaluationBasis>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_tuple(field.p(), field.m(), ell);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    auto basis = std::make_shared<const EvaluationBasis>(field, ell);
    cache.emplace(key, basis);
    return basis;
}

EvaluationBasis::EvaluationBasis(const Field& field, int ell)
    : keep_(field_make(field.p(), field.m())),
      field_(keep_.get()),
      ell_(ell),
      pairs_(doset_pairs(ell)),
      generator_(*field_, static_cast<int>(pairs_.size()),
                 static_cast<int>(symmetric_count(ell, field.order()))) {
    for (std::size_t r = 0; r < pairs_.size(); ++r) rows_.emplace(pairs_[r], static_cast<int>(r));
    const int n = generator_.cols();
    for (int col = 0; col < n; ++col) {
        const SymMatrix m = SymMatrix::from_index(*field_, ell, static_cast<std::uint64_t>(col));
        for (std::size_t r = 0; r < pairs_.size(); ++r) generator_(static_cast<int>(r), col) = minor_value(m, pairs_[r]);
    }
    solver_ = std::make_unique<RowSolver>(generator_);
}

int EvaluationBasis::row_of(const MinorIndex& pair) const {
    auto it = rows_.find(pair);
    if (it == rows_.end()) throw Error(Errc::label_mismatch, "pair is not a basis label");
    return it->second;
}

std::vector<Repr> EvaluationBasis::codeword(const MinorCombination& f) const {
    if (!(f.field() == *field_)) throw Error(Errc::spec_mismatch, "codeword over a different field");
    if (f.ell() != ell_) throw Error(Errc::label_mismatch, "codeword for a different ell");
    const int n = generator_.cols();
    std::vector<Repr> c(static_cast<std::size_t>(n), 0);
    for (const auto& [pair, coeff] : f.terms()) {
        const int r = row_of(pair);
        for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(j)] = field_->add(c[static_cast<std::size_t>(j)], field_->mul(coeff, generator_(r, j)));
    }
    return c;
}

std::optional<MinorCombination> EvaluationBasis::decode(std::span<const Repr> v) const {
    auto x = solver_->solve(v);
    if (!x) return std::nullopt;
    MinorCombination f(*field_, ell_);
    for (std::size_t r = 0; r < pairs_.size(); ++r) f.set(pairs_[r], (*x)[r]);
    return f;
}

std::vector<Repr> codeword(const MinorCombination& f) {
    return EvaluationBasis::get(f.field(), f.ell())->codeword(f);
}

std::uint64_t weight(const MinorCombination& f) {
    const auto c = codeword(f);
    return static_cast<std::uint64_t>(std::count_if(c.begin(), c.end(), [](Repr x) { return x != 0; }));
}

// ---------------------------------------------------------------- the action

AffineCongruence AffineCongruence::identity(const Field& field, int ell) {
    return {Matrix::identity(field, ell), SymMatrix(field, ell)};
}

AffineCongruence AffineCongruence::compose(const AffineCongruence& first, const AffineCongruence& second) {
    // f(A1^T (A2^T X A2 + S2) A1 + S1) = f((A2 A1)^T X (A2 A1) + A1^T S2 A1 + S1)
    return {second.a * first.a, congruence_translate(first.a, first.s, second.s)};
}

MinorCombination act(const MinorCombination& f, const Matrix& a, const SymMatrix& s) {
    const int ell = f.ell();
    if (a.rows() != ell || a.cols() != ell || s.ell() != ell)
        throw Error(Errc::shape_mismatch, "congruence dimensions");
    if (!(a.field() == f.field()) || !(s.field() == f.field()))
        throw Error(Errc::spec_mismatch, "congruence over a different field");
    if (a.determinant() == 0) throw Error(Errc::singular_matrix, "congruence matrix is singular");
    const auto basis = EvaluationBasis::get(f.field(), ell);
    const std::vector<Repr> c = basis->codeword(f);
    std::vector<Repr> moved(c.size());
    for (std::size_t idx = 0; idx < c.size(); ++idx) {
        const SymMatrix x = SymMatrix::from_index(f.field(), ell, idx);
        moved[idx] = c[static_cast<std::size_t>(congruence_translate(a, s, x).index())];
    }
    auto g = basis->decode(moved);
    if (!g) throw std::logic_error("transformed function left the span of doset minors");
    return *g;
}

MinorCombination act(const MinorCombination& f, const AffineCongruence& t) { return act(f, t.a, t.s); }

ClearedMinors clear_subminors(const MinorCombination& f, const std::vector<int>& index_set) {
    const Field& fld = f.field();
    if (fld.p() == 2) throw Error(Errc::even_characteristic, "minor clearing divides by 2");
    const MinorIndex full{index_set, index_set};
    validate_minor(full, f.ell(), f.ell());
    if (f.coeff(full) == 0 || !is_maximal(f, full))
        throw Error(Errc::not_maximal, "det(" + format_index_set(index_set) + ") is not a maximal minor");
    if (f.coeff(full) != 1) throw Error(Errc::coefficient_not_one, "leading coefficient must be 1");

    SymMatrix s(fld, f.ell());
    const Repr half = fld.inv(fld.from_int(2));
    const std::size_t t = index_set.size();
    auto without = [&](std::size_t pos) {
        std::vector<int> v = index_set;
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(pos));
        return v;
    };
    for (std::size_t pa = 0; pa < t; ++pa) {
        const int a = index_set[pa];
        s.set(a, a, fld.neg(f.coeff({without(pa), without(pa)})));
        for (std::size_t pb = pa + 1; pb < t; ++pb) {
            const int b = index_set[pb];
            Repr v = fld.mul(half, f.coeff({without(pb), without(pa)}));
            if ((pa + pb) % 2 == 0) v = fld.neg(v);
            s.set(a, b, v);
        }
    }
    return {act(f, Matrix::identity(fld, f.ell()), s), s};
}

SpreadReduction spread_reduce(const MinorCombination& f) {
    const Field& fld = f.field();
    const int ell = f.ell();
    const int k = f.max_size();
    if (k <= 0) throw Error(Errc::already_minimal, "no minor of positive size in the support");

    const MinorIndex* best = nullptr;
    std::size_t best_spread = 0;
    for (const auto& [pair, c] : f.terms()) {
        if (static_cast<int>(pair.size()) != k) continue;
        const std::size_t sp = spread(pair).size();
        if (!best || sp < best_spread) {
            best = &pair;
            best_spread = sp;
        }
    }
    const int s = static_cast<int>(best_spread);
    if (s == k) throw Error(Errc::already_minimal, "a maximal minor already has spread equal to its size");

    // Relabel so the chosen minor becomes ({1..k}, {s-k+1..s}).
    std::vector<int> only_rows, both, only_cols, rest;
    for (int x = 0; x < ell; ++x) {
        const bool in_r = std::binary_search(best->rows.begin(), best->rows.end(), x);
        const bool in_c = std::binary_search(best->cols.begin(), best->cols.end(), x);
        (in_r && in_c ? both : in_r ? only_rows : in_c ? only_cols : rest).push_back(x);
    }
    std::vector<int> order;
    for (const auto* group : {&only_rows, &both, &only_cols, &rest}) order.insert(order.end(), group->begin(), group->end());
    std::vector<int> sigma(static_cast<std::size_t>(ell));
    for (int pos = 0; pos < ell; ++pos) sigma[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos;
    const Matrix p = Matrix::permutation(fld, sigma);

    const int target = s == k + 1 ? s - 1 : s - 2;
    const Matrix l = Matrix::elementary(fld, ell, 0, target, 1);
    const Matrix a = l * p;
    MinorCombination g = act(f, a, SymMatrix(fld, ell));

    for (const auto& [pair, c] : g.terms())
        if (static_cast<int>(pair.size()) == k && static_cast<int>(spread(pair).size()) == s - 1)
            return {std::move(g), a, pair};
    throw std::logic_error("spread reduction did not produce a smaller spread");
}

}  // namespace symgrass
