#include "symgrass/code_engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <istream>
#include <ostream>
#include <unordered_map>

namespace symgrass {

std::string_view variant_name(Variant v) {
    switch (v) {
    case Variant::symplectic: return "symplectic";
    case Variant::affine: return "affine";
    case Variant::derived: return "derived";
    }
    return "derived";
}

Variant parse_variant(std::string_view s) {
    if (s == "symplectic") return Variant::symplectic;
    if (s == "affine" || s == "affine_grassmann") return Variant::affine;
    if (s == "derived") return Variant::derived;
    throw Error(Errc::parse_error, "unknown variant '" + std::string(s) + "'");
}

LinearCode build_generator(int ell, const FieldSpec& field, Variant variant, std::uint64_t budget) {
    if (ell < 1) throw Error(Errc::shape_mismatch, "ell must be >= 1");
    if (variant == Variant::symplectic) {
        const auto basis = EvaluationBasis::get(*field, ell, budget);
        std::vector<std::uint64_t> cols(basis->points());
        for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
        return {field, ell, variant, basis->generator(), basis->pairs(), std::move(cols)};
    }
    if (variant != Variant::affine) throw Error(Errc::label_mismatch, "only symplectic or affine codes can be built");
    const std::uint64_t n = sat_pow(field->order(), static_cast<unsigned>(ell * ell));
    if (n > budget) throw BudgetExceeded(n, budget, "affine generator");
    std::vector<MinorIndex> pairs = all_minor_pairs(ell);
    Matrix g(*field, static_cast<int>(pairs.size()), static_cast<int>(n));
    std::vector<std::uint64_t> cols(static_cast<std::size_t>(n));
    for (std::uint64_t j = 0; j < n; ++j) {
        const Matrix m = Matrix::from_index(*field, ell, ell, j);
        for (std::size_t r = 0; r < pairs.size(); ++r) g(static_cast<int>(r), static_cast<int>(j)) = minor_value(m, pairs[r]);
        cols[static_cast<std::size_t>(j)] = j;
    }
    return {field, ell, variant, std::move(g), std::move(pairs), std::move(cols)};
}

std::vector<Repr> encode(const LinearCode& code, const MinorCombination& f) {
    if (!(f.field() == *code.field)) throw Error(Errc::spec_mismatch, "function over a different field");
    if (f.ell() != code.ell) throw Error(Errc::label_mismatch, "function for a different ell");
    const Field& fld = *code.field;
    std::vector<Repr> c(code.n(), 0);
    for (const auto& [pair, coeff] : f.terms()) {
        auto it = std::find(code.row_labels.begin(), code.row_labels.end(), pair);
        if (it == code.row_labels.end())
            throw Error(Errc::label_mismatch,
                        "(" + format_index_set(pair.rows) + "|" + format_index_set(pair.cols) + ") is not a row label");
        const int r = static_cast<int>(it - code.row_labels.begin());
        for (std::size_t j = 0; j < c.size(); ++j)
            c[j] = fld.add(c[j], fld.mul(coeff, code.generator(r, static_cast<int>(j))));
    }
    return c;
}

int code_rank(const LinearCode& code) { return rank(code.generator); }

std::uint64_t hamming_weight(std::span<const Repr> v) {
    return static_cast<std::uint64_t>(std::count_if(v.begin(), v.end(), [](Repr x) { return x != 0; }));
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("SYMGRASS_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && end != env) return v;
    }
    return 10'000'000'000ull;
}

nlohmann::json to_json(const WeightReport& r) {
    nlohmann::json j;
    j["ell"] = r.ell;
    j["q"] = r.q;
    j["n"] = r.n;
    j["k"] = r.k;
    j["d"] = r.d;
    j["witness"] = r.witness;
    if (r.histogram) {
        nlohmann::json h = nlohmann::json::object();
        for (std::size_t w = 0; w < r.histogram->size(); ++w)
            if ((*r.histogram)[w] != 0) h[std::to_string(w)] = (*r.histogram)[w];
        j["histogram"] = h;
    } else {
        j["histogram"] = nullptr;
    }
    j["exhaustive"] = r.exhaustive;
    j["enumerated"] = r.enumerated;
    j["runtime"] = {{"workers", r.workers}, {"elapsed_seconds", r.elapsed_seconds}};
    return j;
}

// ---------------------------------------------------------------- dual scan

namespace {

using Column = std::vector<Repr>;

struct Normalized {
    std::string key;   // empty for the zero column
    Repr lead = 0;
};

Normalized normalize(const Field& f, const Column& c) {
    std::size_t first = 0;
    while (first < c.size() && c[first] == 0) ++first;
    if (first == c.size()) return {};
    Normalized out;
    out.lead = c[first];
    const Repr inv = f.inv(out.lead);
    out.key.resize(c.size() * sizeof(Repr));
    for (std::size_t a = 0; a < c.size(); ++a) {
        const Repr v = f.mul(inv, c[a]);
        std::memcpy(out.key.data() + a * sizeof(Repr), &v, sizeof(Repr));
    }
    return out;
}

Column combine(const Field& f, const Column& a, Repr beta, const Column& b) {
    Column r(a.size());
    for (std::size_t t = 0; t < a.size(); ++t) r[t] = f.add(a[t], f.mul(beta, b[t]));
    return r;
}

}  // namespace

DualScanResult dual_low_weight_scan(const LinearCode& code, int wmax, std::uint64_t budget) {
    if (wmax < 1 || wmax > 4) throw Error(Errc::index_out_of_range, "wmax must be in 1..4");
    const Field& f = *code.field;
    const std::size_t n = code.n();
    const std::size_t k = static_cast<std::size_t>(code.k());
    const std::uint64_t q1 = f.order() - 1;
    std::uint64_t cost = sat_mul(n, k);
    if (wmax >= 3) cost = sat_mul(sat_mul(sat_mul(n, n) / 2, q1), k);
    if (cost > budget) throw BudgetExceeded(cost, budget, "dual low-weight scan");

    std::vector<Column> cols(n, Column(k));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t a = 0; a < k; ++a) cols[j][a] = code.generator(static_cast<int>(a), static_cast<int>(j));

    DualScanResult res;
    std::vector<Normalized> norm(n);
    for (std::size_t j = 0; j < n; ++j) {
        norm[j] = normalize(f, cols[j]);
        if (norm[j].key.empty()) {
            res.min_weight = 1;
            res.support = {j};
            res.coefficients = {1};
            return res;
        }
    }
    if (wmax < 2) return res;

    std::unordered_map<std::string, std::size_t> first_with;
    for (std::size_t j = 0; j < n; ++j) {
        auto [it, inserted] = first_with.emplace(norm[j].key, j);
        if (!inserted) {
            const std::size_t i = it->second;
            res.min_weight = 2;
            res.support = {i, j};
            res.coefficients = {norm[j].lead, f.neg(norm[i].lead)};
            return res;
        }
    }
    if (wmax < 3) return res;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (Repr beta = 1; beta < f.order(); ++beta) {
                const Normalized v = normalize(f, combine(f, cols[i], beta, cols[j]));
                auto it = first_with.find(v.key);
                if (it == first_with.end() || it->second == i || it->second == j) continue;
                const std::size_t l = it->second;
                res.min_weight = 3;
                res.support = {i, j, l};
                res.coefficients = {1, beta, f.neg(f.div(v.lead, norm[l].lead))};
                return res;
            }
    if (wmax < 4) return res;

    struct Entry {
        std::size_t i, j;
        Repr beta, lead;
    };
    std::unordered_map<std::string, std::vector<Entry>> buckets;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (Repr beta = 1; beta < f.order(); ++beta) {
                const Normalized v = normalize(f, combine(f, cols[i], beta, cols[j]));
                if (v.key.empty()) continue;
                auto& bucket = buckets[v.key];
                for (const Entry& e : bucket) {
                    if (e.i == i || e.i == j || e.j == i || e.j == j) continue;
                    // col_i + beta col_j = (lead / e.lead) (col_{e.i} + e.beta col_{e.j})
                    const Repr ratio = f.div(v.lead, e.lead);
                    res.min_weight = 4;
                    res.support = {e.i, e.j, i, j};
                    res.coefficients = {f.neg(ratio), f.neg(f.mul(ratio, e.beta)), 1, beta};
                    return res;
                }
                bucket.push_back({i, j, beta, v.lead});
            }
    return res;
}

bool dual_witness_check(const LinearCode& code, const DualWitness& w) {
    if (w.support.size() != w.coefficients.size() || w.support.empty()) return false;
    std::unordered_map<std::uint64_t, std::size_t> col_of;
    for (std::size_t j = 0; j < code.column_labels.size(); ++j) col_of.emplace(code.column_labels[j], j);
    std::vector<std::size_t> cols;
    for (std::size_t a = 0; a < w.support.size(); ++a) {
        if (w.coefficients[a] == 0 || w.coefficients[a] >= code.field->order()) return false;
        if (!(w.support[a].field() == *code.field) || w.support[a].ell() != code.ell) return false;
        const std::uint64_t label = code.variant == Variant::affine ? w.support[a].to_matrix().index() : w.support[a].index();
        auto it = col_of.find(label);
        if (it == col_of.end()) return false;
        if (std::find(cols.begin(), cols.end(), it->second) != cols.end()) return false;
        cols.push_back(it->second);
    }
    const Field& f = *code.field;
    for (int r = 0; r < code.k(); ++r) {
        Repr acc = 0;
        for (std::size_t a = 0; a < cols.size(); ++a)
            acc = f.add(acc, f.mul(w.coefficients[a], code.generator(r, static_cast<int>(cols[a]))));
        if (acc != 0) return false;
    }
    return true;
}

DualWitness alpha_dual_witness(const Field& field, int ell, Repr alpha, Repr c0) {
    SymMatrix zero(field, ell), e11(field, ell), ae11(field, ell);
    e11.set(0, 0, 1);
    ae11.set(0, 0, alpha);
    const Repr inv = field.inv(field.sub(alpha, 1));
    return {{zero, e11, ae11},
            {c0, field.mul(field.neg(field.mul(alpha, inv)), c0), field.mul(inv, c0)}};
}

DualWitness even_dual_witness(const Field& field, int ell) {
    if (ell < 2) throw Error(Errc::shape_mismatch, "witness needs ell >= 2");
    SymMatrix zero(field, ell), e11(field, ell), e12(field, ell), both(field, ell);
    e11.set(0, 0, 1);
    e12.set(0, 1, 1);
    both.set(0, 0, 1);
    both.set(0, 1, 1);
    return {{zero, e11, e12, both}, {1, 1, 1, 1}};
}

// ---------------------------------------------------------------- puncturing

LinearCode puncture_shorten(const LinearCode& code, const std::vector<std::size_t>& coords, PunctureMode mode) {
    const std::size_t n = code.n();
    std::vector<bool> drop(n, false);
    for (std::size_t c : coords) {
        if (c >= n) throw Error(Errc::index_out_of_range, "coordinate " + std::to_string(c) + " out of range");
        drop[c] = true;
    }
    std::vector<std::size_t> keep, dropped;
    for (std::size_t j = 0; j < n; ++j) (drop[j] ? dropped : keep).push_back(j);

    Matrix base = code.generator;
    if (mode == PunctureMode::shorten) {
        const Matrix messages = nullspace(select_columns(code.generator, dropped).transpose());
        base = messages * code.generator;
    }
    RowEchelon e = rref(select_columns(base, keep));
    if (e.rank() == 0) throw Error(Errc::empty_result, "resulting code is zero");
    std::vector<std::uint64_t> labels;
    for (std::size_t j : keep) labels.push_back(code.column_labels.empty() ? j : code.column_labels[j]);
    return {code.field, code.ell, Variant::derived, std::move(e.reduced), {}, std::move(labels)};
}

std::vector<std::size_t> non_symmetric_coordinates(const LinearCode& affine) {
    if (affine.variant != Variant::affine) throw Error(Errc::label_mismatch, "expected an affine code");
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < affine.n(); ++j)
        if (!Matrix::from_index(*affine.field, affine.ell, affine.ell, affine.column_labels[j]).is_symmetric())
            out.push_back(j);
    return out;
}

bool permutation_preserves(const LinearCode& code, const std::vector<std::size_t>& perm) {
    const std::size_t n = code.n();
    if (perm.size() != n) throw Error(Errc::shape_mismatch, "permutation length");
    std::vector<bool> seen(n, false);
    for (std::size_t p : perm) {
        if (p >= n || seen[p]) throw Error(Errc::shape_mismatch, "not a permutation");
        seen[p] = true;
    }
    const RowEchelon e = rref(code.generator);
    std::vector<Repr> row(n);
    for (int r = 0; r < code.k(); ++r) {
        for (std::size_t j = 0; j < n; ++j) row[j] = code.generator(r, static_cast<int>(perm[j]));
        if (!in_row_space(e, row)) return false;
    }
    return true;
}

std::vector<std::size_t> congruence_permutation(const LinearCode& code, const Matrix& a, const SymMatrix& s) {
    if (code.variant != Variant::symplectic) throw Error(Errc::label_mismatch, "expected a symplectic code");
    if (a.rows() != code.ell || a.cols() != code.ell || s.ell() != code.ell)
        throw Error(Errc::shape_mismatch, "congruence dimensions");
    if (a.determinant() == 0) throw Error(Errc::singular_matrix, "congruence matrix is singular");
    std::vector<std::size_t> perm(code.n());
    for (std::size_t j = 0; j < perm.size(); ++j)
        perm[j] = static_cast<std::size_t>(
            congruence_translate(a, s, SymMatrix::from_index(*code.field, code.ell, code.column_labels[j])).index());
    return perm;
}

bool automorphism_check(const LinearCode& code, const Matrix& a, const SymMatrix& s) {
    return permutation_preserves(code, congruence_permutation(code, a, s));
}

LinearCode dual_code(const LinearCode& code) {
    return {code.field, code.ell, Variant::derived, nullspace(code.generator), {}, code.column_labels};
}

std::vector<std::uint64_t> macwilliams_transform(const std::vector<std::uint64_t>& a, std::uint32_t q, int k) {
    using i128 = __int128;
    const int n = static_cast<int>(a.size()) - 1;
    if (n < 0 || n > 60) throw Error(Errc::shape_mismatch, "MacWilliams transform supports 0 <= n <= 60");
    std::vector<std::vector<i128>> binom(static_cast<std::size_t>(n + 1), std::vector<i128>(static_cast<std::size_t>(n + 1), 0));
    for (int i = 0; i <= n; ++i) {
        binom[static_cast<std::size_t>(i)][0] = 1;
        for (int j = 1; j <= i; ++j)
            binom[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                (j <= i - 1 ? binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] : 0);
    }
    auto C = [&](int x, int y) -> i128 { return (y < 0 || y > x) ? 0 : binom[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; };
    i128 size = 1;
    for (int t = 0; t < k; ++t) size *= q;
    std::vector<std::uint64_t> b(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) {
        i128 total = 0;
        for (int i = 0; i <= n; ++i) {
            if (a[static_cast<std::size_t>(i)] == 0) continue;
            i128 kr = 0;
            for (int s = 0; s <= j; ++s) {
                i128 term = C(i, s) * C(n - i, j - s);
                for (int t = 0; t < j - s; ++t) term *= (q - 1);
                kr += (s % 2 ? -term : term);
            }
            total += static_cast<i128>(a[static_cast<std::size_t>(i)]) * kr;
        }
        if (total < 0 || total % size != 0) throw Error(Errc::shape_mismatch, "distribution is not a linear code's");
        b[static_cast<std::size_t>(j)] = static_cast<std::uint64_t>(total / size);
    }
    return b;
}

void write_generator(std::ostream& os, const LinearCode& code) {
    const Field& f = *code.field;
    os << f.order() << ' ' << f.p() << ' ' << f.m() << ' ' << code.ell << ' ' << variant_name(code.variant) << ' '
       << code.k() << ' ' << code.n() << '\n';
    for (int r = 0; r < code.k(); ++r) {
        for (std::size_t j = 0; j < code.n(); ++j) os << (j ? " " : "") << code.generator(r, static_cast<int>(j));
        os << '\n';
    }
}

LinearCode read_generator(std::istream& is) {
    long long q = 0, p = 0, m = 0, ell = 0, k = 0, n = 0;
    std::string variant;
    if (!(is >> q >> p >> m >> ell >> variant >> k >> n))
        throw Error(Errc::parse_error, "generator header 'q p m ell variant k n'");
    if (ell < 1 || k < 0 || n < 1 || n > (1ll << 31)) throw Error(Errc::parse_error, "generator dimensions");
    FieldSpec field = field_make(static_cast<int>(p), static_cast<int>(m));
    if (field->order() != static_cast<std::uint64_t>(q)) throw Error(Errc::parse_error, "q does not equal p^m");
    const Variant v = parse_variant(variant);
    Matrix g(*field, static_cast<int>(k), static_cast<int>(n));
    for (long long r = 0; r < k; ++r)
        for (long long j = 0; j < n; ++j) {
            long long x = -1;
            if (!(is >> x)) throw Error(Errc::parse_error, "generator entry missing");
            if (x < 0 || x >= q) throw Error(Errc::parse_error, "generator entry outside field");
            g(static_cast<int>(r), static_cast<int>(j)) = static_cast<Repr>(x);
        }
    std::vector<MinorIndex> labels;
    if (v == Variant::symplectic) labels = doset_pairs(static_cast<int>(ell));
    if (v == Variant::affine) labels = all_minor_pairs(static_cast<int>(ell));
    if (!labels.empty() && labels.size() != static_cast<std::size_t>(k)) labels.clear();
    std::vector<std::uint64_t> cols(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    return {std::move(field), static_cast<int>(ell), v, std::move(g), std::move(labels), std::move(cols)};
}

}  // namespace symgrass
