#include "symgrass/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace symgrass {

using nlohmann::json;

// ---------------------------------------------------------------- status

std::string_view status_name(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped_budget: return "skipped-budget";
    }
    return "fail";
}

Status parse_status(std::string_view s) {
    if (s == "pass") return Status::pass;
    if (s == "fail") return Status::fail;
    if (s == "skipped-budget") return Status::skipped_budget;
    throw Error(Errc::parse_error, "unknown status '" + std::string(s) + "'");
}

std::size_t VerificationReport::count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& c) { return c.status == s; }));
}

std::string VerificationReport::run_id() const {
    const std::string text = suite + "|" + parameters.dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << suite << '-' << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

// ---------------------------------------------------------------- serialization

namespace {

json check_json(const CheckRecord& c) {
    json j = {{"name", c.name},         {"reference", c.reference}, {"source", c.source},
              {"expected", c.expected}, {"computed", c.computed},   {"status", status_name(c.status)}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (c.discrepancy) j["discrepancy"] = *c.discrepancy;
    if (c.required) j["budget_required"] = *c.required;
    if (c.budget) j["budget"] = *c.budget;
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string scalar_text(const json& j) {
    if (j.is_null()) return "";
    return j.is_string() ? j.get<std::string>() : j.dump();
}

}  // namespace

json to_json(const VerificationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(check_json(c));
    std::size_t discrepancies = 0;
    for (const auto& c : r.checks) discrepancies += c.discrepancy.value_or(false);
    return {
        {"run_id", r.run_id()},
        {"suite", r.suite},
        {"parameters", r.parameters},
        {"checks", checks},
        {"summary",
         {{"pass", r.count(Status::pass)},
          {"fail", r.count(Status::fail)},
          {"skipped-budget", r.count(Status::skipped_budget)},
          {"discrepancies", discrepancies}}},
        {"runtime", {{"workers", r.workers}, {"timestamp", r.timestamp}, {"elapsed_seconds", r.elapsed_seconds}}},
    };
}

VerificationReport report_from_json(const json& j) {
    try {
        VerificationReport r;
        r.suite = j.at("suite").get<std::string>();
        r.parameters = j.value("parameters", json::object());
        for (const json& c : j.at("checks")) {
            CheckRecord rec;
            rec.name = c.at("name").get<std::string>();
            rec.reference = c.value("reference", "");
            rec.source = c.value("source", "");
            rec.expected = c.value("expected", json());
            rec.computed = c.value("computed", json());
            rec.status = parse_status(c.at("status").get<std::string>());
            rec.detail = c.value("detail", "");
            if (c.contains("discrepancy")) rec.discrepancy = c["discrepancy"].get<bool>();
            if (c.contains("budget_required")) rec.required = c["budget_required"].get<std::uint64_t>();
            if (c.contains("budget")) rec.budget = c["budget"].get<std::uint64_t>();
            r.checks.push_back(std::move(rec));
        }
        if (j.contains("runtime")) {
            const json& rt = j["runtime"];
            r.workers = rt.value("workers", 1u);
            r.timestamp = rt.value("timestamp", "");
            r.elapsed_seconds = rt.value("elapsed_seconds", 0.0);
        }
        return r;
    } catch (const json::exception& e) {
        throw Error(Errc::parse_error, std::string("malformed report: ") + e.what());
    }
}

Format parse_format(std::string_view s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "text") return Format::text;
    throw Error(Errc::unsupported_format, "unknown format '" + std::string(s) + "'");
}

std::string report_emit(const VerificationReport& r, Format format) {
    std::ostringstream os;
    switch (format) {
    case Format::json:
        os << to_json(r).dump(2) << '\n';
        break;
    case Format::csv:
        os << "name,status,source,expected,computed,discrepancy,reference,detail\n";
        for (const auto& c : r.checks) {
            os << csv_field(c.name) << ',' << status_name(c.status) << ',' << csv_field(c.source) << ','
               << csv_field(scalar_text(c.expected)) << ',' << csv_field(scalar_text(c.computed)) << ','
               << (c.discrepancy ? (*c.discrepancy ? "yes" : "no") : "") << ',' << csv_field(c.reference) << ','
               << csv_field(c.detail) << '\n';
        }
        break;
    case Format::text:
        os << "suite " << r.suite << " (" << r.run_id() << ")\n";
        for (const auto& c : r.checks) {
            os << '[' << status_name(c.status) << "] " << c.name << ": expected " << scalar_text(c.expected)
               << ", computed " << scalar_text(c.computed);
            if (c.discrepancy.value_or(false)) os << " [discrepancy]";
            if (!c.detail.empty()) os << " (" << c.detail << ')';
            os << '\n';
        }
        os << r.count(Status::pass) << " pass, " << r.count(Status::fail) << " fail, "
           << r.count(Status::skipped_budget) << " skipped-budget\n";
        break;
    }
    return os.str();
}

// ---------------------------------------------------------------- shared helpers

namespace {

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

MinorIndex pair(std::vector<int> rows, std::vector<int> cols) { return {std::move(rows), std::move(cols)}; }

CheckRecord record(std::string name, std::string reference, std::string source, json expected, json computed,
                   bool ok, std::string detail = {}) {
    CheckRecord c;
    c.name = std::move(name);
    c.reference = std::move(reference);
    c.source = std::move(source);
    c.expected = std::move(expected);
    c.computed = std::move(computed);
    c.status = ok ? Status::pass : Status::fail;
    c.detail = std::move(detail);
    return c;
}

/// Runs body; a BudgetExceeded becomes a skipped-budget record.
void guarded(VerificationReport& r, const std::string& name, const std::string& reference, const std::string& source,
             const json& expected, const std::function<void()>& body) {
    try {
        body();
    } catch (const BudgetExceeded& e) {
        CheckRecord c = record(name, reference, source, expected, nullptr, true, e.what());
        c.status = Status::skipped_budget;
        c.required = e.required();
        c.budget = e.budget();
        r.add(std::move(c));
    }
}

std::vector<std::uint32_t> qs(const RunOptions& opt, std::vector<std::uint32_t> def) {
    return opt.q_list.empty() ? def : opt.q_list;
}

std::vector<int> ells(const RunOptions& opt, std::vector<int> def) {
    return opt.ell ? std::vector<int>{*opt.ell} : def;
}

/// Default (l, q) grid, narrowed by whichever of ell / q_list is given.
std::vector<std::pair<int, std::uint32_t>> grid(const RunOptions& opt,
                                                std::vector<std::pair<int, std::uint32_t>> def) {
    std::vector<std::pair<int, std::uint32_t>> out;
    if (opt.ell && !opt.q_list.empty()) {
        for (auto q : opt.q_list) out.emplace_back(*opt.ell, q);
        return out;
    }
    for (auto [l, q] : def) {
        if (opt.ell && l != *opt.ell) continue;
        if (!opt.q_list.empty() && std::find(opt.q_list.begin(), opt.q_list.end(), q) == opt.q_list.end()) continue;
        out.emplace_back(l, q);
    }
    if (out.empty() && opt.ell) out.emplace_back(*opt.ell, 2);
    if (out.empty())
        for (auto q : opt.q_list) out.emplace_back(2, q);
    return out;
}

std::string lq(int ell, std::uint32_t q) { return "l=" + std::to_string(ell) + " q=" + std::to_string(q); }

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    Repr elem(std::uint32_t q) { return static_cast<Repr>(gen() % q); }
    Repr nonzero(std::uint32_t q) { return static_cast<Repr>(1 + gen() % (q - 1)); }
};

Matrix random_invertible(const Field& f, int ell, Rng& rng) {
    for (;;) {
        Matrix a(f, ell, ell);
        for (int i = 0; i < ell; ++i)
            for (int j = 0; j < ell; ++j) a(i, j) = rng.elem(f.order());
        if (a.determinant() != 0) return a;
    }
}

SymMatrix random_symmetric(const Field& f, int ell, Rng& rng) {
    SymMatrix s(f, ell);
    for (int i = 0; i < ell; ++i)
        for (int j = i; j < ell; ++j) s.set(i, j, rng.elem(f.order()));
    return s;
}

/// Random combination; coeff(pair) returns a fixed value or nullopt for a uniform one.
MinorCombination random_combination(const Field& f, int ell, Rng& rng,
                                    const std::function<std::optional<Repr>(const MinorIndex&)>& coeff) {
    MinorCombination g(f, ell);
    for (const auto& p : doset_pairs(ell)) {
        const auto fixed = coeff(p);
        g.set(p, fixed ? *fixed : rng.elem(f.order()));
    }
    return g;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) { return sat_pow(b, e); }

std::uint64_t default_samples(const RunOptions& opt, std::uint64_t def) { return opt.samples ? opt.samples : def; }

MinorCombination witness_function(const Field& f, int ell) {
    MinorCombination g = MinorCombination::minor(f, ell, pair({0, 1}, {0, 1}));
    g.set(pair({0}, {1}), 1);
    return g;
}

}  // namespace

// ---------------------------------------------------------------- tables

std::uint64_t distance_formula(int ell, std::uint32_t q) {
    if (ell < 1) throw Error(Errc::shape_mismatch, "l must be positive");
    if (ell == 1) return q - 1;
    const unsigned delta = static_cast<unsigned>(ell * (ell + 1) / 2);
    return ipow(q, delta) - ipow(q, delta - 1) - ipow(q, delta - 2);
}

std::optional<std::uint64_t> tabulated_distance(int ell, std::uint32_t q) {
    static const std::map<std::uint32_t, std::uint64_t> l2{{2, 2}, {3, 15}, {4, 95}, {5, 287}, {7, 440}, {8, 639}, {9, 1199}};
    static const std::map<std::uint32_t, std::uint64_t> l3{{2, 16},     {3, 405},     {4, 2816},  {5, 11875},
                                                           {7, 98441},  {8, 225280},  {9, 465831}};
    const auto* table = ell == 2 ? &l2 : ell == 3 ? &l3 : nullptr;
    if (!table) return std::nullopt;
    const auto it = table->find(q);
    if (it == table->end()) return std::nullopt;
    return it->second;
}

TableRun run_verify_tables(const RunOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    const int ell = opt.ell.value_or(2);
    if (ell < 2) throw Error(Errc::shape_mismatch, "verify-tables needs l >= 2");
    const auto q_list = qs(opt, {2, 3, 4, 5, 7, 8, 9});
    TableRun run;
    VerificationReport& r = run.report;
    r.suite = "tables";
    r.parameters = {{"ell", ell}, {"q_list", q_list}, {"budget", opt.budget}};
    r.workers = std::max(1u, opt.workers);
    const unsigned delta = static_cast<unsigned>(ell * (ell + 1) / 2);
    const std::string dref = "d(C^S(l)) = q^delta - q^(delta-1) - q^(delta-2), delta = l(l+1)/2";

    for (std::uint32_t q : q_list) {
        const std::string tag = lq(ell, q);
        const FieldSpec f = field_for_order(q);
        TableRow row;
        row.q = q;
        row.d_formula = distance_formula(ell, q);
        row.d_tabulated = tabulated_distance(ell, q);

        guarded(r, "tables " + tag + " generator", "C^S(l) has n = q^delta coordinates", "formula", ipow(q, delta), [&] {
            const LinearCode code = build_generator(ell, f, Variant::symplectic);
            row.n = code.n();
            r.add(record("tables " + tag + " n", "n = q^(l(l+1)/2)", "formula", ipow(q, delta), row.n,
                         row.n == ipow(q, delta)));
            row.k = code_rank(code);
            const auto cat = catalan(static_cast<unsigned>(ell + 1));
            r.add(record("tables " + tag + " k", "k = rank of the generator = Catalan(l+1)", "formula", cat, row.k,
                         static_cast<std::uint64_t>(row.k) == cat));
            guarded(r, "tables " + tag + " d exhaustive", dref, "formula", row.d_formula, [&] {
                const WeightReport w = min_distance_exhaustive(code, {opt.budget, opt.workers});
                row.d_exhaustive = w.d;
                std::vector<Repr> cw(code.n(), 0);
                for (int i = 0; i < code.k(); ++i)
                    for (std::size_t j = 0; j < code.n(); ++j)
                        cw[j] = f->add(cw[j], f->mul(w.witness[static_cast<std::size_t>(i)], code.generator(i, static_cast<int>(j))));
                const auto ww = hamming_weight(cw);
                r.add(record("tables " + tag + " d exhaustive", dref, "formula", row.d_formula, w.d,
                             w.d == row.d_formula && ww == w.d,
                             "enumerated " + std::to_string(w.enumerated) + " codeword lines; witness weight " +
                                 std::to_string(ww)));
            });
        });

        guarded(r, "tables " + tag + " d witness", "wt(det_{12,12} + det_{1,2}) = q^delta - q^(delta-1) - q^(delta-2)",
                "formula", row.d_formula, [&] {
                    row.d_witness = weight(witness_function(*f, ell));
                    r.add(record("tables " + tag + " d witness",
                                 "wt(det_{12,12} + det_{1,2}) = q^delta - q^(delta-1) - q^(delta-2)", "formula",
                                 row.d_formula, row.d_witness, row.d_witness == row.d_formula));
                });

        if (row.d_tabulated) {
            row.discrepancy = *row.d_tabulated != row.d_formula;
            CheckRecord c = record("tables " + tag + " d tabulated", "published parameter table value of d", "tabulated",
                                   *row.d_tabulated, row.d_exhaustive ? json(*row.d_exhaustive) : json(row.d_formula),
                                   true,
                                   row.discrepancy ? "tabulated value disagrees with the distance formula" +
                                                         std::string(row.d_exhaustive ? " and the exhaustive search" : "")
                                                   : "");
            c.discrepancy = row.discrepancy;
            r.add(std::move(c));
        }
        run.rows.push_back(row);
    }
    r.timestamp = utc_now();
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return run;
}

std::string table_csv(const std::vector<TableRow>& rows, int ell) {
    std::ostringstream os;
    os << "# l=" << ell << "\nq,n,k,d_formula,d_exhaustive,d_witness,d_table,discrepancy\n";
    for (const auto& r : rows) {
        os << r.q << ',' << r.n << ',' << r.k << ',' << r.d_formula << ',';
        if (r.d_exhaustive) os << *r.d_exhaustive;
        os << ',' << r.d_witness << ',';
        if (r.d_tabulated) os << *r.d_tabulated;
        os << ',' << (r.discrepancy ? "yes" : "no") << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------- counting helpers

std::uint64_t hyperbolic_count(const Field& f, Repr a, Repr b, Repr lambda) {
    std::uint64_t n = 0;
    for (Repr t1 = 0; t1 < f.order(); ++t1)
        for (Repr t2 = 0; t2 < f.order(); ++t2) n += f.mul(f.add(t1, a), f.add(t2, b)) == lambda;
    return n;
}

std::uint64_t quadratic_system_max(const Field& f, int n) {
    const std::uint32_t q = f.order();
    std::map<std::vector<Repr>, std::uint64_t> solutions;
    std::vector<Repr> t(static_cast<std::size_t>(n), 0);
    const std::uint64_t total = ipow(q, static_cast<unsigned>(n));
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t x = idx;
        for (auto& v : t) {
            v = static_cast<Repr>(x % q);
            x /= q;
        }
        // The unique instance (a_i, b_ij) this assignment solves.
        std::vector<Repr> key;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) key.push_back(f.mul(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]));
        ++solutions[key];
    }
    std::uint64_t best = 0;
    for (const auto& [k, c] : solutions) best = std::max(best, c);
    return best;
}

// ---------------------------------------------------------------- suites

namespace {

void suite_hyperbolic(const RunOptions& opt, VerificationReport& r) {
    for (std::uint32_t q : qs(opt, {2, 3, 4, 5, 7})) {
        const FieldSpec f = field_for_order(q);
        std::set<std::uint64_t> zero, nonzero;
        for (Repr a = 0; a < q; ++a)
            for (Repr b = 0; b < q; ++b)
                for (Repr l = 0; l < q; ++l) (l == 0 ? zero : nonzero).insert(hyperbolic_count(*f, a, b, l));
        const json expected = {{"lambda=0", 2 * q - 1}, {"lambda!=0", q - 1}};
        const json computed = {{"lambda=0", zero}, {"lambda!=0", nonzero}};
        const bool ok = zero == std::set<std::uint64_t>{2u * q - 1} && (q == 1 || nonzero == std::set<std::uint64_t>{q - 1u});
        r.add(record("hyperbolic q=" + std::to_string(q),
                     "#{(T1,T2) : (T1+a)(T2+b) = lambda} is 2q-1 for lambda = 0 and q-1 otherwise", "formula", expected,
                     computed, ok, "all (a, b, lambda) enumerated"));
    }
}

void suite_quadratic_system(const RunOptions& opt, VerificationReport& r) {
    for (std::uint32_t q : qs(opt, {3, 5})) {
        const FieldSpec f = field_for_order(q);
        for (int n = 1; n <= 3; ++n) {
            const auto best = quadratic_system_max(*f, n);
            r.add(record("quadratic-system q=" + std::to_string(q) + " n=" + std::to_string(n),
                         "T_i^2 = a_i, T_i T_j = b_ij has at most 2 solutions", "formula", "<= 2", best, best <= 2,
                         "largest solution count over all instances"));
        }
    }
}

void suite_char2(const RunOptions& opt, VerificationReport& r) {
    for (std::uint32_t q : qs(opt, {2, 4, 8, 16})) {
        const FieldSpec f = field_for_order(q);
        if (f->p() != 2) throw Error(Errc::spec_mismatch, "char2-quadratic needs even q, got " + std::to_string(q));
        std::set<std::size_t> counts;
        for (Repr c = 0; c < q; ++c) counts.insert(solve_quadratic(*f, 0, c).size());
        r.add(record("char2-quadratic q=" + std::to_string(q), "x^2 = c has a unique solution in GF(2^m)", "formula", 1,
                     counts, counts == std::set<std::size_t>{1}, "root counts over all c"));
    }
}

void suite_fullrank(const RunOptions& opt, VerificationReport& r) {
    for (int ell : ells(opt, {1, 2, 3}))
        for (std::uint32_t q : qs(opt, {2, 3, 4, 5})) {
            const std::string name = "fullrank-count " + lq(ell, q);
            const std::string ref = "#invertible symmetric = q^C(l+1,2) prod_{i=1}^{ceil(l/2)} (1 - q^(1-2i))";
            guarded(r, name, ref, "formula", fullrank_symmetric_formula(ell, q), [&] {
                const auto c = count_fullrank_symmetric(ell, *field_for_order(q));
                r.add(record(name, ref, "formula", c.formula, c.enumerated, c.formula == c.enumerated));
            });
        }
}

void suite_classifier(const RunOptions& opt, VerificationReport& r) {
    const auto i0 = pair({}, {}), i11 = pair({0}, {0}), i12 = pair({0}, {1}), i22 = pair({1}, {1});
    const auto det = pair({0, 1}, {0, 1});
    for (std::uint32_t q : qs(opt, {2, 3, 4, 5})) {
        const FieldSpec f = field_for_order(q);
        const std::uint64_t q3 = ipow(q, 3), q2 = ipow(q, 2);
        const bool even = f->p() == 2;
        const Repr half = even ? 0 : f->inv(f->from_int(2));
        // Minimum weight per branch and violation count, over all q^4 monic-determinant functions.
        std::uint64_t min_zero = UINT64_MAX, min_other = UINT64_MAX, bad = 0;
        std::uint64_t lin_min = UINT64_MAX, lin_bad = 0;
        for (Repr a = 0; a < q; ++a)
            for (Repr b = 0; b < q; ++b)
                for (Repr c = 0; c < q; ++c)
                    for (Repr d = 0; d < q; ++d) {
                        MinorCombination g(*f, 2);
                        g.set(i0, a);
                        g.set(i11, b);
                        g.set(i12, c);
                        g.set(i22, d);
                        if (!g.is_zero()) {
                            const auto w = weight(g);
                            lin_min = std::min(lin_min, w);
                            lin_bad += w < q3 - q2;
                        }
                        g.set(det, 1);
                        const auto w = weight(g);
                        bool branch_zero;
                        if (even) {
                            branch_zero = c == 0;
                        } else {
                            const Repr h = f->mul(c, half);
                            branch_zero = f->add(f->sub(f->mul(h, h), f->mul(b, d)), a) == 0;
                        }
                        const auto bound = branch_zero ? q3 - q2 : q3 - q2 - q;
                        (branch_zero ? min_zero : min_other) = std::min(branch_zero ? min_zero : min_other, w);
                        bad += w < bound;
                    }
        const std::string cond = even ? "f_{1,2} = 0" : "(f_{1,2}/2)^2 - f_{1,1} f_{2,2} + f = 0";
        r.add(record("classifier-l2 q=" + std::to_string(q) + (even ? " even" : " odd") + " branch 1",
                     "f_{12,12} = 1 and " + cond + " implies wt(f) >= q^3 - q^2", "formula", q3 - q2, min_zero,
                     min_zero >= q3 - q2));
        r.add(record("classifier-l2 q=" + std::to_string(q) + (even ? " even" : " odd") + " branch 2",
                     "f_{12,12} = 1 implies wt(f) >= q^3 - q^2 - q", "formula", q3 - q2 - q, min_other,
                     min_other >= q3 - q2 - q));
        r.add(record("classifier-l2 q=" + std::to_string(q) + " all", "every monic-determinant function obeys its branch bound",
                     "enumeration", 0, bad, bad == 0, std::to_string(ipow(q, 4)) + " functions"));
        r.add(record("classifier-l2 q=" + std::to_string(q) + " linear", "f_{12,12} = 0, f != 0 implies wt(f) >= q^3 - q^2",
                     "formula", q3 - q2, lin_min, lin_bad == 0, std::to_string(ipow(q, 4) - 1) + " functions"));
    }
}

void suite_specdet3(const RunOptions& opt, VerificationReport& r) {
    const auto full = pair({0, 1, 2}, {0, 1, 2});
    for (std::uint32_t q : qs(opt, {2, 3})) {
        const FieldSpec f = field_for_order(q);
        const std::uint64_t expect0 = ipow(q, 6) - ipow(q, 5) - ipow(q, 3) + ipow(q, 2);
        const std::uint64_t expectc = ipow(q, 6) - ipow(q, 5) + ipow(q, 2);
        const std::string tag = " q=" + std::to_string(q);
        guarded(r, "specdet3-l3" + tag, "wt(det_{123,123}) = q^6 - q^5 - q^3 + q^2", "formula", expect0, [&] {
            MinorCombination g = MinorCombination::minor(*f, 3, full);
            const auto w0 = weight(g);
            r.add(record("specdet3-l3 det" + tag, "wt(det_{123,123}) = q^6 - q^5 - q^3 + q^2", "formula", expect0, w0,
                         w0 == expect0));
            std::set<std::uint64_t> ws;
            for (Repr c = 1; c < q; ++c) {
                g.set(pair({}, {}), c);
                ws.insert(weight(g));
            }
            r.add(record("specdet3-l3 det+c" + tag, "wt(det_{123,123} + c) = q^6 - q^5 + q^2 for c != 0", "formula",
                         expectc, ws, ws == std::set<std::uint64_t>{expectc}, "all nonzero c"));
        });
        // Cofactor expansion along the last column.
        const Polynomial lhs = expand_to_polynomial(full, *f, 3);
        const Polynomial rhs =
            expand_to_polynomial(pair({0, 1}, {0, 1}), *f, 3) * Polynomial::from_monomial(*f, variable(3, 2, 2)) +
            (expand_to_polynomial(pair({0, 2}, {0, 1}), *f, 3) * Polynomial::from_monomial(*f, variable(3, 1, 2)))
                .scaled(f->neg(1)) +
            expand_to_polynomial(pair({1, 2}, {0, 1}), *f, 3) * Polynomial::from_monomial(*f, variable(3, 0, 2));
        r.add(record("specdet3-l3 cofactor" + tag,
                     "det_{123,123} = det_{12,12} X33 - det_{13,12} X23 + det_{23,12} X13", "formula", true, lhs == rhs,
                     lhs == rhs));
    }
}

void suite_automorphism(const RunOptions& opt, VerificationReport& r) {
    const auto samples = default_samples(opt, 100);
    Rng rng(opt.seed);
    for (auto [ell, q] : grid(opt, {{2, 2}, {2, 3}, {3, 2}, {3, 3}})) {
        const FieldSpec f = field_for_order(q);
        const std::string tag = " " + lq(ell, q);
        guarded(r, "automorphism" + tag, "X -> A^T X A + S preserves C^S(l)", "formula", samples, [&] {
            const LinearCode code = build_generator(ell, f, Variant::symplectic);
            std::uint64_t kept = 0;
            for (std::uint64_t s = 0; s < samples; ++s) {
                const Matrix a = random_invertible(*f, ell, rng);
                const SymMatrix sm = random_symmetric(*f, ell, rng);
                kept += automorphism_check(code, a, sm);
            }
            r.add(record("automorphism" + tag, "X -> A^T X A + S preserves C^S(l)", "formula", samples, kept,
                         kept == samples, "random invertible A and symmetric S"));
            std::optional<std::size_t> failing;
            for (std::size_t j = 1; j < code.n() && !failing; ++j) {
                std::vector<std::size_t> perm(code.n());
                for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
                std::swap(perm[0], perm[j]);
                if (!permutation_preserves(code, perm)) failing = j;
            }
            r.add(record("automorphism swap" + tag, "some coordinate transposition is not an automorphism", "enumeration",
                         "not preserved", failing ? "not preserved" : "preserved", failing.has_value(),
                         failing ? "swap of coordinates 0 and " + std::to_string(*failing) : "no failing swap found"));
        });
    }
}

void suite_puncture(const RunOptions& opt, VerificationReport& r) {
    for (auto [ell, q] : grid(opt, {{2, 2}, {2, 3}, {3, 2}})) {
        const FieldSpec f = field_for_order(q);
        const std::string tag = " " + lq(ell, q);
        guarded(r, "puncture" + tag, "C^A(l) punctured off the symmetric matrices equals C^S(l)", "formula", true, [&] {
            const LinearCode affine = build_generator(ell, f, Variant::affine);
            const LinearCode sym = build_generator(ell, f, Variant::symplectic);
            const auto coords = non_symmetric_coordinates(affine);
            const LinearCode punct = puncture_shorten(affine, coords, PunctureMode::puncture);
            const bool eq = row_space_equal(punct.generator, sym.generator);
            r.add(record("puncture" + tag, "C^A(l) punctured off the symmetric matrices equals C^S(l)", "formula", true,
                         eq, eq, std::to_string(coords.size()) + " coordinates removed"));
            if (ell == 2) {
                const LinearCode sh = puncture_shorten(dual_code(affine), coords, PunctureMode::shorten);
                const bool deq = row_space_equal(sh.generator, dual_code(sym).generator);
                r.add(record("shorten dual" + tag, "C^A(l)^perp shortened off the symmetric matrices equals C^S(l)^perp",
                             "formula", true, deq, deq));
            }
        });
    }
}

void suite_duality(const RunOptions& opt, VerificationReport& r) {
    for (auto [ell, q] : grid(opt, {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}})) {
        const FieldSpec f = field_for_order(q);
        const std::string tag = " " + lq(ell, q);
        const int expected = q == 2 ? 4 : 3;
        const std::string ref = "d(C^S(l)^perp) = 3 for q > 2 and 4 for q = 2";
        guarded(r, "dual distance" + tag, ref, "formula", expected, [&] {
            const LinearCode code = build_generator(ell, f, Variant::symplectic);
            const auto scan = dual_low_weight_scan(code, 4, opt.budget);
            r.add(record("dual distance" + tag, ref, "formula", expected,
                         scan.min_weight ? json(*scan.min_weight) : json(nullptr), scan.min_weight == expected));
            if (q > 2) {
                std::uint64_t ok = 0;
                for (Repr alpha = 2; alpha < q; ++alpha) ok += dual_witness_check(code, alpha_dual_witness(*f, ell, alpha));
                r.add(record("dual witness alpha" + tag,
                             "0, E11, alpha E11 with coefficients c, -alpha/(alpha-1) c, 1/(alpha-1) c is a dual codeword",
                             "formula", q - 2, ok, ok == q - 2, "every alpha outside {0, 1}"));
            } else {
                const bool ok = dual_witness_check(code, even_dual_witness(*f, ell));
                r.add(record("dual witness even" + tag,
                             "0, E11, E12+E21, E11+E12+E21 with unit coefficients is a dual codeword", "formula", true, ok,
                             ok));
            }
            if (ell == 2 && q <= 3) {
                const LinearCode dual = dual_code(code);
                const auto nk = code.n() - catalan(3);
                r.add(record("dual dimension" + tag, "dim C^S(l)^perp = n - Catalan(l+1)", "formula", nk, dual.k(),
                             static_cast<std::uint64_t>(dual.k()) == nk));
            }
            if (ell == 2 && q == 2) {
                const auto primal = weight_enumerator(code, {opt.budget, opt.workers});
                const LinearCode dual = dual_code(code);
                const auto dh = weight_enumerator(dual, {opt.budget, opt.workers});
                const auto mw = macwilliams_transform(*primal.histogram, q, code.k());
                r.add(record("macwilliams" + tag, "dual weight distribution equals the MacWilliams transform", "formula",
                             mw, *dh.histogram, mw == *dh.histogram));
            }
        });
    }
}

void suite_minor_algebra(const RunOptions& opt, VerificationReport& r) {
    Rng rng(opt.seed);
    const auto samples = default_samples(opt, 20);
    for (std::uint32_t q : qs(opt, {2, 3})) {
        const FieldSpec f = field_for_order(q);
        for (int ell : ells(opt, {1, 2, 3, 4})) {
            const std::string tag = " " + lq(ell, q);
            std::set<std::vector<unsigned>> seen;
            std::size_t diagonal = 0;
            const auto pairs = doset_pairs(ell);
            for (const auto& p : pairs) {
                const Monomial lt = leading_term(normal_form(expand_to_polynomial(p, *f, ell)));
                seen.insert(lt.exps);
                Monomial diag{std::vector<unsigned>(static_cast<std::size_t>(ell * ell), 0)};
                for (std::size_t a = 0; a < p.size(); ++a) ++diag.exps[static_cast<std::size_t>(p.rows[a] * ell + p.cols[a])];
                diagonal += lt == diag;
            }
            r.add(record("leading terms distinct" + tag, "distinct doset minors have distinct leading terms mod I_S",
                         "enumeration", pairs.size(), seen.size(), seen.size() == pairs.size()));
            r.add(record("leading term diagonal" + tag,
                         "lt(det_{I,J}) is the product of X_{i_a, j_a} under the lexicographic order", "enumeration",
                         pairs.size(), diagonal, diagonal == pairs.size()));
        }
    }
    for (std::uint32_t q : qs(opt, {2, 3, 4})) {
        const FieldSpec f = field_for_order(q);
        for (int ell : ells(opt, {1, 2})) {
            const auto points = enumerate_symmetric(ell, *f);
            std::uint64_t idem = 0, same = 0;
            for (std::uint64_t s = 0; s < samples; ++s) {
                Polynomial p(*f, ell);
                for (int t = 0; t < 6; ++t) {
                    Monomial m{std::vector<unsigned>(static_cast<std::size_t>(ell * ell))};
                    for (auto& e : m.exps) e = static_cast<unsigned>(rng.gen() % (2 * q + 1));
                    p.add_term(m, rng.elem(q));
                }
                const Polynomial nf = normal_form(p);
                idem += normal_form(nf) == nf;
                bool eq = true;
                for (const auto& x : points) {
                    const Matrix mx = x.to_matrix();
                    eq = eq && p.evaluate(mx) == nf.evaluate(mx);
                }
                same += eq;
            }
            const std::string tag = " " + lq(ell, q);
            r.add(record("normal form idempotent" + tag, "normal_form(normal_form(p)) = normal_form(p)", "enumeration",
                         samples, idem, idem == samples));
            r.add(record("normal form preserves values" + tag, "p and normal_form(p) agree on every symmetric matrix",
                         "enumeration", samples, same, same == samples));
        }
    }
    for (auto [ell, q] : grid(opt, {{2, 2}, {2, 3}, {3, 2}, {3, 3}})) {
        const FieldSpec f = field_for_order(q);
        const std::string tag = " " + lq(ell, q);
        std::uint64_t action = 0, invariant = 0, graded = 0;
        for (std::uint64_t s = 0; s < samples; ++s) {
            const auto any = [](const MinorIndex&) { return std::optional<Repr>(); };
            const MinorCombination g = random_combination(*f, ell, rng, any);
            const AffineCongruence t1{random_invertible(*f, ell, rng), random_symmetric(*f, ell, rng)};
            const AffineCongruence t2{random_invertible(*f, ell, rng), random_symmetric(*f, ell, rng)};
            const MinorCombination step = act(act(g, t1), t2);
            action += step == act(g, AffineCongruence::compose(t1, t2));
            invariant += weight(step) == weight(g);
            const std::size_t size = 1 + static_cast<std::size_t>(rng.gen() % static_cast<std::uint64_t>(ell));
            const MinorCombination h = random_combination(*f, ell, rng, [&](const MinorIndex& p) {
                return p.size() == size ? std::optional<Repr>() : std::optional<Repr>(0);
            });
            const MinorCombination hg = act(h, t1.a, SymMatrix(*f, ell));
            graded += std::all_of(hg.terms().begin(), hg.terms().end(), [&](const auto& kv) { return kv.first.size() == size; });
        }
        r.add(record("act group action" + tag, "acting by T1 then T2 equals acting by their composition", "enumeration",
                     samples, action, action == samples));
        r.add(record("act weight invariant" + tag, "wt(f(A^T X A + S)) = wt(f)", "enumeration", samples, invariant,
                     invariant == samples));
        r.add(record("act grade preserving" + tag, "f in Fl_t implies f(A^T X A) in Fl_t", "enumeration", samples, graded,
                     graded == samples));
    }
}

void suite_dimension(const RunOptions& opt, VerificationReport& r) {
    std::vector<std::pair<int, std::uint32_t>> def;
    for (int ell = 1; ell <= 4; ++ell)
        for (std::uint32_t q : {2u, 3u, 4u, 5u})
            if (ell <= 3 || q <= 3) def.emplace_back(ell, q);
    for (auto [ell, q] : grid(opt, def)) {
        const std::string tag = " " + lq(ell, q);
        const auto cat = catalan(static_cast<unsigned>(ell + 1));
        guarded(r, "dimension" + tag, "dim C^S(l) = Catalan(l+1)", "formula", cat, [&] {
            const LinearCode code = build_generator(ell, field_for_order(q), Variant::symplectic);
            const int k = code_rank(code);
            r.add(record("dimension" + tag, "dim C^S(l) = Catalan(l+1)", "formula", cat, k,
                         static_cast<std::uint64_t>(k) == cat, "rank of the evaluation matrix"));
        });
        json expected = json::array(), computed = json::array();
        const auto pairs = doset_pairs(ell);
        for (int t = 0; t <= ell; ++t) {
            expected.push_back(narayana(static_cast<unsigned>(ell + 1), static_cast<unsigned>(t + 1)));
            computed.push_back(std::count_if(pairs.begin(), pairs.end(),
                                             [t](const MinorIndex& p) { return p.size() == static_cast<std::size_t>(t); }));
        }
        r.add(record("graded dimension" + tag, "#doset pairs of size t = Narayana(l+1, t+1)", "formula", expected,
                     computed, expected == computed));
    }
}

void suite_witness(const RunOptions& opt, VerificationReport& r) {
    std::vector<std::pair<int, std::uint32_t>> def;
    for (int ell : {2, 3})
        for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) def.emplace_back(ell, q);
    def.emplace_back(4, 2);
    def.emplace_back(4, 3);
    for (auto [ell, q] : grid(opt, def)) {
        const std::string tag = " " + lq(ell, q);
        const auto expect = distance_formula(ell, q);
        const std::string ref = "wt(det_{12,12} + det_{1,2}) = q^delta - q^(delta-1) - q^(delta-2)";
        guarded(r, "witness" + tag, ref, "formula", expect, [&] {
            const FieldSpec f = field_for_order(q);
            const auto w = weight(witness_function(*f, ell));
            r.add(record("witness" + tag, ref, "formula", expect, w, w == expect));
        });
    }
}

void suite_fulldet(const RunOptions& opt, VerificationReport& r) {
    const auto samples = default_samples(opt, 10000);
    const auto full = pair({0, 1, 2}, {0, 1, 2});
    const std::string ref = "det_{123,123} maximal in f implies wt(f) >= q^6 - q^5 - q^4 + q^3";
    Rng rng(opt.seed);
    for (std::uint32_t q : qs(opt, {2, 3})) {
        const FieldSpec f = field_for_order(q);
        const std::string tag = " q=" + std::to_string(q);
        const std::uint64_t bound = ipow(q, 6) - ipow(q, 5) - ipow(q, 4) + ipow(q, 3);
        std::uint64_t lowest = UINT64_MAX, below = 0;
        std::optional<MinorCombination> worst;
        for (std::uint64_t s = 0; s < samples; ++s) {
            const MinorCombination g = random_combination(
                *f, 3, rng, [&](const MinorIndex& p) { return p == full ? std::optional<Repr>(1) : std::nullopt; });
            const auto w = weight(g);
            below += w < bound;
            if (w < lowest) {
                lowest = w;
                worst = g;
            }
        }
        r.add(record("fulldet-bound-l3" + tag, ref, "formula", bound, lowest, below == 0,
                     std::to_string(below) + " of " + std::to_string(samples) +
                         " random f below the bound; lowest weight at f = " + to_string(*worst)));
    }
}

void suite_spread(const RunOptions& opt, VerificationReport& r) {
    const auto samples = default_samples(opt, 10000);
    const auto det2 = pair({0, 1}, {0, 1});
    Rng rng(opt.seed);
    for (std::uint32_t q : qs(opt, {2, 3})) {
        const FieldSpec f = field_for_order(q);
        const std::string tag = " q=" + std::to_string(q);
        // w_{2,2}: least weight on 2x2 symmetric matrices with maximal minor det_{12,12}.
        std::uint64_t w22 = UINT64_MAX;
        const auto small = doset_pairs(2);
        const std::uint64_t total = ipow(q, static_cast<unsigned>(small.size() - 1));
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            MinorCombination g(*f, 2);
            std::uint64_t x = idx;
            for (const auto& p : small) {
                if (p == det2) continue;
                g.set(p, static_cast<Repr>(x % q));
                x /= q;
            }
            for (Repr c = 1; c < q; ++c) {
                g.set(det2, c);
                w22 = std::min(w22, weight(g));
            }
        }
        r.add(record("spread-bound w22" + tag, "w_{2,2} = q^3 - q^2 - q", "formula", ipow(q, 3) - ipow(q, 2) - q, w22,
                     w22 == ipow(q, 3) - ipow(q, 2) - q, "exhaustive over l = 2"));
        const std::uint64_t bound = ipow(q, 3) * w22;
        std::uint64_t lowest = UINT64_MAX, below = 0;
        for (std::uint64_t s = 0; s < samples; ++s) {
            MinorCombination g(*f, 3);
            do {
                g = random_combination(*f, 3, rng, [](const MinorIndex& p) {
                    return p.size() == 3 ? std::optional<Repr>(0) : std::nullopt;
                });
            } while (g.max_size() != 2);
            const auto w = weight(g);
            lowest = std::min(lowest, w);
            below += w < bound;
        }
        r.add(record("spread-bound l=3 k=2" + tag, "maximal minor of size k implies wt(f) >= q^((l^2+l-k^2-k)/2) w_{k,k}",
                     "formula", bound, lowest, below == 0, std::to_string(samples) + " random f"));
    }
}

using SuiteFn = void (*)(const RunOptions&, VerificationReport&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> s{
        {"hyperbolic", suite_hyperbolic},
        {"quadratic-system", suite_quadratic_system},
        {"char2-quadratic", suite_char2},
        {"fullrank-count", suite_fullrank},
        {"classifier-l2", suite_classifier},
        {"specdet3-l3", suite_specdet3},
        {"automorphism", suite_automorphism},
        {"puncture", suite_puncture},
        {"duality", suite_duality},
        {"minor-algebra", suite_minor_algebra},
        {"dimension", suite_dimension},
        {"witness", suite_witness},
        {"fulldet-bound-l3", suite_fulldet},
        {"spread-bound", suite_spread},
    };
    return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [n, fn] : suites()) v.push_back(n);
        return v;
    }();
    return names;
}

VerificationReport run_lemma_checks(std::string_view suite, const RunOptions& opt) {
    const auto it = std::find_if(suites().begin(), suites().end(), [&](const auto& s) { return s.first == suite; });
    if (it == suites().end()) throw Error(Errc::unknown_suite, "no suite named '" + std::string(suite) + "'");
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.suite = std::string(suite);
    r.parameters = {{"ell", opt.ell ? json(*opt.ell) : json(nullptr)},
                    {"q_list", opt.q_list},
                    {"budget", opt.budget},
                    {"seed", opt.seed},
                    {"samples", opt.samples}};
    r.workers = std::max(1u, opt.workers);
    it->second(opt, r);
    r.timestamp = utc_now();
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace symgrass
