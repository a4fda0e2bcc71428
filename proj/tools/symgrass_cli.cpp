// symgrass: command-line front end for the code library and verification suites.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "symgrass/verifier.hpp"

using namespace symgrass;
using nlohmann::json;

namespace {

struct Common {
    int ell = 2;
    std::uint32_t q = 2;
    unsigned workers = 1;
    std::uint64_t budget = default_budget();
    std::string out;
};

void add_lq(CLI::App* cmd, Common& c) {
    cmd->add_option("--ell", c.ell, "matrix size l")->required()->check(CLI::Range(1, 8));
    cmd->add_option("--q", c.q, "field order (prime power)")->required();
}

void add_run(CLI::App* cmd, Common& c) {
    cmd->add_option("--workers", c.workers, "worker threads")->check(CLI::Range(1u, 1024u));
    cmd->add_option("--budget", c.budget, "work budget for exhaustive operations");
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(out);
    if (!os) throw Error(Errc::parse_error, "cannot write " + out);
    os << text;
}

std::string read_file(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream is(path);
    if (!is) throw Error(Errc::parse_error, "cannot read " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

MinorCombination witness_of(const Field& f, int ell) {
    MinorCombination g = MinorCombination::minor(f, ell, {{0, 1}, {0, 1}});
    g.set({{0}, {1}}, 1);
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Affine symplectic Grassmann codes: construction and verification"};
    app.require_subcommand(1);
    Common c;
    std::string variant = "symplectic", format = "json", input, suite, table_csv_path, function_path, matrix_path;
    bool exhaustive = false;
    int wmax = 4;
    std::vector<std::uint32_t> q_list;
    std::uint64_t seed = 1, samples = 0;
    int check_ell = 0;

    auto* params = app.add_subcommand("params", "code parameters n, k and d from the closed formulas");
    add_lq(params, c);

    auto* gen = app.add_subcommand("gen", "write a generator matrix");
    add_lq(gen, c);
    gen->add_option("--variant", variant, "symplectic | affine");
    gen->add_option("--out", c.out, "output file (default stdout)");

    auto* mindist = app.add_subcommand("mindist", "minimum distance (witness weight, or exact with --exhaustive)");
    add_lq(mindist, c);
    add_run(mindist, c);
    mindist->add_flag("--exhaustive", exhaustive, "exhaustive projective search");
    mindist->add_option("--out", c.out);

    auto* wenum = app.add_subcommand("wenum", "full weight enumerator");
    add_lq(wenum, c);
    add_run(wenum, c);
    wenum->add_option("--out", c.out);

    auto* dualmin = app.add_subcommand("dualmin", "least dual weight up to wmax");
    add_lq(dualmin, c);
    dualmin->add_option("--wmax", wmax, "largest weight scanned")->check(CLI::Range(1, 4));
    dualmin->add_option("--budget", c.budget);
    dualmin->add_option("--out", c.out);

    auto* tables = app.add_subcommand("verify-tables", "parameter tables against formula, search and published values");
    tables->add_option("--ell", c.ell)->check(CLI::Range(2, 8));
    tables->add_option("--q-list", q_list, "field orders")->delimiter(',');
    add_run(tables, c);
    tables->add_option("--format", format, "json | csv | text");
    tables->add_option("--table-csv", table_csv_path, "also write the parameter table as CSV");
    tables->add_option("--out", c.out);

    auto* check = app.add_subcommand("check", "run a verification suite");
    check->add_option("--suite", suite, "suite name")->required();
    check->add_option("--ell", check_ell, "restrict to one l");
    check->add_option("--q-list", q_list, "field orders")->delimiter(',');
    check->add_option("--seed", seed);
    check->add_option("--samples", samples, "random samples per configuration");
    add_run(check, c);
    check->add_option("--format", format, "json | csv | text");
    check->add_option("--out", c.out);

    auto* report = app.add_subcommand("report", "re-serialize a JSON verification report");
    report->add_option("--in", input, "report file (default stdin)");
    report->add_option("--format", format, "json | csv | text")->required();
    report->add_option("--out", c.out);

    auto* weight_cmd = app.add_subcommand("weight", "weight of a minor combination");
    add_lq(weight_cmd, c);
    weight_cmd->add_option("--function", function_path, "combination file, lines I|J|coeff")->required();

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a minor combination at a symmetric matrix");
    eval_cmd->add_option("--function", function_path)->required();
    eval_cmd->add_option("--matrix", matrix_path, "matrix file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*params) {
            const FieldSpec f = field_for_order(c.q);
            json j = {{"ell", c.ell},
                      {"q", c.q},
                      {"n", symmetric_count(c.ell, c.q)},
                      {"k", catalan(static_cast<unsigned>(c.ell + 1))},
                      {"d", distance_formula(c.ell, c.q)}};
            const auto t = tabulated_distance(c.ell, c.q);
            j["d_table"] = t ? json(*t) : json(nullptr);
            emit(j.dump(2) + "\n", c.out);
        } else if (*gen) {
            const LinearCode code = build_generator(c.ell, field_for_order(c.q), parse_variant(variant));
            std::ostringstream os;
            write_generator(os, code);
            emit(os.str(), c.out);
        } else if (*mindist) {
            const FieldSpec f = field_for_order(c.q);
            const LinearCode code = build_generator(c.ell, f, Variant::symplectic);
            WeightReport r;
            if (exhaustive) {
                r = min_distance_exhaustive(code, {c.budget, c.workers});
            } else {
                if (c.ell < 2) throw Error(Errc::shape_mismatch, "witness needs l >= 2; use --exhaustive");
                const MinorCombination w = witness_of(*f, c.ell);
                r.ell = c.ell;
                r.q = c.q;
                r.n = code.n();
                r.k = code.k();
                r.d = weight(w);
                r.witness.assign(static_cast<std::size_t>(code.k()), 0);
                for (const auto& [p, v] : w.terms()) {
                    const auto it = std::find(code.row_labels.begin(), code.row_labels.end(), p);
                    r.witness[static_cast<std::size_t>(it - code.row_labels.begin())] = v;
                }
                r.workers = c.workers;
            }
            emit(to_json(r).dump(2) + "\n", c.out);
        } else if (*wenum) {
            const LinearCode code = build_generator(c.ell, field_for_order(c.q), Variant::symplectic);
            emit(to_json(weight_enumerator(code, {c.budget, c.workers})).dump(2) + "\n", c.out);
        } else if (*dualmin) {
            const LinearCode code = build_generator(c.ell, field_for_order(c.q), Variant::symplectic);
            const auto s = dual_low_weight_scan(code, wmax, c.budget);
            json j = {{"ell", c.ell}, {"q", c.q}, {"wmax", wmax}};
            j["min_weight"] = s.min_weight ? json(*s.min_weight) : json(nullptr);
            json labels = json::array();
            for (auto col : s.support) labels.push_back(code.column_labels[col]);
            j["support"] = labels;
            j["coefficients"] = s.coefficients;
            emit(j.dump(2) + "\n", c.out);
        } else if (*tables) {
            const Format fmt = parse_format(format);
            RunOptions opt;
            opt.ell = c.ell;
            opt.q_list = q_list;
            opt.budget = c.budget;
            opt.workers = c.workers;
            const TableRun run = run_verify_tables(opt);
            if (!table_csv_path.empty()) emit(table_csv(run.rows, c.ell), table_csv_path);
            emit(report_emit(run.report, fmt), c.out);
            return run.report.ok() ? 0 : 1;
        } else if (*check) {
            const Format fmt = parse_format(format);
            RunOptions opt;
            if (check_ell > 0) opt.ell = check_ell;
            opt.q_list = q_list;
            opt.budget = c.budget;
            opt.workers = c.workers;
            opt.seed = seed;
            opt.samples = samples;
            const VerificationReport r = run_lemma_checks(suite, opt);
            emit(report_emit(r, fmt), c.out);
            return r.ok() ? 0 : 1;
        } else if (*report) {
            const Format fmt = parse_format(format);
            json j;
            try {
                j = json::parse(read_file(input));
            } catch (const json::parse_error& e) {
                throw Error(Errc::parse_error, e.what());
            }
            const VerificationReport r = report_from_json(j);
            emit(report_emit(r, fmt), c.out);
            return r.ok() ? 0 : 1;
        } else if (*weight_cmd) {
            const FieldSpec f = field_for_order(c.q);
            std::istringstream is(read_file(function_path));
            const MinorCombination g = read_combination(is, *f, c.ell);
            std::cout << json{{"ell", c.ell}, {"q", c.q}, {"weight", weight(g)}}.dump() << '\n';
        } else if (*eval_cmd) {
            std::istringstream ms(read_file(matrix_path));
            const MatrixFile m = read_matrix(ms);
            std::istringstream fs(read_file(function_path));
            const MinorCombination g = read_combination(fs, *m.field, m.matrix.rows());
            std::cout << evaluate(g, SymMatrix::from_matrix(m.matrix)) << '\n';
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
