#include <doctest.h>

#include <set>

#include "symgrass/verifier.hpp"

using namespace symgrass;
using nlohmann::json;

namespace {

const CheckRecord* find(const VerificationReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

json deterministic(const VerificationReport& r) {
    json j = to_json(r);
    j.erase("runtime");
    return j;
}

// 3x3 determinant by the rule of Sarrus, integers mod p.
long long det3(const long long m[3][3], long long p) {
    const long long d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                        m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                        m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return ((d % p) + p) % p;
}

}  // namespace

TEST_CASE("status names") {
    CHECK(status_name(Status::pass) == "pass");
    CHECK(status_name(Status::fail) == "fail");
    CHECK(status_name(Status::skipped_budget) == "skipped-budget");
    for (Status s : {Status::pass, Status::fail, Status::skipped_budget}) CHECK(parse_status(status_name(s)) == s);
    CHECK_THROWS_AS(parse_status("ok"), Error);
}

TEST_CASE("report emit") {
    VerificationReport r;
    r.suite = "empty";
    const json j = json::parse(report_emit(r, Format::json));
    CHECK(j["checks"] == json::array());
    CHECK(j["suite"] == "empty");
    CHECK(j.contains("run_id"));
    CHECK(j.contains("runtime"));
    CHECK(j["summary"]["fail"] == 0);

    CheckRecord c;
    c.name = "one";
    c.reference = "1 = 1";
    c.source = "formula";
    c.expected = 1;
    c.computed = 1;
    r.add(c);
    CHECK(json::parse(report_emit(r, Format::json))["checks"][0]["status"] == "pass");

    CheckRecord s = c;
    s.name = "two";
    s.status = Status::skipped_budget;
    s.computed = nullptr;
    s.required = 500;
    s.budget = 10;
    r.add(s);
    const json j2 = json::parse(report_emit(r, Format::json));
    CHECK(j2["checks"][1]["status"] == "skipped-budget");
    CHECK(j2["checks"][1]["budget"] == 10);
    CHECK(j2["checks"][1]["budget_required"] == 500);
    CHECK(r.ok());

    const std::string csv = report_emit(r, Format::csv);
    CHECK(csv.rfind("name,status,source,expected,computed,discrepancy,reference,detail\n", 0) == 0);
    CHECK(csv.find("two,skipped-budget,formula,1,,") != std::string::npos);
    CHECK(report_emit(r, Format::text).find("1 pass, 0 fail, 1 skipped-budget") != std::string::npos);

    CHECK(parse_format("csv") == Format::csv);
    try {
        parse_format("xml");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::unsupported_format);
    }
}

TEST_CASE("report round trip and run id") {
    VerificationReport r;
    r.suite = "x";
    r.parameters = {{"q_list", {2, 3}}};
    CheckRecord c;
    c.name = "a, \"quoted\"";
    c.expected = json::array({1, 2});
    c.computed = "n/a";
    c.status = Status::fail;
    c.discrepancy = true;
    c.detail = "d";
    r.add(c);
    r.workers = 4;
    const VerificationReport back = report_from_json(to_json(r));
    CHECK(to_json(back) == to_json(r));
    CHECK(!back.ok());
    CHECK(report_emit(r, Format::csv).find("\"a, \"\"quoted\"\"\"") != std::string::npos);

    VerificationReport other = r;
    CHECK(other.run_id() == r.run_id());
    other.parameters["q_list"] = {2};
    CHECK(other.run_id() != r.run_id());
    other = r;
    other.workers = 1;
    CHECK(other.run_id() == r.run_id());
    CHECK_THROWS_AS(report_from_json(json{{"checks", json::array()}}), Error);
}

TEST_CASE("unknown suite") {
    try {
        run_lemma_checks("no-such-suite", {});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::unknown_suite);
    }
    const auto& names = suite_names();
    for (const char* s : {"hyperbolic", "quadratic-system", "char2-quadratic", "fullrank-count", "classifier-l2",
                          "specdet3-l3", "automorphism", "puncture", "duality"})
        CHECK(std::find(names.begin(), names.end(), s) != names.end());
}

TEST_CASE("hyperbolic counts") {
    const FieldSpec f = field_for_order(3);
    CHECK(hyperbolic_count(*f, 0, 0, 0) == 5);
    CHECK(hyperbolic_count(*f, 1, 2, 0) == 5);
    CHECK(hyperbolic_count(*f, 2, 1, 1) == 2);
    CHECK(hyperbolic_count(*f, 0, 0, 2) == 2);
    RunOptions opt;
    opt.q_list = {3};
    const auto r = run_lemma_checks("hyperbolic", opt);
    REQUIRE(r.checks.size() == 1);
    CHECK(r.checks[0].status == Status::pass);
    CHECK(r.checks[0].computed["lambda=0"] == json::array({5}));
    CHECK(r.checks[0].computed["lambda!=0"] == json::array({2}));
}

TEST_CASE("quadratic system bound") {
    // T and -T solve the same instance; nothing else does.
    for (std::uint32_t q : {3u, 5u})
        for (int n = 1; n <= 3; ++n) CHECK(quadratic_system_max(*field_for_order(q), n) == 2);
    CHECK(quadratic_system_max(*field_for_order(2), 2) == 1);
}

TEST_CASE("fullrank-count suite") {
    // Invertible symmetric 3x3 over GF(2), counted directly.
    long long expected = 0;
    for (int bits = 0; bits < 64; ++bits) {
        long long m[3][3];
        int b = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) m[i][j] = m[j][i] = (bits >> b++) & 1;
        expected += det3(m, 2) != 0;
    }
    CHECK(expected == 28);
    RunOptions opt;
    opt.ell = 3;
    opt.q_list = {2};
    const auto r = run_lemma_checks("fullrank-count", opt);
    REQUIRE(r.checks.size() == 1);
    CHECK(r.checks[0].computed == expected);
    CHECK(r.checks[0].expected == expected);
    CHECK(r.ok());
}

TEST_CASE("classifier-l2 suite") {
    RunOptions opt;
    opt.q_list = {2};
    const auto r = run_lemma_checks("classifier-l2", opt);
    CHECK(r.ok());
    const auto* all = find(r, "classifier-l2 q=2 all");
    REQUIRE(all);
    CHECK(all->computed == 0);
    CHECK(all->detail == "16 functions");
}

TEST_CASE("verify tables") {
    RunOptions opt;
    opt.ell = 2;
    opt.q_list = {3, 4};
    const TableRun run = run_verify_tables(opt);
    REQUIRE(run.rows.size() == 2);
    const TableRow& r3 = run.rows[0];
    CHECK(r3.n == 27);
    CHECK(r3.k == 5);
    CHECK(r3.d_formula == 15);
    CHECK(r3.d_exhaustive == std::optional<std::uint64_t>(15));
    CHECK(r3.d_witness == 15);
    CHECK(!r3.discrepancy);
    const TableRow& r4 = run.rows[1];
    CHECK(r4.d_formula == 44);
    CHECK(r4.d_exhaustive == std::optional<std::uint64_t>(44));
    CHECK(r4.d_tabulated == std::optional<std::uint64_t>(95));
    CHECK(r4.discrepancy);
    CHECK(run.report.ok());
    const auto* tab = find(run.report, "tables l=2 q=4 d tabulated");
    REQUIRE(tab);
    CHECK(tab->discrepancy == std::optional<bool>(true));
    CHECK(tab->source == "tabulated");
    const std::string csv = table_csv(run.rows, 2);
    CHECK(csv.find("q,n,k,d_formula,d_exhaustive,d_witness,d_table,discrepancy\n") != std::string::npos);
    CHECK(csv.find("3,27,5,15,15,15,15,no\n") != std::string::npos);
    CHECK(csv.find("4,64,5,44,44,44,95,yes\n") != std::string::npos);

    opt.ell = 3;
    opt.q_list = {2};
    const TableRun l3 = run_verify_tables(opt);
    CHECK(l3.rows[0].n == 64);
    CHECK(l3.rows[0].k == 14);
    CHECK(l3.rows[0].d_exhaustive == std::optional<std::uint64_t>(16));
}

TEST_CASE("budget exhaustion is recorded, not fatal") {
    RunOptions opt;
    opt.ell = 2;
    opt.q_list = {3};
    opt.budget = 10;
    const TableRun run = run_verify_tables(opt);
    const auto* d = find(run.report, "tables l=2 q=3 d exhaustive");
    REQUIRE(d);
    CHECK(d->status == Status::skipped_budget);
    CHECK(d->budget == std::optional<std::uint64_t>(10));
    CHECK(d->required == std::optional<std::uint64_t>(121 * 27));
    CHECK(!run.rows[0].d_exhaustive);
    CHECK(run.rows[0].d_witness == 15);
    CHECK(run.report.ok());
}

TEST_CASE("reports do not depend on worker count") {
    RunOptions opt;
    opt.ell = 3;
    opt.q_list = {2};
    opt.workers = 1;
    const auto a = run_verify_tables(opt).report;
    opt.workers = 3;
    const auto b = run_verify_tables(opt).report;
    CHECK(deterministic(a) == deterministic(b));
    CHECK(to_json(b)["runtime"]["workers"] == 3);

    RunOptions s;
    s.samples = 5;
    s.workers = 1;
    const auto x = run_lemma_checks("automorphism", s);
    s.workers = 2;
    CHECK(deterministic(x) == deterministic(run_lemma_checks("automorphism", s)));
}

TEST_CASE("distance formula and tabulated values") {
    CHECK(distance_formula(2, 2) == 2);
    CHECK(distance_formula(2, 9) == 639);
    CHECK(distance_formula(3, 3) == 405);
    CHECK(distance_formula(4, 2) == 1024 - 512 - 256);
    CHECK(tabulated_distance(2, 9) == std::optional<std::uint64_t>(1199));
    CHECK(tabulated_distance(3, 7) == std::optional<std::uint64_t>(98441));
    CHECK(!tabulated_distance(4, 2));
    // Every l=3 tabulated entry agrees with the formula.
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) CHECK(tabulated_distance(3, q) == distance_formula(3, q));
}
