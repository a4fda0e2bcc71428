// Exhaustive codeword enumeration.
//
// Messages are split into blocks by their leading coordinate (fixed to 1); the
// remaining r coordinates run through the modular q-ary Gray sequence
// g_i = (t_i - t_{i+1}) mod q, in which step t -> t+1 adds 1 to exactly one
// digit. Consecutive codewords therefore differ by one scaled generator row.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstring>
#include <thread>

#include "symgrass/code_engine.hpp"

namespace symgrass {

namespace {

using Sym = std::uint8_t;

enum class AddKind { prime, xor2, table };

struct Engine {
    const Field* f;
    std::uint32_t q;
    int k;
    std::size_t n;
    AddKind kind;
    std::vector<Sym> add_tab;                 // q*q, table kind only
    std::vector<std::vector<Sym>> rows;       // k rows of n symbols
    std::vector<Repr> delta;                  // delta[v] = e(v+1) - e(v)
    std::vector<int> delta_slot;              // v -> index into scaled
    std::vector<std::vector<std::vector<Sym>>> scaled;  // [slot][row] = delta * row

    Engine(const LinearCode& code) : f(code.field.get()), q(f->order()), k(code.k()), n(code.n()) {
        if (q > 256) throw Error(Errc::degree_out_of_range, "exhaustive search supports q <= 256");
        kind = f->is_prime_field() ? AddKind::prime : f->p() == 2 ? AddKind::xor2 : AddKind::table;
        if (kind == AddKind::table) {
            add_tab.resize(static_cast<std::size_t>(q) * q);
            for (Repr a = 0; a < q; ++a)
                for (Repr b = 0; b < q; ++b) add_tab[a * q + b] = static_cast<Sym>(f->add(a, b));
        }
        rows.assign(static_cast<std::size_t>(k), std::vector<Sym>(n));
        for (int r = 0; r < k; ++r)
            for (std::size_t j = 0; j < n; ++j) rows[static_cast<std::size_t>(r)][j] = static_cast<Sym>(code.generator(r, static_cast<int>(j)));
        delta.resize(q);
        delta_slot.resize(q);
        std::vector<Repr> distinct;
        for (Repr v = 0; v < q; ++v) {
            delta[v] = f->sub((v + 1) % q, v);
            auto it = std::find(distinct.begin(), distinct.end(), delta[v]);
            delta_slot[v] = static_cast<int>(it - distinct.begin());
            if (it == distinct.end()) distinct.push_back(delta[v]);
        }
        for (Repr c : distinct) {
            std::vector<std::vector<Sym>> s(static_cast<std::size_t>(k), std::vector<Sym>(n));
            for (int r = 0; r < k; ++r)
                for (std::size_t j = 0; j < n; ++j)
                    s[static_cast<std::size_t>(r)][j] = static_cast<Sym>(f->mul(c, rows[static_cast<std::size_t>(r)][j]));
            scaled.push_back(std::move(s));
        }
    }

    // c += s; returns the weight of the result.
    std::uint32_t add_count(Sym* __restrict c, const Sym* __restrict s) const {
        std::uint32_t w = 0;
        switch (kind) {
        case AddKind::prime: {
            const Sym p = static_cast<Sym>(q);
            for (std::size_t j = 0; j < n; ++j) {
                const Sym ps = static_cast<Sym>(p - s[j]);
                const Sym v = c[j] >= ps ? static_cast<Sym>(c[j] - ps) : static_cast<Sym>(c[j] + s[j]);
                c[j] = v;
                w += v != 0;
            }
            break;
        }
        case AddKind::xor2:
            for (std::size_t j = 0; j < n; ++j) {
                const Sym v = static_cast<Sym>(c[j] ^ s[j]);
                c[j] = v;
                w += v != 0;
            }
            break;
        case AddKind::table:
            for (std::size_t j = 0; j < n; ++j) {
                const Sym v = add_tab[c[j] * q + s[j]];
                c[j] = v;
                w += v != 0;
            }
            break;
        }
        return w;
    }

    std::uint32_t count(const Sym* c) const {
        std::uint32_t w = 0;
        for (std::size_t j = 0; j < n; ++j) w += c[j] != 0;
        return w;
    }
};

struct Block {
    int lead;
    int free;                 // number of Gray digits, k - 1 - lead
    std::uint64_t size;       // q^free
    std::uint64_t offset;     // global index of its first message
};

void gray_digits(std::uint64_t t, std::uint32_t q, std::vector<Repr>& g) {
    std::vector<Repr> digits(g.size());
    for (auto& d : digits) {
        d = static_cast<Repr>(t % q);
        t /= q;
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Repr next = i + 1 < g.size() ? digits[i + 1] : 0;
        g[i] = (digits[i] + q - next) % q;
    }
}

std::vector<Repr> message_of(const std::vector<Block>& blocks, std::uint64_t global, int k, std::uint32_t q) {
    for (const Block& b : blocks) {
        if (global >= b.offset + b.size) continue;
        std::vector<Repr> g(static_cast<std::size_t>(b.free));
        gray_digits(global - b.offset, q, g);
        std::vector<Repr> m(static_cast<std::size_t>(k), 0);
        m[static_cast<std::size_t>(b.lead)] = 1;
        for (int i = 0; i < b.free; ++i) m[static_cast<std::size_t>(b.lead + 1 + i)] = g[static_cast<std::size_t>(i)];
        return m;
    }
    return {};
}

struct Task {
    std::size_t block;
    std::uint64_t begin, end;
};

struct TaskResult {
    std::uint64_t best_weight = UINT64_MAX;
    std::uint64_t best_index = UINT64_MAX;
    std::vector<std::uint64_t> hist;
};

void run_task(const Engine& e, const Block& b, const Task& task, bool want_hist, TaskResult& out) {
    const Field& f = *e.f;
    std::vector<Repr> g(static_cast<std::size_t>(b.free));
    gray_digits(task.begin, e.q, g);
    std::vector<Sym> cw(e.rows[static_cast<std::size_t>(b.lead)]);
    for (int i = 0; i < b.free; ++i) {
        const Repr c = g[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const auto& row = e.rows[static_cast<std::size_t>(b.lead + 1 + i)];
        for (std::size_t j = 0; j < e.n; ++j) cw[j] = static_cast<Sym>(f.add(cw[j], f.mul(c, row[j])));
    }
    if (want_hist) out.hist.assign(e.n + 1, 0);

    auto record = [&](std::uint64_t w, std::uint64_t t) {
        if (want_hist) ++out.hist[w];
        if (w != 0 && w < out.best_weight) {
            out.best_weight = w;
            out.best_index = b.offset + t;
        }
    };
    record(e.count(cw.data()), task.begin);
    for (std::uint64_t t = task.begin + 1; t < task.end; ++t) {
        // Digit that changes: number of trailing (q-1) digits of t-1.
        std::uint64_t prev = t - 1;
        int d = 0;
        while (prev % e.q == e.q - 1) {
            prev /= e.q;
            ++d;
        }
        Repr& v = g[static_cast<std::size_t>(d)];
        const auto& s = e.scaled[static_cast<std::size_t>(e.delta_slot[v])][static_cast<std::size_t>(b.lead + 1 + d)];
        v = (v + 1) % e.q;
        record(e.add_count(cw.data(), s.data()), t);
    }
}

struct SearchResult {
    std::uint64_t best_weight = UINT64_MAX;
    std::uint64_t best_index = UINT64_MAX;
    std::vector<std::uint64_t> hist;
    std::uint64_t visited = 0;
    std::vector<Block> blocks;
};

SearchResult search(const LinearCode& code, unsigned workers, bool want_hist) {
    const Engine e(code);
    SearchResult res;
    std::uint64_t offset = 0;
    for (int lead = 0; lead < e.k; ++lead) {
        const int free = e.k - 1 - lead;
        const std::uint64_t size = sat_pow(e.q, static_cast<unsigned>(free));
        res.blocks.push_back({lead, free, size, offset});
        offset += size;
    }
    res.visited = offset;
    workers = std::max(1u, workers);
    const std::uint64_t chunk = std::max<std::uint64_t>(4096, offset / (static_cast<std::uint64_t>(workers) * 64));
    std::vector<Task> tasks;
    for (std::size_t bi = 0; bi < res.blocks.size(); ++bi)
        for (std::uint64_t t = 0; t < res.blocks[bi].size; t += chunk)
            tasks.push_back({bi, t, std::min(res.blocks[bi].size, t + chunk)});

    std::vector<TaskResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();)
            run_task(e, res.blocks[tasks[i].block], tasks[i], want_hist, results[i]);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    if (want_hist) res.hist.assign(e.n + 1, 0);
    for (const TaskResult& r : results) {
        if (r.best_weight < res.best_weight || (r.best_weight == res.best_weight && r.best_index < res.best_index)) {
            res.best_weight = r.best_weight;
            res.best_index = r.best_index;
        }
        if (want_hist)
            for (std::size_t w = 0; w <= e.n; ++w) res.hist[w] += r.hist[w];
    }
    return res;
}

WeightReport base_report(const LinearCode& code, unsigned workers) {
    WeightReport r;
    r.ell = code.ell;
    r.q = code.field->order();
    r.n = code.n();
    r.k = code.k();
    r.workers = std::max(1u, workers);
    return r;
}

}  // namespace

WeightReport min_distance_exhaustive(const LinearCode& code, const SearchOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    const std::uint32_t q = code.field->order();
    const std::uint64_t lines = (sat_pow(q, static_cast<unsigned>(code.k())) - 1) / (q - 1);
    const std::uint64_t cost = sat_mul(lines, code.n());
    if (cost > opt.budget) throw BudgetExceeded(cost, opt.budget, "exhaustive minimum distance");
    WeightReport r = base_report(code, opt.workers);
    if (code.k() == 0) throw Error(Errc::empty_result, "code has dimension 0");
    const SearchResult s = search(code, opt.workers, false);
    if (s.best_weight == UINT64_MAX) throw Error(Errc::empty_result, "every codeword is zero");
    r.d = s.best_weight;
    r.witness = message_of(s.blocks, s.best_index, code.k(), q);
    r.enumerated = s.visited;
    r.exhaustive = true;
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

WeightReport weight_enumerator(const LinearCode& code, const SearchOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    const std::uint32_t q = code.field->order();
    const std::uint64_t cost = sat_mul(sat_pow(q, static_cast<unsigned>(code.k())), code.n());
    if (cost > opt.budget) throw BudgetExceeded(cost, opt.budget, "weight enumerator");
    WeightReport r = base_report(code, opt.workers);
    std::vector<std::uint64_t> hist(code.n() + 1, 0);
    hist[0] = 1;
    if (code.k() > 0) {
        const SearchResult s = search(code, opt.workers, true);
        for (std::size_t w = 0; w < s.hist.size(); ++w) hist[w] += s.hist[w] * (q - 1);
        if (s.best_weight != UINT64_MAX) {
            r.d = s.best_weight;
            r.witness = message_of(s.blocks, s.best_index, code.k(), q);
        }
        r.enumerated = s.visited;
    }
    r.histogram = std::move(hist);
    r.exhaustive = true;
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace symgrass
