#include "hypercore/harness.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hypercore/census.hpp"
#include "hypercore/constructions.hpp"
#include "hypercore/io.hpp"

namespace hypercore {

std::string GeneratorSpec::name() const {
    switch (kind) {
        case Kind::modular: return "modular";
        case Kind::random_tripartite: return "tripartite";
        case Kind::random_uniform: return "uniform";
    }
    return "?";
}

std::size_t GeneratorSpec::vertices() const {
    return kind == Kind::random_uniform ? size : 3 * size;
}

Hypergraph3 GeneratorSpec::generate(std::uint64_t seed) const {
    switch (kind) {
        case Kind::modular: return modular_construction(static_cast<std::uint32_t>(size));
        case Kind::random_tripartite: return random_tripartite(size, m, seed);
        case Kind::random_uniform: return random_uniform(size, m, seed);
    }
    throw std::logic_error("unknown generator");
}

std::vector<Table1Row> table1_rows() {
    return {
        {4, "bound", "0.2857 C(n,3) <= core*(n,4) <= 0.2871 C(n,3)"},
        {5, "bound", "core*(n,5) = Theta(n^{5/2})"},
        {6, "bound", "core*(n,6) = Theta(n^2)"},
        {7, "bound", "core*(n,7) = Theta(n^2)"},
        {8, "bound", "core*(n,8) = Theta(n^2)"},
        {9, "conditional-on-BES", "core*(n,9) = o(n^2) implies BES(l=6)"},
        {10, "bound", "core*(n,10) = Omega(n^2)"},
        {11, "conditional-on-BES", "core*(n,11) = o(n^2) implies BES(l=8)"},
        {12, "open", "core*(n,12) = o(n^2) for some triple systems"},
        {13, "conditional-on-BES", "core*(n,13) = o(n^2) implies BES(l=10)"},
        {14, "open", "conj. core*(n,14) = o(n^2)"},
        {15, "bound", "core*(n,15) = o(n^2)"},
    };
}

unsigned worker_count(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("HYPERCORE_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return static_cast<unsigned>(t);
    }
    return 1;
}

namespace {

ScanRow run_cell(std::size_t k, const GeneratorSpec& spec, const std::vector<std::uint64_t>& seeds,
                 const ScanOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    ScanRow row;
    row.k = k;
    row.generator = spec.name() + "(" + std::to_string(spec.size) + ")";
    row.n = spec.vertices();
    row.seeds = seeds;
    if (k == 5) row.finder = "k221";
    if (k == 6) row.finder = "6core";

    std::vector<std::uint64_t> trial_seeds = seeds;
    if (!spec.seeded()) trial_seeds = {0};
    if (seeds.empty()) trial_seeds.clear();

    MinCoreOptions mo;
    mo.budget = opts.budget;
    mo.threads = 1;
    for (std::uint64_t s : trial_seeds) {
        Hypergraph3 h = spec.generate(s);
        row.m = h.num_edges();
        ++row.trials;
        auto r = min_core(h, k, mo);
        if (r.status == SearchStatus::budget_exhausted) ++row.budget_exhausted;
        if (r.status == SearchStatus::found) {
            ++row.found;
            if (!row.witness) row.witness = r.core;
            MinCoreOptions exact = mo;
            exact.exact_size = true;
            auto e = min_core(h, k, exact);
            if (e.status == SearchStatus::found) ++row.found_exact;
            if (e.status == SearchStatus::budget_exhausted) ++row.budget_exhausted;
        }
        if (row.finder == "k221" && find_k221(h)) ++row.finder_success;
        if (row.finder == "6core" && find_6core(h)) ++row.finder_success;
    }
    if (spec.kind != GeneratorSpec::Kind::modular && trial_seeds.empty()) row.m = spec.m;
    row.certified_core_free = row.trials > 0 && row.found == 0 && row.budget_exhausted == 0;
    if (opts.timing)
        row.runtime_ms = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    return row;
}

}  // namespace

std::vector<ScanRow> threshold_scan(const std::vector<std::pair<std::size_t, GeneratorSpec>>& cells,
                                    const std::vector<std::uint64_t>& seeds, const ScanOptions& opts) {
    std::vector<ScanRow> rows(cells.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto work = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            try {
                rows[i] = run_cell(cells[i].first, cells[i].second, seeds, opts);
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    unsigned threads = std::min<unsigned>(worker_count(opts.threads), static_cast<unsigned>(cells.size()));
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

std::vector<ScanRow> threshold_scan(std::size_t k, const std::vector<GeneratorSpec>& grid,
                                    const std::vector<std::uint64_t>& seeds, const ScanOptions& opts) {
    std::vector<std::pair<std::size_t, GeneratorSpec>> cells;
    for (const auto& g : grid) cells.emplace_back(k, g);
    return threshold_scan(cells, seeds, opts);
}

// ---------------------------------------------------------------------------
// Report I/O

namespace {

const char* kCsvHeader =
    "k,generator,n,m,seeds,trials,found,found_exact,budget_exhausted,certified_core_free,fraction,finder,"
    "finder_success,runtime_ms,version";

std::string join_seeds(const std::vector<std::uint64_t>& seeds) {
    std::string s;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(seeds[i]);
    }
    return s;
}

std::vector<std::uint64_t> split_seeds(const std::string& s) {
    std::vector<std::uint64_t> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ';'))
        if (!tok.empty()) out.push_back(std::stoull(tok));
    return out;
}

std::string fixed6(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

}  // namespace

std::string report_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.k << ',' << r.generator << ',' << r.n << ',' << r.m << ',' << join_seeds(r.seeds) << ',' << r.trials
            << ',' << r.found << ',' << r.found_exact << ',' << r.budget_exhausted << ','
            << (r.certified_core_free ? 1 : 0) << ',' << fixed6(r.fraction()) << ',' << r.finder << ','
            << r.finder_success << ',' << r.runtime_ms << ',' << r.version << '\n';
    }
    return out.str();
}

std::vector<ScanRow> parse_report_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) throw std::invalid_argument("report csv: bad header");
    std::vector<ScanRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) f.push_back(cell);
        if (f.size() != 15) throw std::invalid_argument("report csv: expected 15 fields");
        ScanRow r;
        r.k = std::stoul(f[0]);
        r.generator = f[1];
        r.n = std::stoul(f[2]);
        r.m = std::stoul(f[3]);
        r.seeds = split_seeds(f[4]);
        r.trials = std::stoul(f[5]);
        r.found = std::stoul(f[6]);
        r.found_exact = std::stoul(f[7]);
        r.budget_exhausted = std::stoul(f[8]);
        r.certified_core_free = f[9] == "1";
        r.finder = f[11];
        r.finder_success = std::stoul(f[12]);
        r.runtime_ms = std::stoull(f[13]);
        r.version = f[14];
        rows.push_back(std::move(r));
    }
    return rows;
}

nlohmann::json report_json(const BoundsReport& r) {
    nlohmann::json j;
    j["version"] = r.version;
    j["seeds"] = r.seeds;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : r.rows) {
        nlohmann::json x;
        x["k"] = row.k;
        x["generator"] = row.generator;
        x["n"] = row.n;
        x["m"] = row.m;
        x["seeds"] = row.seeds;
        x["trials"] = row.trials;
        x["found"] = row.found;
        x["found_exact"] = row.found_exact;
        x["budget_exhausted"] = row.budget_exhausted;
        x["certified_core_free"] = row.certified_core_free;
        x["fraction"] = fixed6(row.fraction());
        x["finder"] = row.finder;
        x["finder_success"] = row.finder_success;
        x["runtime_ms"] = row.runtime_ms;
        x["version"] = row.version;
        x["witness"] = row.witness ? to_json(*row.witness) : nlohmann::json(nullptr);
        j["rows"].push_back(std::move(x));
    }
    j["table"] = nlohmann::json::array();
    for (const auto& t : r.table) j["table"].push_back({{"k", t.k}, {"status", t.status}, {"statement", t.statement}});
    return j;
}

BoundsReport parse_report_json(const nlohmann::json& j) {
    BoundsReport r;
    r.version = j.at("version").get<std::string>();
    r.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    for (const auto& x : j.at("rows")) {
        ScanRow row;
        row.k = x.at("k").get<std::size_t>();
        row.generator = x.at("generator").get<std::string>();
        row.n = x.at("n").get<std::size_t>();
        row.m = x.at("m").get<std::size_t>();
        row.seeds = x.at("seeds").get<std::vector<std::uint64_t>>();
        row.trials = x.at("trials").get<std::size_t>();
        row.found = x.at("found").get<std::size_t>();
        row.found_exact = x.at("found_exact").get<std::size_t>();
        row.budget_exhausted = x.at("budget_exhausted").get<std::size_t>();
        row.certified_core_free = x.at("certified_core_free").get<bool>();
        row.finder = x.at("finder").get<std::string>();
        row.finder_success = x.at("finder_success").get<std::size_t>();
        row.runtime_ms = x.at("runtime_ms").get<std::uint64_t>();
        row.version = x.at("version").get<std::string>();
        if (!x.at("witness").is_null())
            row.witness = CoreCertificate::from_edges(x["witness"].at("edges").get<std::vector<Triple>>());
        r.rows.push_back(std::move(row));
    }
    for (const auto& t : j.at("table"))
        r.table.push_back({t.at("k").get<std::size_t>(), t.at("status").get<std::string>(),
                           t.at("statement").get<std::string>()});
    return r;
}

void emit_report(const BoundsReport& r, const std::string& csv_path, const std::string& json_path) {
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot write " + csv_path);
    csv << report_csv(r.rows);
    if (!csv) throw std::runtime_error("write failed: " + csv_path);
    std::ofstream js(json_path);
    if (!js) throw std::runtime_error("cannot write " + json_path);
    js << report_json(r).dump(2) << '\n';
    if (!js) throw std::runtime_error("write failed: " + json_path);
}

}  // namespace hypercore
