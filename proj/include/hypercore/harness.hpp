#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypercore/core_search.hpp"
#include "hypercore/hypergraph.hpp"

namespace hypercore {

inline constexpr const char* kVersion = "0.1.0";

struct GeneratorSpec {
    enum class Kind { modular, random_tripartite, random_uniform };
    Kind kind = Kind::random_tripartite;
    std::size_t size = 0;  // p, class size q, or n
    std::size_t m = 0;     // ignored for modular

    static GeneratorSpec modular(std::size_t p) { return {Kind::modular, p, 0}; }
    static GeneratorSpec tripartite(std::size_t q, std::size_t m) { return {Kind::random_tripartite, q, m}; }
    static GeneratorSpec uniform(std::size_t n, std::size_t m) { return {Kind::random_uniform, n, m}; }

    /// "modular", "tripartite" or "uniform".
    std::string name() const;
    std::size_t vertices() const;
    /// Modular hosts ignore the seed.
    Hypergraph3 generate(std::uint64_t seed) const;
    bool seeded() const { return kind != Kind::modular; }
    bool operator==(const GeneratorSpec&) const = default;
};

struct ScanRow {
    std::size_t k = 0;
    std::string generator;
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<std::uint64_t> seeds;
    std::size_t trials = 0;
    std::size_t found = 0;        // core on <= k vertices
    std::size_t found_exact = 0;  // core on exactly k vertices
    std::size_t budget_exhausted = 0;
    /// Every trial ended in an exhaustive `none`.
    bool certified_core_free = false;
    /// Census finder tried alongside the search ("k221", "6core" or "-").
    std::string finder = "-";
    std::size_t finder_success = 0;
    /// Milliseconds; stays 0 unless timing was requested.
    std::uint64_t runtime_ms = 0;
    std::string version = kVersion;
    std::optional<CoreCertificate> witness;

    double fraction() const { return trials == 0 ? 0.0 : static_cast<double>(found) / trials; }
    bool operator==(const ScanRow&) const = default;
};

struct Table1Row {
    std::size_t k = 0;
    std::string status;  // bound, conditional-on-BES, open
    std::string statement;
    bool operator==(const Table1Row&) const = default;
};

/// The published per-k summary for k = 4..15.
std::vector<Table1Row> table1_rows();

struct BoundsReport {
    std::string version = kVersion;
    std::vector<std::uint64_t> seeds;
    std::vector<ScanRow> rows;
    std::vector<Table1Row> table;
    bool operator==(const BoundsReport&) const = default;
};

struct ScanOptions {
    std::uint64_t budget = kDefaultBudget;
    bool timing = false;
    /// Cells run in parallel; 0 reads HYPERCORE_THREADS (default 1).
    unsigned threads = 0;
};

/// One row per grid cell, in grid order. A certified row has every trial
/// exhausted with no budget hit.
std::vector<ScanRow> threshold_scan(std::size_t k, const std::vector<GeneratorSpec>& grid,
                                    const std::vector<std::uint64_t>& seeds, const ScanOptions& opts = {});

/// Cells (k, spec) for several k at once, sharing the worker pool.
std::vector<ScanRow> threshold_scan(const std::vector<std::pair<std::size_t, GeneratorSpec>>& cells,
                                    const std::vector<std::uint64_t>& seeds, const ScanOptions& opts = {});

std::string report_csv(const std::vector<ScanRow>& rows);
nlohmann::json report_json(const BoundsReport& r);

/// Inverse of report_csv; witnesses are not part of the CSV.
std::vector<ScanRow> parse_report_csv(const std::string& text);
BoundsReport parse_report_json(const nlohmann::json& j);

/// Writes csv_path and json_path. Throws std::runtime_error on I/O failure.
void emit_report(const BoundsReport& r, const std::string& csv_path, const std::string& json_path);

unsigned worker_count(unsigned requested);

}  // namespace hypercore
