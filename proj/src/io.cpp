#include "hypercore/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hypercore/constructions.hpp"

namespace hypercore {

namespace {

std::string next_content_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        return line;
    }
    return {};
}

}  // namespace

Hypergraph3 read_h3(std::istream& in) {
    std::istringstream header(next_content_line(in));
    std::string tag;
    long long n = -1, m = -1;
    if (!(header >> tag >> n >> m) || tag != "h3" || n < 0 || m < 0)
        throw std::invalid_argument("h3: expected header 'h3 <n> <m>'");

    std::vector<Triple> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        std::istringstream ls(next_content_line(in));
        long long a, b, c;
        if (!(ls >> a >> b >> c)) throw std::invalid_argument("h3: edge line " + std::to_string(i + 1) + " malformed");
        if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("h3: negative vertex index");
        if (!(a < b && b < c)) throw std::invalid_argument("h3: edge line " + std::to_string(i + 1) + " not ascending");
        edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(c)});
    }

    std::optional<std::vector<int>> partition;
    std::string rest = next_content_line(in);
    if (!rest.empty()) {
        std::istringstream ps(rest);
        ps >> tag;
        if (tag != "part") throw std::invalid_argument("h3: unexpected trailing line '" + rest + "'");
        partition.emplace();
        int c;
        while (ps >> c) partition->push_back(c);
        if (!next_content_line(in).empty()) throw std::invalid_argument("h3: content after part line");
    }
    return Hypergraph3::build(static_cast<std::size_t>(n), std::move(edges), std::move(partition));
}

void write_h3(std::ostream& out, const Hypergraph3& h) {
    out << "h3 " << h.num_vertices() << ' ' << h.num_edges() << '\n';
    for (const auto& t : h.edges()) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    if (h.partition()) {
        out << "part";
        for (int c : *h.partition()) out << ' ' << c;
        out << '\n';
    }
}

Hypergraph3 load_h3(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        nlohmann::json j;
        in >> j;
        return hypergraph_from_json(j);
    }
    return read_h3(in);
}

void save_h3(const std::string& path, const Hypergraph3& h) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_h3(out, h);
    if (!out) throw std::runtime_error("write failed: " + path);
}

nlohmann::json to_json(const Hypergraph3& h) {
    nlohmann::json j;
    j["n"] = h.num_vertices();
    j["edges"] = h.edges();
    j["partition"] = h.partition() ? nlohmann::json(*h.partition()) : nlohmann::json(nullptr);
    return j;
}

Hypergraph3 hypergraph_from_json(const nlohmann::json& j) {
    std::optional<std::vector<int>> partition;
    if (j.contains("partition") && !j["partition"].is_null()) partition = j["partition"].get<std::vector<int>>();
    return Hypergraph3::build(j.at("n").get<std::size_t>(), j.at("edges").get<std::vector<Triple>>(),
                              std::move(partition));
}

nlohmann::json to_json(const CoreCertificate& c) {
    return {{"vertices", c.vertices}, {"edges", c.edges}};
}

nlohmann::json to_json(const ConfigWitness& w) {
    return {{"k", w.k}, {"l", w.l}, {"vertices", w.vertices}, {"edges", w.edges}};
}

Group read_grp(std::istream& in) {
    std::istringstream header(next_content_line(in));
    std::string tag;
    long long m = -1;
    if (!(header >> tag >> m) || tag != "grp" || m <= 0) throw std::invalid_argument("grp: expected header 'grp <m>'");
    std::vector<std::uint32_t> table;
    table.reserve(static_cast<std::size_t>(m * m));
    for (long long a = 0; a < m; ++a) {
        std::istringstream row(next_content_line(in));
        for (long long b = 0; b < m; ++b) {
            long long x;
            if (!(row >> x)) throw std::invalid_argument("grp: row " + std::to_string(a) + " too short");
            if (x < 0 || x >= m) throw std::invalid_argument("grp: entry out of range in row " + std::to_string(a));
            table.push_back(static_cast<std::uint32_t>(x));
        }
    }
    return Group::from_table(static_cast<std::size_t>(m), std::move(table));
}

void write_grp(std::ostream& out, const Group& g) {
    out << "grp " << g.order() << '\n';
    for (std::uint32_t a = 0; a < g.order(); ++a) {
        for (std::uint32_t b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.mul(a, b);
        out << '\n';
    }
}

Group load_grp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_grp(in);
}

}  // namespace hypercore
