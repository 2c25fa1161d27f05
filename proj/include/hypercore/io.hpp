#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "hypercore/hypergraph.hpp"

namespace hypercore {

class Group;

// .h3 text format:
//   h3 <n> <m>
//   <u> <v> <w>        (m lines, 0-based, ascending within a line)
//   part <c0> ... <c_{n-1}>   (optional)
Hypergraph3 read_h3(std::istream& in);
void write_h3(std::ostream& out, const Hypergraph3& h);
Hypergraph3 load_h3(const std::string& path);
void save_h3(const std::string& path, const Hypergraph3& h);

nlohmann::json to_json(const Hypergraph3& h);
Hypergraph3 hypergraph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CoreCertificate& c);
nlohmann::json to_json(const ConfigWitness& w);

// .grp format: "grp <m>" then m rows of m entries; row a, column b is a*b.
Group read_grp(std::istream& in);
void write_grp(std::ostream& out, const Group& g);
Group load_grp(const std::string& path);

}  // namespace hypercore
