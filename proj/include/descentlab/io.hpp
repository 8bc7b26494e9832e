#pragma once

// File formats: Brauer character tables and golden idempotent tables are
// JSON; see data/ for the shipped instances.

#include <fstream>

#include <json.hpp>

#include "descentlab/higherlie.hpp"
#include "descentlab/modidem.hpp"

namespace descentlab {

inline Parts parse_parts(const nlohmann::json& j) {
  Parts p;
  for (auto& x : j) p.push_back(x.get<int>());
  return p;
}

// {"p": int, "n": int, "labels": [[parts]], "classes": [[parts]],
//  "values": [[int]]}
inline BrauerTable load_brauer_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open Brauer table: " + path);
  nlohmann::json j;
  in >> j;
  BrauerTable t;
  t.p = j.at("p").get<uint32_t>();
  t.n = j.at("n").get<int>();
  for (auto& row : j.at("labels")) t.labels.push_back(Partition(parse_parts(row)));
  for (auto& row : j.at("classes")) t.classes.push_back(Partition(parse_parts(row)));
  for (auto& row : j.at("values")) {
    std::vector<long long> vals;
    for (auto& x : row) vals.push_back(x.get<long long>());
    t.values.push_back(std::move(vals));
  }
  t.validate();
  return t;
}

inline std::string brauer_table_filename(int p, int n) {
  return "brauer_p" + std::to_string(p) + "_n" + std::to_string(n) + ".json";
}

// Golden idempotent tables: {"p": int, "blocks": {"<n>": {"<partition>":
// {"<composition>": coeff}}}} with partitions/compositions as
// comma-separated part lists.
inline Parts parse_parts_string(const std::string& s) {
  Parts p;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    p.push_back(std::stoi(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  return p;
}

struct GoldenIdempotents {
  uint32_t p = 0;
  // n -> partition -> descent vector
  std::map<int, std::map<Partition, DescentVector<GF>>> blocks;
};

inline GoldenIdempotents load_golden_idempotents(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden table: " + path);
  nlohmann::json j;
  in >> j;
  GoldenIdempotents g;
  g.p = j.at("p").get<uint32_t>();
  GF field(g.p);
  for (auto& [nstr, block] : j.at("blocks").items()) {
    int n = std::stoi(nstr);
    for (auto& [lstr, terms] : block.items()) {
      Partition la(parse_parts_string(lstr));
      DescentVector<GF> v(n);
      for (auto& [qstr, coeff] : terms.items())
        v.add_term(Composition(parse_parts_string(qstr)), field.from_int(coeff.get<long long>()));
      g.blocks[n].emplace(la, std::move(v));
    }
  }
  return g;
}

}  // namespace descentlab
