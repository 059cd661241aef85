#pragma once

// Lattice file format (JSON):
//   { "name": str, "rank": int, "d": int,
//     "basis": [[scalar-string]], "gram": [[rational-string]] }
// At least one of basis/gram must be present; when both are given their
// exact consistency is validated on load.

#include <fstream>
#include <string>

#include <json.hpp>

#include "latshell/lattice.hpp"

namespace latshell {

using json = nlohmann::ordered_json;

inline json lattice_to_json(const Lattice& l) {
  json j;
  j["name"] = l.name();
  j["rank"] = l.rank();
  j["d"] = l.disc();
  if (l.has_coords()) {
    json rows = json::array();
    for (size_t i = 0; i < l.coords()->rows(); ++i) {
      json row = json::array();
      for (size_t c = 0; c < l.coords()->cols(); ++c) row.push_back(to_string((*l.coords())(i, c)));
      rows.push_back(std::move(row));
    }
    j["basis"] = std::move(rows);
  }
  json g = json::array();
  for (size_t i = 0; i < l.rank(); ++i) {
    json row = json::array();
    for (size_t c = 0; c < l.rank(); ++c) row.push_back(to_string(l.gram()(i, c)));
    g.push_back(std::move(row));
  }
  j["gram"] = std::move(g);
  return j;
}

inline Lattice lattice_from_json(const json& j) {
  if (!j.contains("basis") && !j.contains("gram"))
    throw error("lattice file needs at least one of basis/gram");
  std::string name = j.value("name", std::string("unnamed"));

  std::optional<QMat> coords;
  if (j.contains("basis")) {
    const auto& rows = j.at("basis");
    QMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols()) throw error("ragged basis rows");
      for (size_t c = 0; c < m.cols(); ++c)
        m(i, c) = parse_quad(rows[i][c].get<std::string>());
    }
    coords = std::move(m);
  }

  std::optional<RMat> gram;
  if (j.contains("gram")) {
    const auto& rows = j.at("gram");
    RMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols()) throw error("ragged gram rows");
      for (size_t c = 0; c < m.cols(); ++c)
        m(i, c) = parse_rational(rows[i][c].get<std::string>());
    }
    gram = std::move(m);
  }

  if (coords && gram) {
    RMat computed = gram_of_basis(*coords);
    for (size_t i = 0; i < computed.rows(); ++i)
      for (size_t c = 0; c < computed.cols(); ++c)
        if (computed(i, c) != (*gram)(i, c))
          throw error("basis and gram disagree at entry (" + std::to_string(i) + "," +
                      std::to_string(c) + ")");
  }
  if (!gram) gram = gram_of_basis(*coords);

  Lattice l(name, *gram, coords);
  if (j.contains("rank") && j.at("rank").get<size_t>() != l.rank())
    throw error("declared rank does not match matrix size");
  if (j.contains("d") && l.has_coords() && j.at("d").get<int>() != l.disc())
    throw error("declared discriminant does not match basis entries");
  return l;
}

inline void save_lattice(const Lattice& l, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw error("cannot write '" + path + "'");
  out << lattice_to_json(l).dump(2) << "\n";
}

inline Lattice load_lattice(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot read '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw error("malformed lattice file '" + path + "': " + e.what());
  }
  return lattice_from_json(j);
}

}  // namespace latshell
