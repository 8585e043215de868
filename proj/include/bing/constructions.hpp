#pragma once

#include <algorithm>
#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bing/complex_ops.hpp"
#include "bing/homology.hpp"
#include "bing/house2d.hpp"
#include "bing/io.hpp"
#include "bing/y3.hpp"

namespace bing {

/// Codimension-one faces of a pure complex with exactly one coface.
inline SimplicialComplex boundary_complex(const SimplicialComplex& k) {
  std::vector<Simplex> out;
  if (k.dim() < 1) return {};
  auto co = cofaces(k, k.dim() - 1);
  for (std::size_t i = 0; i < co.size(); ++i)
    if (co[i].size() == 1) out.push_back(k.simplices(k.dim() - 1)[i]);
  return SimplicialComplex::from_tops(out);
}

/// Genera of the boundary components of a 3-complex whose boundary is a
/// closed orientable surface; -1 marks a component that is not one.
inline std::vector<long> boundary_genera(const SimplicialComplex& k) {
  auto b = boundary_complex(k);
  std::vector<long> g;
  if (b.empty()) return g;
  auto [comp, n] = components(b);
  std::vector<std::vector<Simplex>> parts(static_cast<std::size_t>(n));
  std::map<int, int> of;
  for (std::size_t i = 0; i < b.vertices().size(); ++i) of[b.vertices()[i].id] = comp[i];
  for (const auto& t : b.simplices(2)) parts[static_cast<std::size_t>(of[t[0]])].push_back(t);
  for (const auto& p : parts) {
    auto info = classify_surface(SimplicialComplex::from_tops(p));
    g.push_back(info.is_surface && info.closed && info.orientable ? (2 - info.euler) / 2 : -1);
  }
  std::sort(g.begin(), g.end());
  return g;
}

struct PieceInventory {
  std::map<std::string, SimplicialComplex> pieces;
  std::map<std::string, std::map<std::string, SimplicialComplex>> boundary_markings;
};

inline PieceInventory piece_inventory(const SimplicialComplex& y) {
  if (!y.top_labels()) throw TopologyError("complex carries no piece labels");
  std::map<std::string, std::vector<Simplex>> tops;
  const auto& labels = *y.top_labels();
  for (std::size_t i = 0; i < labels.size(); ++i) tops[labels[i]].push_back(y.simplices(y.dim())[i]);
  PieceInventory inv;
  for (auto& [label, ts] : tops) {
    inv.pieces[label] = SimplicialComplex::from_tops(ts);
    inv.boundary_markings[label]["boundary"] = boundary_complex(inv.pieces[label]);
  }
  return inv;
}

/// Expected shape of each piece: first Betti numbers and boundary genera.
struct PieceShape {
  std::vector<long> betti;
  std::vector<long> boundary_genera;
};

inline const std::map<std::string, PieceShape>& expected_piece_shapes() {
  static const std::map<std::string, PieceShape> shapes{
      {"1", {{1, 3, 1, 0}, {1, 2}}},     {"2", {{1, 3, 1, 0}, {1, 2}}},    {"3", {{1, 4, 2, 0}, {1, 1, 2}}},
      {"4", {{1, 2, 1, 0}, {1, 1}}},     {"5", {{1, 2, 1, 0}, {1, 1}}},    {"6-", {{1, 4, 1, 0}, {2, 2}}},
      {"6+", {{1, 4, 1, 0}, {2, 2}}},    {"7", {{1, 1, 0, 0}, {1}}},       {"8", {{1, 1, 0, 0}, {1}}},
  };
  return shapes;
}

// ---------------------------------------------------------------------------
// Assembly plan.

/// Expands "6" to both halves and "8_2" to two copies of 8.
inline std::vector<std::string> parse_labels(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    int times = 1;
    if (auto u = tok.find('_'); u != std::string::npos) {
      times = std::stoi(tok.substr(u + 1));
      tok = tok.substr(0, u);
    }
    for (int i = 0; i < times; ++i) {
      if (tok == "6") {
        out.push_back("6-");
        out.push_back("6+");
      } else {
        out.push_back(tok);
      }
    }
  }
  return out;
}

/// Union of the piece copies making up one chunk of the plan, selected by
/// its multiset of labels.
inline SimplicialComplex subassembly(std::vector<std::string> labels, const AssemblyPlan& plan) {
  std::sort(labels.begin(), labels.end());
  std::map<char, std::vector<std::string>> by_chunk;
  for (const auto& c : plan.copies) by_chunk[c.chunk].push_back(c.label);
  for (auto& [chunk, ls] : by_chunk) {
    std::sort(ls.begin(), ls.end());
    if (ls != labels) continue;
    std::vector<Simplex> tops;
    for (const auto& c : plan.copies)
      if (c.chunk == chunk) tops.insert(tops.end(), c.tops.begin(), c.tops.end());
    return SimplicialComplex::from_tops(tops);
  }
  throw TopologyError("label set does not match any chunk of the assembly plan");
}

/// The central chunk closed off by its caps: the boundary of the slab
/// handlebody times an interval.
inline SimplicialComplex central_closure(const AssemblyPlan& plan) {
  std::vector<Simplex> tops = plan.central_caps;
  for (const auto& c : plan.copies)
    if (c.chunk == 'A') tops.insert(tops.end(), c.tops.begin(), c.tops.end());
  return SimplicialComplex::from_tops(tops);
}

inline json to_json(const AssemblyPlan& plan) {
  auto simplices = [](const std::vector<Simplex>& ss) {
    json a = json::array();
    for (const auto& s : ss) a.push_back(std::vector<int>(s.begin(), s.end()));
    return a;
  };
  json j;
  j["copies"] = json::array();
  for (const auto& c : plan.copies)
    j["copies"].push_back({{"label", c.label}, {"chunk", std::string(1, c.chunk)}, {"tops", simplices(c.tops)}});
  j["central_caps"] = simplices(plan.central_caps);
  return j;
}

inline AssemblyPlan plan_from_json(const json& j) {
  auto simplices = [](const json& a) {
    std::vector<Simplex> out;
    for (const auto& s : a) {
      auto ids = s.get<std::vector<int>>();
      out.push_back(Simplex(ids.begin(), ids.end()));
    }
    return out;
  };
  try {
    AssemblyPlan p;
    for (const auto& c : j.at("copies")) {
      PieceCopy pc;
      pc.label = c.at("label").get<std::string>();
      auto chunk = c.at("chunk").get<std::string>();
      if (chunk.size() != 1) throw FormatError("chunk must be one character");
      pc.chunk = chunk[0];
      pc.tops = simplices(c.at("tops"));
      ++p.usage[pc.label];
      p.copies.push_back(std::move(pc));
    }
    p.central_caps = simplices(j.at("central_caps"));
    return p;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed plan: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Shipped datasets.

inline std::string dump(const json& j) { return j.dump() + "\n"; }

inline void write_house2d(const std::filesystem::path& dir, const House2D& h) {
  write_file(dir / "X.json", dump(to_json(*h.x)));
  write_file(dir / "S2.json", dump(to_json(*h.sphere)));
  write_file(dir / "f.json", dump(to_json(h.f, "S2.json", "X.json")));
  write_manifest(dir, {"X.json", "S2.json", "f.json"});
}

inline House2D load_house2d(const std::filesystem::path& dir) {
  House2D h;
  h.f = load_map(dir / "f.json");
  h.x = h.f.target;
  h.sphere = h.f.source;
  return h;
}

inline void write_y3(const std::filesystem::path& dir, const Y3& y) {
  write_file(dir / "Y.json", dump(to_json(*y.y)));
  write_file(dir / "M.json", dump(to_json(*y.m)));
  write_file(dir / "f.json", dump(to_json(y.f, "M.json", "Y.json")));
  write_file(dir / "plan.json", dump(to_json(y.plan)));
  write_manifest(dir, {"Y.json", "M.json", "f.json", "plan.json"});
}

inline Y3 load_y3(const std::filesystem::path& dir) {
  Y3 y;
  y.f = load_map(dir / "f.json");
  y.y = y.f.target;
  y.m = y.f.source;
  y.plan = plan_from_json(parse_json(read_file(dir / "plan.json"), "plan.json"));
  return y;
}

}  // namespace bing
