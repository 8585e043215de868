#pragma once

#include <openssl/evp.h>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "bing/map.hpp"

namespace bing {

using nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ChecksumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline json to_json(const SimplicialComplex& k) {
  json j;
  j["vertices"] = json::array();
  for (const auto& v : k.vertices()) {
    json e{{"id", v.id}};
    if (!v.tag.empty()) e["tag"] = v.tag;
    j["vertices"].push_back(e);
  }
  j["top_simplices"] = json::array();
  for (const auto& s : k.facets()) j["top_simplices"].push_back(std::vector<int>(s.begin(), s.end()));
  if (k.is_pure()) {
    if (k.orientation()) j["orientation"] = *k.orientation();
    if (k.top_labels()) j["top_labels"] = *k.top_labels();
  }
  if (!k.coords().empty()) {
    j["coords"] = json::array();
    for (const auto& [id, c] : k.coords()) j["coords"].push_back({id, c[0], c[1], c[2]});
  }
  return j;
}

/// Reads the complex format; faces are generated by closure. Optional
/// per-top arrays are matched to simplices(dim) by the listed top order.
inline SimplicialComplex complex_from_json(const json& j) {
  try {
    std::vector<Vertex> vs;
    for (const auto& v : j.at("vertices")) vs.push_back({v.at("id").get<int>(), v.value("tag", std::string{})});
    std::vector<Simplex> tops;
    for (const auto& t : j.at("top_simplices")) {
      auto ids = t.get<std::vector<int>>();
      if (ids.empty() || ids.size() > Simplex::kMaxVertices) throw FormatError("bad simplex size");
      Simplex s(ids.begin(), ids.end());
      if (s.size() != ids.size()) throw FormatError("repeated vertex in top simplex");
      tops.push_back(s);
    }
    auto k = SimplicialComplex::from_tops(std::move(vs), tops);
    auto per_top = [&](const char* key, auto tag) {
      using T = decltype(tag);
      if (!j.contains(key)) return std::optional<std::vector<T>>{};
      auto vals = j.at(key).get<std::vector<T>>();
      if (vals.size() != tops.size()) throw FormatError(std::string(key) + " length does not match top_simplices");
      std::vector<T> out(k.count(k.dim()));
      for (std::size_t i = 0; i < tops.size(); ++i) {
        if (tops[i].dim() != k.dim()) throw FormatError(std::string(key) + " given for a non-pure complex");
        out[static_cast<std::size_t>(k.index_of(tops[i]))] = vals[i];
      }
      return std::optional<std::vector<T>>{std::move(out)};
    };
    k.set_orientation(per_top("orientation", int{}));
    k.set_top_labels(per_top("top_labels", std::string{}));
    if (j.contains("coords")) {
      std::map<int, SimplicialComplex::Coords> c;
      for (const auto& e : j.at("coords")) c[e.at(0).get<int>()] = {e.at(1).get<double>(), e.at(2).get<double>(), e.at(3).get<double>()};
      k.set_coords(std::move(c));
    }
    return k;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed complex: ") + e.what());
  }
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw FormatError("cannot read " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw FormatError("cannot write " + p.string());
  out << text;
}

inline json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(what + ": " + e.what());
  }
}

inline SimplicialComplex load_complex(const std::filesystem::path& p) {
  return complex_from_json(parse_json(read_file(p), p.string()));
}

/// Map files hold the vertex map plus the two complexes, either inline
/// ("source"/"target") or as paths relative to the map file
/// ("source_file"/"target_file").
inline json to_json(const SimplicialMap& f, const std::string& source_file = {}, const std::string& target_file = {}) {
  json j;
  if (source_file.empty()) j["source"] = to_json(*f.source);
  else j["source_file"] = source_file;
  if (target_file.empty()) j["target"] = to_json(*f.target);
  else j["target_file"] = target_file;
  j["vertex_map"] = json::array();
  for (auto [a, b] : f.vertex_map) j["vertex_map"].push_back({a, b});
  return j;
}

inline SimplicialMap map_from_json(const json& j, const std::filesystem::path& base_dir = {}) {
  auto side = [&](const char* inline_key, const char* file_key) {
    if (j.contains(inline_key)) return std::make_shared<const SimplicialComplex>(complex_from_json(j.at(inline_key)));
    if (j.contains(file_key))
      return std::make_shared<const SimplicialComplex>(load_complex(base_dir / j.at(file_key).get<std::string>()));
    throw FormatError(std::string("map lacks ") + inline_key);
  };
  SimplicialMap f;
  f.source = side("source", "source_file");
  f.target = side("target", "target_file");
  try {
    for (const auto& e : j.at("vertex_map")) f.vertex_map[e.at(0).get<int>()] = e.at(1).get<int>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed vertex_map: ") + e.what());
  }
  for (const auto& v : f.source->vertices())
    if (!f.vertex_map.count(v.id)) throw FormatError("vertex_map misses source vertex " + std::to_string(v.id));
  return f;
}

inline SimplicialMap load_map(const std::filesystem::path& p) {
  return map_from_json(parse_json(read_file(p), p.string()), p.parent_path());
}

/// OFF surface export of the 2-simplices; needs coordinates.
inline std::string to_off(const SimplicialComplex& k) {
  if (k.coords().empty()) throw FormatError("complex has no coordinates");
  std::map<int, int> idx;
  std::ostringstream os;
  const auto& tris = k.simplices(2);
  os << "OFF\n" << k.num_vertices() << ' ' << tris.size() << " 0\n";
  for (const auto& v : k.vertices()) {
    auto it = k.coords().find(v.id);
    if (it == k.coords().end()) throw FormatError("vertex " + std::to_string(v.id) + " has no coordinates");
    idx[v.id] = static_cast<int>(idx.size());
    os << it->second[0] << ' ' << it->second[1] << ' ' << it->second[2] << '\n';
  }
  for (const auto& t : tris) os << "3 " << idx[t[0]] << ' ' << idx[t[1]] << ' ' << idx[t[2]] << '\n';
  return os.str();
}

inline std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int n = 0;
  EVP_Digest(data.data(), data.size(), md, &n, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < n; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

/// Checksum manifest: one "digest  name" line per file, sorted by name.
inline std::map<std::string, std::string> read_manifest(const std::filesystem::path& p) {
  std::map<std::string, std::string> m;
  std::istringstream in(read_file(p));
  std::string digest, name;
  while (in >> digest >> name) m[name] = digest;
  return m;
}

inline void write_manifest(const std::filesystem::path& dir, const std::vector<std::string>& names) {
  std::ostringstream os;
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& n : sorted) os << sha256_hex(read_file(dir / n)) << "  " << n << '\n';
  write_file(dir / "SHA256SUMS", os.str());
}

/// Verifies every file listed in the manifest; returns name -> digest.
inline std::map<std::string, std::string> check_manifest(const std::filesystem::path& dir) {
  auto m = read_manifest(dir / "SHA256SUMS");
  if (m.empty()) throw ChecksumError("empty checksum manifest in " + dir.string());
  for (const auto& [name, digest] : m) {
    auto actual = sha256_hex(read_file(dir / name));
    if (actual != digest) throw ChecksumError("checksum mismatch for " + (dir / name).string());
  }
  return m;
}

}  // namespace bing
