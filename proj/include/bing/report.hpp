#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bing/constructions.hpp"
#include "bing/cylinder.hpp"
#include "bing/group.hpp"
#include "bing/homology.hpp"
#include "bing/immersion.hpp"

namespace bing {

using detail::str;

enum class Verdict { Pass, Fail, Inconclusive, Error };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
    default: return "error";
  }
}

struct CheckResult {
  std::string id;
  Verdict verdict = Verdict::Error;
  std::string witness;
  double seconds = 0;
};

struct VerificationReport {
  std::string target;
  std::vector<CheckResult> checks;
  std::map<std::string, std::string> data_checksums;

  bool ok() const {
    for (const auto& c : checks)
      if (c.verdict == Verdict::Fail || c.verdict == Verdict::Error) return false;
    return true;
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (c.verdict != Verdict::Pass) return false;
    return !checks.empty();
  }
  const CheckResult* find(const std::string& id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }

  /// Timings are left out unless asked for, so reports are reproducible.
  json to_json(bool timings = false) const {
    json j;
    j["target"] = target;
    j["checks"] = json::array();
    for (const auto& c : checks) {
      json e{{"id", c.id}, {"verdict", bing::to_string(c.verdict)}};
      if (!c.witness.empty()) e["witness"] = c.witness;
      if (timings) e["seconds"] = c.seconds;
      j["checks"].push_back(e);
    }
    j["data_checksums"] = data_checksums;
    j["ok"] = ok();
    return j;
  }
};

struct VerifyOptions {
  std::size_t budget = 200000;  // Tietze steps
  std::uint64_t seed = 0;       // collapse order
  unsigned jobs = 1;
  bool cylinder = true;
};

namespace pins {
// Local model counts of the shipped complexes.
inline const std::map<std::string, long> house2d_census{{"cone_k4", 2}, {"sheet", 419}, {"triple", 52}};
inline const std::map<std::string, long> y3_census{{"cone_k4", 44}, {"sheet", 4779}, {"triple", 1050}};
}  // namespace pins

// ---------------------------------------------------------------------------

/// Ordered list of independent tasks, each emitting one or more checks.
class Suite {
 public:
  using Emit = std::function<void(const std::string&, Verdict, const std::string&)>;

  void add(std::function<void(Emit&)> task) { tasks_.push_back(std::move(task)); }

  /// One-check task from a predicate with witness.
  void check(const std::string& id, std::function<std::pair<Verdict, std::string>()> fn) {
    add([id, fn](Emit& emit) {
      auto [v, w] = fn();
      emit(id, v, w);
    });
  }

  std::vector<CheckResult> run(unsigned jobs) const {
    std::vector<std::vector<CheckResult>> out(tasks_.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next++) < tasks_.size();) {
        auto start = std::chrono::steady_clock::now();
        auto& res = out[i];
        Emit emit = [&](const std::string& id, Verdict v, const std::string& w) {
          double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
          res.push_back({id, v, w, s});
        };
        try {
          tasks_[i](emit);
        } catch (const std::exception& e) {
          res.push_back({"task" + std::to_string(i), Verdict::Error, e.what(), 0});
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < std::max(1u, jobs); ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::vector<CheckResult> flat;
    for (auto& v : out) flat.insert(flat.end(), v.begin(), v.end());
    return flat;
  }

 private:
  std::vector<std::function<void(Emit&)>> tasks_;
};

inline std::pair<Verdict, std::string> verdict(bool ok, const std::string& witness = {}) {
  return {ok ? Verdict::Pass : Verdict::Fail, witness};
}

inline std::string betti_string(const HomologyProfile& h) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < h.betti.size(); ++i) os << (i ? "," : "") << h.betti[i];
  os << ')';
  if (h.has_torsion()) {
    os << " torsion";
    for (std::size_t i = 0; i < h.torsion.size(); ++i)
      for (const auto& t : h.torsion[i]) os << " H" << i << ":Z/" << t;
  }
  return os.str();
}

inline std::pair<Verdict, std::string> homology_is(const SimplicialComplex& k, const std::vector<long>& betti) {
  auto h = homology(k, Coefficients::Z);
  return verdict(h.betti == betti && !h.has_torsion(), betti_string(h));
}

inline std::pair<Verdict, std::string> pi1_trivial(const SimplicialComplex& k, std::size_t budget) {
  auto r = fundamental_group(k, budget);
  std::string w = std::to_string(r.presentation.generators.size()) + " generators, " +
                  std::to_string(r.presentation.relators.size()) + " relators after " + std::to_string(r.steps) +
                  " steps";
  if (is_certified_trivial(r.presentation)) return {Verdict::Pass, w};
  return {r.inconclusive ? Verdict::Inconclusive : Verdict::Fail, w};
}

inline std::string census_string(const std::map<std::string, long>& c) {
  std::string s;
  for (const auto& [k, v] : c) s += (s.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return s;
}

/// Shared checks of a spine-to-sphere quotient map.
inline void add_map_checks(Suite& suite, const SimplicialMap& f) {
  suite.check("f.simplicial", [f] {
    auto bad = simpliciality_violation(f);
    return verdict(!bad, bad ? str(*bad) : "");
  });
  suite.check("f.immersion", [f] {
    auto v = is_pl_immersion(f);
    std::string w;
    if (!v.ok()) {
      w = v.status == ImmersionStatus::Degenerate ? "degenerate on " : "star collision at vertex ";
      if (v.vertex) w += std::to_string(*v.vertex) + ": ";
      if (v.first) w += str(*v.first);
      if (v.second) w += " vs " + str(*v.second);
    }
    return verdict(v.ok(), w);
  });
  suite.check("f.multiplicity", [f] {
    auto m = multiplicity(f);
    std::string w;
    for (auto [k, n] : m.histogram()) w += (w.empty() ? "" : " ") + std::to_string(k) + ":" + std::to_string(n);
    return verdict(m.constant(2), w);
  });
  suite.check("f.semicontinuity", [f] {
    auto bad = semicontinuity_violation(f);
    return verdict(!bad, bad ? str(bad->first) + " < " + str(bad->second) : "");
  });
  suite.check("f.pushforward", [f] {
    auto push = pushforward_fundamental(f);
    auto m = multiplicity(f);
    bool same = true;
    for (std::size_t i = 0; i < m.m.size(); ++i) same = same && push.weights[i] == (m.m[i] & 1);
    return verdict(same && z2_cycle_test(*f.target, push));
  });
  suite.check("z2.ones_not_cycle", [f] {
    const auto& y = *f.target;
    auto b = z2_boundary(y, SheetChain::ones(y).weights);
    std::string w;
    if (!b.empty()) w = "odd face " + str(b.front()) + " of " + std::to_string(b.size());
    return verdict(!b.empty(), w);
  });
  suite.check("z2.m_cycle", [f] {
    auto m = multiplicity(f);
    return verdict(z2_cycle_test(*f.target, SheetChain::from_multiplicity(m)) && additivity_check(f, m).ok);
  });
  suite.check("z2.reduced_not_cycle", [f] {
    auto [g, reduced] = reduced_weights(multiplicity(f));
    return verdict(!z2_cycle_test(*f.target, reduced), "gcd " + std::to_string(g));
  });
}

inline void add_cylinder_checks(Suite& suite, const SimplicialMap& f, const VerifyOptions& opt) {
  suite.add([f, opt](Suite::Emit& emit) {
    auto c = mapping_cylinder(f, opt.seed);
    auto h = homology(*c.total, Coefficients::Z);
    std::vector<long> point(h.betti.size(), 0);
    point[0] = 1;
    emit("cylinder.homology", h.betti == point && !h.has_torsion() ? Verdict::Pass : Verdict::Fail, betti_string(h));
    auto [pv, pw] = pi1_trivial(*c.total, opt.budget);
    emit("cylinder.pi1", pv, pw);
    bool to_base = collapses_to_base(c);
    emit("cylinder.collapse_certificate", to_base ? Verdict::Pass : Verdict::Fail,
         std::to_string(c.collapse_to_base.steps.size()) + " steps");
    auto top = boundary_of_cylinder(c);
    bool same = top.count(top.dim()) == f.source->count(f.source->dim());
    for (const auto& s : f.source->simplices(f.source->dim())) same = same && top.contains(c.top_inclusion.image(s));
    emit("cylinder.top_is_source", same ? Verdict::Pass : Verdict::Fail, "");
  });
}

inline bool same_map(const SimplicialMap& a, const SimplicialMap& b) {
  return a.source->facets() == b.source->facets() && a.target->facets() == b.target->facets() &&
         a.vertex_map == b.vertex_map && a.target->top_labels() == b.target->top_labels();
}

// ---------------------------------------------------------------------------

inline VerificationReport verify_house2d(const std::filesystem::path& dir, const VerifyOptions& opt = {}) {
  VerificationReport rep;
  rep.target = "house2d";
  rep.data_checksums = check_manifest(dir);
  auto h = load_house2d(dir);
  auto x = h.x;

  Suite s;
  s.check("data.matches_builder", [h] { return verdict(same_map(h.f, build_house2d().f)); });
  s.check("x.valid", [x] {
    auto r = validate(*x);
    return verdict(r.ok(), r.ok() ? "" : r.issues.front());
  });
  s.check("x.homology", [x] { return homology_is(*x, {1, 0, 0}); });
  s.check("x.pi1", [x, opt] { return pi1_trivial(*x, opt.budget); });
  s.check("x.free_faces", [x] {
    auto ff = free_faces(*x);
    return verdict(ff.empty(), ff.empty() ? "" : str(ff.front().free_face));
  });
  s.check("sphere.surface", [h] {
    auto info = classify_surface(*h.sphere);
    return verdict(info.is_sphere(), "euler " + std::to_string(info.euler));
  });
  add_map_checks(s, h.f);
  s.check("census", [x] {
    auto c = local_model_census(*x);
    return verdict(c.counts == pins::house2d_census, census_string(c.counts));
  });
  if (opt.cylinder) add_cylinder_checks(s, h.f, opt);
  rep.checks = s.run(opt.jobs);
  return rep;
}

inline VerificationReport verify_y3(const std::filesystem::path& dir, const VerifyOptions& opt = {}) {
  VerificationReport rep;
  rep.target = "y3";
  rep.data_checksums = check_manifest(dir);
  auto data = std::make_shared<const Y3>(load_y3(dir));
  auto y = data->y;
  auto m = data->m;

  Suite s;
  s.check("data.matches_builder", [data] {
    auto fresh = build_y3();
    bool plan_same = fresh.plan.central_caps == data->plan.central_caps && fresh.plan.copies.size() == data->plan.copies.size();
    for (std::size_t i = 0; plan_same && i < fresh.plan.copies.size(); ++i)
      plan_same = fresh.plan.copies[i].tops == data->plan.copies[i].tops && fresh.plan.copies[i].chunk == data->plan.copies[i].chunk;
    return verdict(same_map(fresh.f, data->f) && plan_same);
  });
  s.check("y.valid", [y] {
    auto r = validate(*y);
    return verdict(r.ok(), r.ok() ? "" : r.issues.front());
  });
  s.check("y.pieces", [y] {
    auto inv = piece_inventory(*y);
    std::string bad;
    for (const auto& [label, shape] : expected_piece_shapes()) {
      auto it = inv.pieces.find(label);
      if (it == inv.pieces.end()) {
        bad += " missing " + label;
        continue;
      }
      auto h = homology(it->second, Coefficients::Z);
      if (h.betti != shape.betti || h.has_torsion()) bad += " " + label + ":" + betti_string(h);
      if (boundary_genera(it->second) != shape.boundary_genera) bad += " " + label + ":boundary";
    }
    if (inv.pieces.size() != expected_piece_shapes().size()) bad += " extra labels";
    return verdict(bad.empty(), bad);
  });
  s.check("y.piece_symmetry", [y] {
    auto inv = piece_inventory(*y);
    std::string bad;
    for (auto [a, b] : std::vector<std::pair<std::string, std::string>>{{"1", "2"}, {"4", "5"}, {"7", "8"}, {"6-", "6+"}}) {
      const auto& p = inv.pieces.at(a);
      const auto& q = inv.pieces.at(b);
      bool same = homology(p, Coefficients::Z).betti == homology(q, Coefficients::Z).betti &&
                  boundary_genera(p) == boundary_genera(q);
      for (int d = 0; d <= 3; ++d) same = same && p.count(d) == q.count(d);
      if (!same) bad += " " + a + "/" + b;
    }
    return verdict(bad.empty(), bad);
  });
  s.check("y.homology", [y] { return homology_is(*y, {1, 0, 0, 0}); });
  s.check("y.pi1", [y, opt] { return pi1_trivial(*y, opt.budget); });
  s.check("y.free_faces", [y] {
    auto ff = free_faces(*y);
    return verdict(ff.empty(), ff.empty() ? "" : str(ff.front().free_face));
  });
  s.check("m.closed", [m] {
    auto v = is_closed_pseudomanifold(*m, 3);
    return verdict(v.ok, v.reason);
  });
  s.check("m.homology", [m] { return homology_is(*m, {1, 0, 0, 1}); });
  s.check("m.pi1", [m, opt] { return pi1_trivial(*m, opt.budget); });
  add_map_checks(s, data->f);
  s.check("plan.usage", [data] {
    bool ok = data->plan.copies.size() == 18;
    for (const auto& l : y3_piece_labels()) ok = ok && data->plan.usage.count(l) && data->plan.usage.at(l) == 2;
    return verdict(ok, std::to_string(data->plan.copies.size()) + " copies");
  });
  s.check("plan.copies", [data] {
    const auto& f = data->f;
    auto inv = piece_inventory(*data->y);
    std::map<Simplex, int> covered;
    std::string bad;
    for (const auto& c : data->plan.copies) {
      std::set<Simplex> images;
      for (const auto& t : c.tops) {
        ++covered[t];
        images.insert(f.image(t));
      }
      const auto& piece = inv.pieces.at(c.label);
      bool bij = images.size() == c.tops.size() && images.size() == piece.count(3);
      for (const auto& im : images) bij = bij && piece.contains(im);
      if (!bij) bad += " " + c.label + c.chunk;
    }
    bool tiles = covered.size() == data->m->count(3);
    for (auto [t, n] : covered) tiles = tiles && n == 1;
    return verdict(bad.empty() && tiles, bad + (tiles ? "" : " copies do not tile the source"));
  });
  s.check("gate.central_boundary", [data] {
    auto k = central_closure(data->plan);
    auto pm = is_closed_pseudomanifold(k, 3);
    auto [v, w] = homology_is(k, {1, 2, 2, 1});
    return verdict(v == Verdict::Pass && pm.ok, w + (pm.ok ? "" : " not closed: " + pm.reason));
  });
  auto torus_gate = [data](const std::string& labels) {
    return [data, labels] {
      auto k = subassembly(parse_labels(labels), data->plan);
      return homology_is(k, {1, 1, 0, 0});
    };
  };
  s.check("gate.solid_torus", torus_gate("4 3 6- 2 5 8_2"));
  s.check("gate.solid_torus_mirror", torus_gate("5 3 6+ 1 4 7_2"));
  s.check("census", [y] {
    auto c = local_model_census(*y);
    return verdict(c.counts == pins::y3_census, census_string(c.counts));
  });
  if (opt.cylinder) add_cylinder_checks(s, data->f, opt);
  rep.checks = s.run(opt.jobs);
  return rep;
}

}  // namespace bing
