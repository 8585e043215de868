// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <filesystem>
#include <iostream>
#include <random>

#include "bing/report.hpp"
#include "corpus.hpp"

using namespace bing;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void line(bool ok, const std::string& criterion, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS " : "FAIL ") << criterion;
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << std::endl;
}

// All listed checks pass; the detail names the ones that do not.
std::pair<bool, std::string> require(const VerificationReport& r, const std::vector<std::string>& ids) {
  std::string bad;
  for (const auto& id : ids) {
    const auto* c = r.find(id);
    if (!c) bad += " " + r.target + ":" + id + "=missing";
    else if (c->verdict != Verdict::Pass) bad += " " + r.target + ":" + id + "=" + to_string(c->verdict) + " " + c->witness;
  }
  return {bad.empty(), bad};
}

void criterion(const std::string& name, const std::vector<std::pair<const VerificationReport*, std::vector<std::string>>>& parts) {
  bool ok = true;
  std::string detail;
  for (const auto& [rep, ids] : parts) {
    if (!rep) {
      ok = false;
      detail += " report unavailable";
      continue;
    }
    auto [o, d] = require(*rep, ids);
    ok = ok && o;
    detail += d;
  }
  line(ok, name, detail);
}

std::optional<VerificationReport> run_suite(const std::string& target) {
  try {
    auto dir = fs::path(BING_DATA_DIR) / "v1" / target;
    return target == "house2d" ? verify_house2d(dir, {}) : verify_y3(dir, {});
  } catch (const std::exception& e) {
    std::cout << "error in " << target << " suite: " << e.what() << std::endl;
    return std::nullopt;
  }
}

long alternating(const std::vector<long>& b) {
  long s = 0;
  for (std::size_t i = 0; i < b.size(); ++i) s += (i % 2 ? -1 : 1) * b[i];
  return s;
}

void engine_cross_validation() {
  auto corpus = testing::corpus();
  std::string bad;
  if (corpus.size() < 20) bad += " corpus too small";
  for (const auto& [name, k] : corpus) {
    auto oracle = testing::gf2_betti(k);
    if (homology(k, Coefficients::Z2).betti != oracle) bad += " " + name + ":betti";
    if (euler_characteristic(k) != alternating(oracle)) bad += " " + name + ":euler";
    auto sd = barycentric_subdivision(k).complex;
    auto a = homology(k), b = homology(sd);
    if (a.betti != b.betti || a.torsion != b.torsion) bad += " " + name + ":subdivision";
  }
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9), size(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix a(static_cast<std::size_t>(size(rng)));
    const std::size_t cols = static_cast<std::size_t>(size(rng));
    for (auto& row : a)
      for (std::size_t j = 0; j < cols; ++j) row.push_back(entry(rng));
    auto s = smith_normal_form(a, true);
    auto p = multiply(multiply(*s.U, a), *s.V);
    bool ok = true;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) ok = ok && p[i][j] == ((i == j && i < s.d.size()) ? s.d[i] : BigInt(0));
    for (std::size_t i = 0; i + 1 < s.d.size(); ++i) ok = ok && s.d[i] > 0 && s.d[i + 1] % s.d[i] == 0;
    if (!ok) bad += " snf:" + std::to_string(trial);
  }
  line(bad.empty(), "5 engine cross-validation: GF(2) oracle on " + std::to_string(corpus.size()) +
                        " complexes, Euler, subdivision, SNF on 100 random matrices",
       bad);
}

void negative_controls() {
  std::string bad;
  SimplicialMap cone;
  cone.source = std::make_shared<SimplicialComplex>(testing::sphere(3));
  cone.target = std::make_shared<SimplicialComplex>(testing::simplex(2));
  cone.vertex_map = {{0, 0}, {1, 1}, {2, 2}, {3, 0}};
  if (is_pl_immersion(cone).status != ImmersionStatus::Degenerate) bad += " degenerate map accepted";
  auto s2 = testing::sphere(3);
  if (!z2_cycle_test(s2, SheetChain::ones(s2))) bad += " embedded sphere ones chain not a cycle";
  line(bad.empty(), "6 negative controls: degenerate map rejected, embedded sphere carries a Z2 cycle", bad);
}

}  // namespace

int main() {
  auto h2 = run_suite("house2d");
  auto y3 = run_suite("y3");
  const VerificationReport* h = h2 ? &*h2 : nullptr;
  const VerificationReport* y = y3 ? &*y3 : nullptr;

  criterion("1 house2d: acyclic, simply connected, no free faces, two-sheeted immersion, Z2 chains",
            {{h, {"data.matches_builder", "x.valid", "x.homology", "x.pi1", "x.free_faces", "sphere.surface", "f.immersion",
                  "f.multiplicity", "z2.ones_not_cycle", "z2.m_cycle"}}});
  criterion("2 y3: acyclic, simply connected, closed source with sphere links, two-sheeted immersion",
            {{y, {"data.matches_builder", "y.valid", "y.homology", "y.pi1", "m.closed", "m.homology", "m.pi1", "f.immersion",
                  "f.multiplicity"}}});
  criterion("3 gates: central boundary betti (1,2,2,1), solid torus and mirror",
            {{y, {"gate.central_boundary", "gate.solid_torus", "gate.solid_torus_mirror"}}});
  const std::vector<std::string> cyl{"cylinder.homology", "cylinder.pi1", "cylinder.collapse_certificate",
                                     "cylinder.top_is_source"};
  criterion("4 mapping cylinders of both houses", {{h, cyl}, {y, cyl}});
  engine_cross_validation();
  negative_controls();
  return failures == 0 ? 0 : 1;
}
