#include <CLI11.hpp>

#include <iostream>

#include "bing/report.hpp"

#ifndef BING_DATA_DIR
#define BING_DATA_DIR "data"
#endif

using namespace bing;

namespace {

constexpr int kChecksFailed = 1;
constexpr int kDataError = 3;

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

json profile_json(const HomologyProfile& h) {
  json j;
  j["coefficients"] = h.coefficients == Coefficients::Z ? "Z" : "Z2";
  j["betti"] = h.betti;
  j["torsion"] = h.torsion;
  return j;
}

json steps_json(const std::vector<CollapseStep>& steps) {
  json a = json::array();
  for (const auto& s : steps)
    a.push_back({std::vector<int>(s.free_face.begin(), s.free_face.end()), std::vector<int>(s.coface.begin(), s.coface.end())});
  return a;
}

std::filesystem::path target_dir(const std::string& data_dir, const std::string& target) {
  return std::filesystem::path(data_dir) / "v1" / target;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bing house constructions and verifiers"};
  app.require_subcommand(1);
  std::string data_dir = BING_DATA_DIR;
  app.add_option("--data-dir", data_dir, "root of the versioned data tree");

  std::string target;
  auto* build = app.add_subcommand("build", "construct a house and write its data files");
  build->add_option("target", target)->required()->check(CLI::IsMember({"house2d", "y3"}));

  VerifyOptions vopt;
  std::string report_path;
  bool timings = false, no_cylinder = false;
  auto* verify = app.add_subcommand("verify", "run the gate suite on the shipped data");
  verify->add_option("target", target)->required()->check(CLI::IsMember({"house2d", "y3"}));
  verify->add_option("--report", report_path, "also write the report to this file");
  verify->add_option("--jobs", vopt.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--seed", vopt.seed, "collapse order seed");
  verify->add_option("--budget", vopt.budget, "Tietze step budget");
  verify->add_flag("--timings", timings, "include wall-clock timings");
  verify->add_flag("--no-cylinder", no_cylinder, "skip the mapping cylinder checks");

  std::string file;
  bool z2 = false;
  auto* hom = app.add_subcommand("homology", "homology of a complex");
  hom->add_option("complex", file)->required()->check(CLI::ExistingFile);
  hom->add_flag("--z2", z2, "Z/2 coefficients");

  std::size_t budget = 200000;
  auto* pi1 = app.add_subcommand("pi1", "simplified fundamental group presentation");
  pi1->add_option("complex", file)->required()->check(CLI::ExistingFile);
  pi1->add_option("--budget", budget, "Tietze step budget");

  bool exhaustive = false;
  std::uint64_t seed = 0;
  auto* col = app.add_subcommand("collapse", "greedy or exhaustive collapse");
  col->add_option("complex", file)->required()->check(CLI::ExistingFile);
  col->add_flag("--exhaustive", exhaustive, "search all collapse orders");
  col->add_option("--budget", budget, "search node budget");
  col->add_option("--seed", seed, "greedy order seed");

  std::string weights = "ones";
  auto* imm = app.add_subcommand("immerse", "immersion analysis of a map");
  imm->add_option("map", file)->required()->check(CLI::ExistingFile);
  imm->add_option("--weights", weights, "sheet chain for the cycle test")->check(CLI::IsMember({"ones", "m"}));

  bool off = false;
  std::string out_path;
  auto* exp = app.add_subcommand("export", "export a complex");
  exp->add_option("complex", file)->required()->check(CLI::ExistingFile);
  exp->add_flag("--off", off, "OFF surface format")->required();
  exp->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) {
      auto dir = target_dir(data_dir, target);
      if (target == "house2d") write_house2d(dir, build_house2d());
      else write_y3(dir, build_y3());
      std::cout << "wrote " << dir.string() << '\n';
      return 0;
    }
    if (*verify) {
      vopt.cylinder = !no_cylinder;
      auto dir = target_dir(data_dir, target);
      auto rep = target == "house2d" ? verify_house2d(dir, vopt) : verify_y3(dir, vopt);
      auto j = rep.to_json(timings);
      if (!report_path.empty()) write_file(report_path, j.dump(2) + "\n");
      print(j);
      return rep.ok() ? 0 : kChecksFailed;
    }
    if (*hom) {
      print(profile_json(homology(load_complex(file), z2 ? Coefficients::Z2 : Coefficients::Z)));
      return 0;
    }
    if (*pi1) {
      auto r = fundamental_group(load_complex(file), budget);
      const auto& p = r.presentation;
      json j;
      j["generators"] = p.generators;
      j["relators"] = json::array();
      for (const auto& w : p.relators) j["relators"].push_back(format_word(w, p.generators));
      j["certified_trivial"] = is_certified_trivial(p);
      j["inconclusive"] = r.inconclusive;
      j["steps"] = r.steps;
      auto ab = abelianize(p);
      j["abelianization"] = {{"rank", ab.rank}, {"torsion", ab.torsion}};
      print(j);
      return 0;
    }
    if (*col) {
      auto k = load_complex(file);
      json j;
      if (exhaustive) {
        auto r = is_collapsible(k, budget);
        j["verdict"] = to_string(r.verdict);
        j["nodes"] = r.nodes;
        if (r.verdict == Collapsibility::Yes) j["certificate"] = steps_json(r.certificate);
      } else {
        auto seq = greedy_collapse(k, seed);
        j["steps"] = steps_json(seq.steps);
        j["residue"] = to_json(seq.residue);
        j["collapsed_to_point"] = seq.residue.total_simplices() == 1;
      }
      print(j);
      return 0;
    }
    if (*imm) {
      auto f = load_map(file);
      json j;
      auto iv = is_pl_immersion(f);
      j["immersion"] = iv.ok();
      if (iv.status == ImmersionStatus::Degenerate) j["error"] = "degenerate map";
      auto m = multiplicity(f);
      json hist = json::object();
      for (auto [k, n] : m.histogram()) hist[std::to_string(k)] = n;
      j["multiplicity_histogram"] = hist;
      j["additivity"] = additivity_check(f, m).ok;
      auto chain = weights == "m" ? SheetChain::from_multiplicity(m) : SheetChain::ones(*f.target);
      j["z2_cycle"] = {{"weights", weights}, {"result", z2_cycle_test(*f.target, chain)}};
      try {
        j["census"] = local_model_census(*f.target).counts;
      } catch (const TopologyError& e) {
        j["census"] = {{"error", e.what()}};
      }
      print(j);
      return 0;
    }
    if (*exp) {
      auto text = to_off(load_complex(file));
      if (out_path.empty()) std::cout << text;
      else write_file(out_path, text);
      return 0;
    }
  } catch (const ChecksumError& e) {
    std::cerr << "checksum error: " << e.what() << '\n';
    return kDataError;
  } catch (const FormatError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kChecksFailed;
  }
  return 0;
}
