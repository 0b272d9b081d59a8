#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "newtoric/newtoric.hpp"

namespace fs = std::filesystem;
using namespace newtoric;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

InputSpec load_input(const std::string& path) {
  std::string name = fs::path(path).stem().string();
  return parse_input(slurp(path), name);
}

RatVec parse_weight_list(const std::string& text, std::size_t n) {
  RatVec w;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) w.push_back(parse_rational(tok));
  if (w.size() != n)
    throw invalid_input_error("weight list needs one entry per generator");
  return w;
}

void emit(const json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  // text: a short human-readable summary
  std::cout << j["name"].get<std::string>() << " (rank " << j["rank"] << ")\n";
  if (j.contains("max_minor")) std::cout << "max minor bound: " << j["max_minor"] << "\n";
  if (j.contains("umbrella")) {
    std::cout << "umbrella facets:\n";
    for (const auto& f : j["umbrella"]["facets"]) {
      std::cout << "  {";
      bool first = true;
      for (const auto& m : f["members"]) {
        if (!first) std::cout << ",";
        std::cout << "a" << m;
        first = false;
      }
      std::cout << "}  functional (";
      first = true;
      for (const auto& c : f["functional"]) {
        if (!first) std::cout << ", ";
        std::cout << c.get<std::string>();
        first = false;
      }
      std::cout << ")\n";
    }
  }
  if (j.contains("newton")) {
    const auto& n = j["newton"];
    std::cout << "enlarged generators:";
    for (const auto& g : n["enlarged_generators"]) std::cout << " " << g.dump();
    std::cout << "\nweights:";
    for (const auto& w : n["weights"]) std::cout << " " << w.get<std::string>();
    std::cout << "\ngraded presentation:\n";
    for (const auto& p : n["graded_generators"])
      std::cout << "  " << p.get<std::string>() << "\n";
  }
  if (j.contains("volume")) std::cout << "normalized volume: " << j["volume"] << "\n";
  if (j.contains("hbar")) {
    const auto& h = j["hbar"];
    std::cout << "necessary criterion: "
              << (h["passes_within_bounds"].get<bool>() ? "no obstruction within bounds"
                                                        : "NOT Cohen-Macaulay")
              << "\n";
    for (const auto& c : h["counterexamples"])
      std::cout << "  obstruction at " << c.dump() << "\n";
  }
}

/// every leaf of `expected` must appear with the same value in `actual`
bool subset_match(const json& expected, const json& actual, const std::string& path,
                  std::string& err) {
  if (expected.is_object()) {
    if (!actual.is_object()) {
      err = path + ": expected object";
      return false;
    }
    for (const auto& [key, value] : expected.items()) {
      if (!actual.contains(key)) {
        err = path + "/" + key + ": missing";
        return false;
      }
      if (!subset_match(value, actual.at(key), path + "/" + key, err)) return false;
    }
    return true;
  }
  if (expected.is_array()) {
    if (!actual.is_array() || actual.size() != expected.size()) {
      err = path + ": array size mismatch";
      return false;
    }
    for (std::size_t i = 0; i < expected.size(); ++i)
      if (!subset_match(expected[i], actual[i], path + "[" + std::to_string(i) + "]", err))
        return false;
    return true;
  }
  if (expected != actual) {
    err = path + ": expected " + expected.dump() + " got " + actual.dump();
    return false;
  }
  return true;
}

/// quick per-fixture invariant checks on top of the snapshot comparison
std::optional<std::string> fixture_properties(const SemigroupPresentation& p) {
  NewtonDegrees deg(p);
  std::mt19937_64 gen(0xc0ffee);
  std::uniform_int_distribution<int> mult(0, 3);
  for (int trial = 0; trial < 60; ++trial) {
    IntVec h(p.rank(), Int(0)), k(p.rank(), Int(0));
    for (std::size_t j = 0; j < p.size(); ++j) {
      h = add(h, scale(Int(mult(gen)), p.frame_generator(j)));
      k = add(k, scale(Int(mult(gen)), p.frame_generator(j)));
    }
    Rat dh = deg.degree(h), dk = deg.degree(k), ds = deg.degree(add(h, k));
    if (ds > dh + dk) return "degree subadditivity failed";
    if ((ds == dh + dk) != deg.share_facet_cone(h, k))
      return "additivity/facet-cone equivalence failed";
  }
  auto check = verify_enlargement(newton_filtration(p), Rat(4));
  if (!check.ok) return "theorem certificate failed: " + check.violations.front();
  return std::nullopt;
}

int run_corpus(const std::string& dir) {
  if (!fs::is_directory(dir)) {
    std::cerr << "corpus directory not found: " << dir << "\n";
    return 1;
  }
  std::vector<fs::path> inputs;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      inputs.push_back(entry.path());
  std::sort(inputs.begin(), inputs.end());
  if (inputs.empty()) {
    std::cerr << "corpus directory has no fixtures: " << dir << "\n";
    return 1;
  }
  int failures = 0;
  for (const auto& path : inputs) {
    std::string name = path.stem().string();
    try {
      InputSpec spec = parse_input(slurp(path.string()), name);
      json report = analysis_report(spec);
      fs::path expected_path = fs::path(dir) / "expected" / (name + ".expected.json");
      if (!fs::exists(expected_path))
        throw invalid_input_error("missing expected snapshot " + expected_path.string());
      json expected = json::parse(slurp(expected_path.string()));
      std::string err;
      if (!subset_match(expected, report, "", err)) throw invalid_input_error(err);
      SemigroupPresentation p(spec.generators, spec.labels);
      if (auto problem = fixture_properties(p)) throw invalid_input_error(*problem);
      std::cout << "[PASS] " << name << "\n";
    } catch (const std::exception& e) {
      std::cout << "[FAIL] " << name << ": " << e.what() << "\n";
      ++failures;
    }
  }
  std::cout << (failures ? "FAILED" : "OK") << " (" << inputs.size() - failures << "/"
            << inputs.size() << " fixtures)\n";
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Newton filtrations, toric ideals and umbrellas of affine semigroups"};
  app.require_subcommand(1);

  std::string input, format = "json", weight_list, target, dir = "fixtures";
  std::string bound, degree_bound, witness_bound;
  bool trace = false, timing = false, cm_check = false;

  auto add_common = [&](CLI::App* cmd, bool needs_input = true) {
    if (needs_input)
      cmd->add_option("--input", input, "input file (JSON or whitespace matrix)")
          ->required();
    cmd->add_option("--format", format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto* analyze = app.add_subcommand("analyze", "full pipeline report");
  add_common(analyze);
  analyze->add_option("--bound", bound, "default bound for the membership searches");
  analyze->add_option("--degree-bound", degree_bound, "enumeration degree bound");
  analyze->add_option("--witness-bound", witness_bound, "witness search bound");
  analyze->add_flag("--trace", trace, "include the full enlargement trace");
  analyze->add_flag("--timing", timing, "append wall-clock timing (breaks byte determinism)");

  auto* toric_cmd = app.add_subcommand("toric", "reduced basis of the toric ideal");
  add_common(toric_cmd);
  toric_cmd->add_option("--weight", weight_list, "comma-separated rational weights");

  auto* umbrella_cmd = app.add_subcommand("umbrella", "facets and faces of the umbrella");
  add_common(umbrella_cmd);
  umbrella_cmd->add_option("--weight", weight_list, "comma-separated rational weights");

  auto* hbar_cmd = app.add_subcommand("hbar", "bounded closure membership");
  add_common(hbar_cmd);
  hbar_cmd->add_option("--target", target, "comma-separated integer vector");
  hbar_cmd->add_flag("--cm-check", cm_check, "run the necessary criterion instead");
  hbar_cmd->add_option("--bound", bound, "witness search bound");
  hbar_cmd->add_option("--degree-bound", degree_bound, "enumeration degree bound");
  hbar_cmd->add_option("--witness-bound", witness_bound, "witness search bound");

  auto* volume_cmd = app.add_subcommand("volume", "normalized volume of conv(A u 0)");
  add_common(volume_cmd);

  auto* corpus_cmd = app.add_subcommand("corpus", "run the bundled fixture corpus");
  corpus_cmd->add_option("--dir", dir, "fixture directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (corpus_cmd->parsed()) return run_corpus(dir);

    InputSpec spec = load_input(input);
    if (!bound.empty()) {
      spec.degree_bound = parse_rational(bound);
      spec.witness_bound = parse_rational(bound);
    }
    if (!degree_bound.empty()) spec.degree_bound = parse_rational(degree_bound);
    if (!witness_bound.empty()) spec.witness_bound = parse_rational(witness_bound);
    SemigroupPresentation p(spec.generators, spec.labels);

    if (analyze->parsed()) {
      auto start = std::chrono::steady_clock::now();
      json report = analysis_report(spec, trace);
      if (timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        report["timing_ms"] = ms;
      }
      emit(report, format);
      return 0;
    }
    if (toric_cmd->parsed()) {
      RatVec w = weight_list.empty() ? RatVec(p.size(), Rat(1))
                                     : parse_weight_list(weight_list, p.size());
      json j = presentation_json(p, spec.name);
      j["toric_ideal"] = basis_json(toric_ideal_basis(p, MonomialOrder::weighted(w)));
      emit(j, format);
      return 0;
    }
    if (umbrella_cmd->parsed()) {
      WeightVector w{weight_list.empty() ? RatVec(p.size(), Rat(1))
                                         : parse_weight_list(weight_list, p.size())};
      json j = presentation_json(p, spec.name);
      j["weights"] = [&] {
        json arr = json::array();
        for (const Rat& x : w.values) arr.push_back(to_string(x));
        return arr;
      }();
      j["umbrella"] = umbrella_json(Umbrella(p, w));
      j["cone_faces"] = cone_faces_json(codim1_cone_faces(p));
      emit(j, format);
      return 0;
    }
    if (hbar_cmd->parsed()) {
      json j = presentation_json(p, spec.name);
      if (cm_check) {
        Rat db = spec.degree_bound.value_or(default_bound(p));
        Rat wb = spec.witness_bound.value_or(default_bound(p));
        j["hbar"] = cm_report_json(cm_necessary_check(p, db, wb));
      } else {
        if (target.empty())
          throw invalid_input_error("hbar needs --target or --cm-check");
        IntVec h;
        std::string tok;
        std::istringstream in(target);
        while (std::getline(in, tok, ',')) h.push_back(Int(tok));
        Rat wb = spec.witness_bound.value_or(default_bound(p));
        SemigroupSearch search(p);
        j["target"] = detail::int_vec_json(h);
        j["hbar"] = hbar_verdict_json(hbar_member(search, h, wb),
                                      newtoric::detail::witness_faces(search));
      }
      emit(j, format);
      return 0;
    }
    if (volume_cmd->parsed()) {
      json j = presentation_json(p, spec.name);
      j["volume"] = to_int64(normalized_volume(p));
      emit(j, format);
      return 0;
    }
  } catch (const not_positive_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const invariant_error& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 4;
  } catch (const invalid_input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
