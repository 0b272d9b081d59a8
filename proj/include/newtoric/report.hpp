#pragma once

#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "newtoric/newton.hpp"

namespace newtoric {

using json = nlohmann::ordered_json;

struct InputSpec {
  std::string name;
  IntMatrix generators;
  std::vector<std::string> labels;
  std::optional<Rat> degree_bound, witness_bound;
};

inline IntVec parse_int_vector(const json& arr) {
  if (!arr.is_array() || arr.empty())
    throw invalid_input_error("generator must be a nonempty integer array");
  IntVec v;
  for (const auto& x : arr) {
    if (x.is_number_integer())
      v.push_back(Int(x.get<std::int64_t>()));
    else if (x.is_string())
      v.push_back(Int(x.get<std::string>()));
    else
      throw invalid_input_error("generator entries must be integers");
  }
  return v;
}

/// Accepts the JSON input format; generator arrays are the columns of
/// the presentation matrix.
inline InputSpec parse_input_json(const json& j) {
  InputSpec spec;
  if (!j.is_object() || !j.contains("generators"))
    throw invalid_input_error("input needs a \"generators\" array");
  spec.name = j.value("name", std::string("input"));
  std::vector<IntVec> cols;
  for (const auto& g : j.at("generators")) cols.push_back(parse_int_vector(g));
  spec.generators = IntMatrix::from_columns(cols);
  if (j.contains("labels"))
    for (const auto& l : j.at("labels")) spec.labels.push_back(l.get<std::string>());
  if (j.contains("options")) {
    const auto& o = j.at("options");
    if (o.contains("degree_bound"))
      spec.degree_bound = parse_rational(o.at("degree_bound").get<std::string>());
    if (o.contains("witness_bound"))
      spec.witness_bound = parse_rational(o.at("witness_bound").get<std::string>());
    if (o.contains("tiebreak") && o.at("tiebreak").get<std::string>() != "grevlex")
      throw invalid_input_error("only the grevlex tiebreak is supported");
  }
  return spec;
}

/// Plain text alternative: one generator per line, whitespace entries.
inline InputSpec parse_input_matrix(const std::string& text, std::string name) {
  std::vector<IntVec> cols;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream row(line);
    IntVec v;
    std::string tok;
    while (row >> tok) v.push_back(Int(tok));
    if (!v.empty()) cols.push_back(std::move(v));
  }
  if (cols.empty()) throw invalid_input_error("no generators in matrix input");
  InputSpec spec;
  spec.name = std::move(name);
  spec.generators = IntMatrix::from_columns(cols);
  return spec;
}

inline InputSpec parse_input(const std::string& text, const std::string& name) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') {
      json j;
      try {
        j = json::parse(text);
      } catch (const json::parse_error& e) {
        throw invalid_input_error(std::string("bad JSON input: ") + e.what());
      }
      return parse_input_json(j);
    }
    break;
  }
  return parse_input_matrix(text, name);
}

/// Default enumeration bound: from the environment when set, otherwise
/// three times the largest generator level.
inline Rat default_bound(const SemigroupPresentation& p) {
  if (const char* env = std::getenv("NEWTORIC_DEFAULT_BOUND"))
    return parse_rational(env);
  return default_face_bound(p);
}

namespace detail {

inline json int_vec_json(const IntVec& v) {
  json arr = json::array();
  for (const Int& x : v) arr.push_back(to_int64(x));
  return arr;
}

inline json rat_vec_json(const RatVec& v) {
  json arr = json::array();
  for (const Rat& x : v) arr.push_back(to_string(x));
  return arr;
}

inline json members_json(const std::vector<std::size_t>& members) {
  json arr = json::array();
  for (std::size_t m : members) arr.push_back(m + 1);  // 1-based like the labels
  return arr;
}

inline json queue_json(const std::vector<QueueEntry>& entries) {
  json arr = json::array();
  for (const QueueEntry& e : entries) arr.push_back({e.i + 1, e.j + 1});
  return arr;
}

}  // namespace detail

inline json presentation_json(const SemigroupPresentation& p, const std::string& name) {
  json j;
  j["name"] = name;
  j["generators"] = json::array();
  for (std::size_t c = 0; c < p.size(); ++c)
    j["generators"].push_back(detail::int_vec_json(p.generator(c)));
  j["labels"] = p.labels();
  j["dimension"] = p.dim();
  j["rank"] = p.rank();
  json grading = json::array();
  for (const Int& x : p.positive_grading()) grading.push_back(to_string(x));
  j["positive_grading"] = grading;
  return j;
}

inline json umbrella_json(const Umbrella& u) {
  json j;
  j["facets"] = json::array();
  for (const Facet& f : u.facets()) {
    json fj;
    fj["members"] = detail::members_json(f.members);
    fj["functional"] = detail::rat_vec_json(f.functional);
    j["facets"].push_back(fj);
  }
  j["faces_by_dim"] = json::object();
  for (const UmbrellaFace& f : u.faces()) {
    std::string key = std::to_string(f.dim);
    if (!j["faces_by_dim"].contains(key)) j["faces_by_dim"][key] = json::array();
    j["faces_by_dim"][key].push_back(detail::members_json(f.members));
  }
  j["interior_faces"] = json::array();
  for (const UmbrellaFace& f : u.interior_faces())
    j["interior_faces"].push_back(detail::members_json(f.members));
  return j;
}

inline json cone_faces_json(const std::vector<ConeFacet>& faces) {
  json arr = json::array();
  for (const ConeFacet& f : faces) {
    json fj;
    fj["members"] = detail::members_json(f.members);
    json fn = json::array();
    for (const Int& x : f.functional) fn.push_back(to_string(x));
    fj["functional"] = fn;
    arr.push_back(fj);
  }
  return arr;
}

inline json basis_json(const GroebnerBasis& g) {
  json j;
  j["weight"] = detail::rat_vec_json(g.order.weight());
  j["tiebreak"] = "grevlex";
  j["reduced"] = g.reduced;
  j["elements"] = json::array();
  for (const Polynomial& p : g.elements) j["elements"].push_back(p.render(g.order));
  return j;
}

inline json newton_json(const NewtonResult& r) {
  json j;
  j["initial_queue"] = detail::queue_json(r.trace.initial_queue);
  j["facets_from_leading_terms"] = json::array();
  for (const auto& f : r.trace.facets)
    j["facets_from_leading_terms"].push_back(detail::members_json(f));
  j["queue_after_interior"] = detail::queue_json(r.trace.queue_after_interior);
  j["iterations"] = json::array();
  for (const IterationTrace& it : r.trace.iterations) {
    json ij;
    ij["basis"] = it.basis;
    ij["removed"] = json::array();
    for (const RemovalRecord& rec : it.removed) {
      json rj;
      rj["pair"] = {rec.pair.i + 1, rec.pair.j + 1};
      rj["normal_form"] = rec.normal_form;
      rj["degree_before"] = to_string(rec.degree_before);
      rj["degree_after"] = to_string(rec.degree_after);
      ij["removed"].push_back(rj);
    }
    ij["queue_after_removal"] = detail::queue_json(it.queue_after_removal);
    ij["appended"] = json::array();
    for (const AppendedGenerator& a : it.appended) {
      json aj;
      aj["generator"] = detail::int_vec_json(a.column);
      aj["degree"] = to_string(a.degree);
      ij["appended"].push_back(aj);
    }
    ij["queue_after_extension"] = detail::queue_json(it.queue_after_extension);
    j["iterations"].push_back(ij);
  }
  j["enlarged_generators"] = json::array();
  for (std::size_t c = 0; c < r.enlarged.size(); ++c)
    j["enlarged_generators"].push_back(detail::int_vec_json(r.enlarged.generator(c)));
  j["weights"] = detail::rat_vec_json(r.weights.values);
  j["basis"] = basis_json(r.basis);
  j["graded_generators"] = json::array();
  for (const Polynomial& p : r.graded_generators)
    j["graded_generators"].push_back(p.render(r.basis.order));
  return j;
}

inline json hbar_verdict_json(const HbarVerdict& v,
                              const std::vector<ConeFacet>& faces) {
  json j;
  switch (v.status) {
    case HbarVerdict::Status::InH: j["status"] = "in_semigroup"; break;
    case HbarVerdict::Status::Member: j["status"] = "member"; break;
    case HbarVerdict::Status::NotMemberWithinBound:
      j["status"] = "not_member_within_bound";
      break;
  }
  j["witness_bound"] = to_string(v.bound);
  j["witnesses"] = json::array();
  for (const auto& [face_idx, b] : v.witnesses) {
    json wj;
    wj["face"] = face_idx < faces.size() ? detail::members_json(faces[face_idx].members)
                                         : json::array();
    wj["witness"] = detail::int_vec_json(b);
    j["witnesses"].push_back(wj);
  }
  return j;
}

inline json cm_report_json(const CmReport& r) {
  json j;
  j["degree_bound"] = to_string(r.degree_bound);
  j["witness_bound"] = to_string(r.witness_bound);
  j["passes_within_bounds"] = r.passes_within_bounds;
  j["counterexamples"] = json::array();
  for (const IntVec& c : r.counterexamples)
    j["counterexamples"].push_back(detail::int_vec_json(c));
  return j;
}

/// The full pipeline report: presentation, umbrella, cone faces, minor
/// bound, enlargement run, graded presentation, volume, and the bounded
/// Cohen-Macaulay obstruction search.
inline json analysis_report(const InputSpec& spec, bool with_trace = true) {
  SemigroupPresentation p(spec.generators, spec.labels);
  json j = presentation_json(p, spec.name);
  j["max_minor"] = to_int64(p.max_minor_bound());
  Umbrella one(p, WeightVector::ones(p.size()));
  j["umbrella"] = umbrella_json(one);
  j["cone_faces"] = cone_faces_json(codim1_cone_faces(p));
  NewtonResult result = newton_filtration(p);
  j["newton"] = newton_json(result);
  if (!with_trace) j["newton"].erase("iterations");
  j["volume"] = to_int64(normalized_volume(p));
  if (p.rank() >= 2) {
    Rat db = spec.degree_bound.value_or(default_bound(p));
    Rat wb = spec.witness_bound.value_or(default_bound(p));
    j["hbar"] = cm_report_json(cm_necessary_check(p, db, wb));
  }
  return j;
}

}  // namespace newtoric
