#include "apseq/report.hpp"

namespace apseq {

namespace {

Json big(const BigInt& x) { return to_decimal(x); }

template <class T>
Json opt(const std::optional<T>& x) {
  return x ? Json(*x) : Json(nullptr);
}

}  // namespace

Json to_json(const APResult& r) {
  Json j;
  j["d"] = r.d;
  j["best_len"] = r.best_len;
  j["best_start"] = r.best_start;
  j["prefix_len"] = r.prefix_len;
  j["status"] = to_string(r.status);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const DifferenceFamily& f) {
  Json j;
  j["family"] = f.name;
  Json params = Json::object();
  for (const auto& [k, v] : f.params) params[k] = v;
  j["params"] = params;
  j["d"] = big(f.d);
  j["predicted_lower"] = big(f.predicted_lower);
  j["predicted_upper"] = f.predicted_upper ? big(*f.predicted_upper) : Json(nullptr);
  j["growth_exponent"] = f.growth;
  j["source"] = f.source;
  return j;
}

Json to_json(const BoundReport& r) {
  Json j = to_json(r.family);
  j["measured"] = r.measured ? Json(r.measured->best_len) : Json(nullptr);
  j["measured_start"] = r.measured ? Json(r.measured->best_start) : Json(nullptr);
  j["prefix_len"] = r.measured ? Json(r.measured->prefix_len) : Json(nullptr);
  j["status"] = r.measured ? Json(to_string(r.measured->status)) : Json(nullptr);
  j["verdict"] = to_string(r.verdict);
  if (!r.message.empty()) j["message"] = r.message;
  return j;
}

Json to_json(const ColumnGroup& g, const Alphabet& alphabet) {
  Json j;
  j["order"] = g.order;
  j["exponent"] = g.exponent;
  j["abelian"] = g.abelian;
  j["transitive"] = g.transitive;
  Json gens = Json::array();
  for (const auto& p : g.generators) gens.push_back(p.cycles(alphabet));
  j["generators"] = gens;
  return j;
}

Json to_json(const PalindromicityReport& p, const Alphabet& alphabet) {
  Json j;
  j["g_palindromic"] = p.g_witness.has_value();
  j["g_witness"] = p.g_witness ? Json(p.g_witness->cycles(alphabet)) : Json(nullptr);
  j["inverse_palindromic"] = p.inverse_palindromic;
  return j;
}

Json to_json(const RecurrenceReport& r) {
  Json j;
  j["c"] = r.c;
  j["L"] = r.L;
  j["R_formula"] = big(r.R_formula);
  j["N_bound"] = r.N_bound;
  j["N_exact"] = opt(r.N_exact);
  j["zeta2_exact"] = opt(r.zeta2_exact);
  j["R_exact"] = opt(r.R_exact);
  return j;
}

Json to_json(const SetGraph& g, const Alphabet& alphabet) {
  auto set = [&](std::size_t v) {
    Json s = Json::array();
    for (Letter a : g.nodes[v]) s.push_back(alphabet.name(a));
    return s;
  };
  Json j;
  Json nodes = Json::array();
  for (std::size_t v = 0; v < g.nodes.size(); ++v) nodes.push_back(set(v));
  j["nodes"] = nodes;
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"digit", e.digit}, {"to", e.to}});
  j["edges"] = edges;
  Json minimal = Json::array();
  for (std::size_t v : g.minimal) minimal.push_back(set(v));
  j["minimal"] = minimal;
  j["column_number"] = g.column_number;
  return j;
}

Json to_json(const VdwUpper& v) {
  Json j;
  j["value"] = big(v.value);
  j["k"] = v.k;
  j["E"] = big(v.E);
  j["R"] = big(v.R);
  j["R_source"] = v.R_from_formula ? "formula" : "override";
  j["N0"] = v.N0;
  return j;
}

Json to_json(const VdwLower& v) {
  Json j;
  j["progression_length"] = big(v.progression_length);
  j["window_length"] = big(v.window_length);
  j["N0"] = v.N0;
  j["prime"] = v.prime;
  j["prime_exponent"] = v.prime_exponent;
  j["B_ceil"] = v.B_ceil;
  j["trace"] = v.trace;
  return j;
}

Json analyze(const AnalysisTarget& t) {
  const Substitution& sub = t.sub;
  const Alphabet& A = sub.alphabet();
  Json j;
  j["name"] = t.name;
  j["alphabet"] = A.letters();
  j["c"] = sub.size();
  j["L"] = sub.length();
  j["valid"] = true;
  Json cols = Json::array();
  for (std::size_t i = 0; i < sub.length(); ++i) cols.push_back(to_string(sub.column(i).kind()));
  j["columns"] = cols;
  const bool primitive = is_primitive(sub);
  const bool bijective = sub.is_bijective();
  j["primitive"] = primitive;
  j["bijective"] = bijective;
  auto ap = aperiodicity_certificate(sub);
  j["aperiodicity"] = {{"verdict", to_string(ap.verdict)}, {"period", ap.period}, {"reason", ap.reason}};
  try {
    auto fp = t.fixed_point();
    j["fixed_point"] = {{"seed", A.name(fp.seed)}, {"power", fp.power}};
    auto h = height(sub, std::uint64_t{1} << 16);
    j["height"] = {{"value", h.height}, {"prefix_len", h.prefix_len}};
  } catch (const Error& e) {
    j["fixed_point"] = nullptr;
    j["height"] = {{"error", e.what()}};
  }
  if (bijective) {
    try {
      auto norm = normalize_zero_column(sub);
      j["normalized_power"] = norm.power;
      auto g = ColumnGroup::generate(sub);
      j["group"] = to_json(g, A);
      j["palindromicity"] = to_json(palindromicity(sub), A);
      if (norm.power > 1) j["normalized_palindromicity"] = to_json(palindromicity(norm.sub), A);
    } catch (const ResourceError& e) {
      j["group"] = {{"error", e.what()}};
    }
  } else {
    j["group"] = nullptr;
    j["palindromicity"] = nullptr;
  }
  if (primitive) {
    Json rec;
    try {
      rec = to_json(recurrence_constants(sub, RecurrenceMode::Exact));
    } catch (const ResourceError& e) {
      rec = to_json(recurrence_constants(sub, RecurrenceMode::Formula));
      rec["N_exact"] = opt(saturation_level(sub));
      rec["diagnostic"] = e.what();
    }
    j["recurrence"] = rec;
  } else {
    j["recurrence"] = to_json(recurrence_constants(sub, RecurrenceMode::Formula));
  }
  j["families"] = applicable_families(t);
  return j;
}

}  // namespace apseq
