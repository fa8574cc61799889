#include "skewbi/json_io.hpp"

namespace skewbi {

using nlohmann::json;

json to_json(const Rational& r) { return to_string(r); }

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const std::vector<std::pair<Rational, std::size_t>>& spectrum) {
  json out = json::array();
  for (const auto& [value, mult] : spectrum)
    out.push_back({{"value", to_string(value)}, {"multiplicity", mult}});
  return out;
}

json to_json(const IrrLabel& label) {
  return {{"n", label.n}, {"sign", label.sign > 0 ? "+" : "-"}};
}

json to_json(const RelationReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries)
    entries.push_back({{"relation", e.relation}, {"holds", e.holds}});
  return {{"entries", std::move(entries)}, {"all_pass", report.all_pass()}};
}

json to_json(const BITriple& t) {
  return {{"X", to_json(t.X)}, {"Y", to_json(t.Y)}, {"Z", to_json(t.Z)}};
}

namespace {

json twist_json(const TwistPair& t) {
  return json::array({t.eps, t.eps_prime});
}

}  // namespace

json to_json(const BIModuleParams& p) {
  return {{"parity", p.parity == Parity::Odd ? "odd" : "even"},
          {"n", p.n},
          {"a", to_string(p.a)},
          {"b", to_string(p.b)},
          {"c", to_string(p.c)},
          {"twist", twist_json(p.twist)},
          {"name", to_string(p)}};
}

json to_json(const Identification& id) {
  json out = {{"parity", id.parity == Parity::Odd ? "odd" : "even"},
              {"n", id.n},
              {"twist", twist_json(id.twist)}};
  if (id.a) out["a"] = to_string(*id.a);
  if (id.b) out["b"] = to_string(*id.b);
  if (id.c) out["c"] = to_string(*id.c);
  if (id.a_sq) out["a_sq"] = to_string(*id.a_sq);
  if (id.b_sq) out["b_sq"] = to_string(*id.b_sq);
  if (id.c_sq) out["c_sq"] = to_string(*id.c_sq);
  return out;
}

json to_json(const LeonardVerdict& v) {
  json ops = json::array();
  for (const auto& d : v.per_operator)
    ops.push_back({{"name", d.name},
                   {"eigenvalues", to_json(d.eigenvalues)},
                   {"rational_spectrum", d.rational_spectrum},
                   {"diagonalizable", d.diagonalizable},
                   {"simple_spectrum", d.simple_spectrum},
                   {"path_ordering_found", d.path_ordering_found},
                   {"others_tridiagonal",
                    json::array({d.first_other_tridiagonal,
                                 d.second_other_tridiagonal})}});
  return {{"is_leonard", v.is_leonard}, {"operators", std::move(ops)}};
}

json to_json(const MatchReport& m) {
  return {{"v1_dim", m.v1_dim},
          {"x_matches", m.x_matches},
          {"y_matches", m.y_matches},
          {"z_matches", m.z_matches},
          {"closure_ok", m.closure_ok},
          {"all_pass", m.all_pass()}};
}

json to_json(const SummandReport& s) {
  return {{"left", to_json(s.left)},
          {"right", to_json(s.right)},
          {"multiplicity", s.multiplicity},
          {"dim", s.dim},
          {"factor_order",
           s.order == FactorOrder::AsGiven ? "as-given" : "swapped"},
          {"params", to_json(s.predicted)},
          {"observed", to_json(s.observed)},
          {"identification_consistent", s.identification_consistent},
          {"spectrumX", to_json(s.spectrum_x)},
          {"spectrumY", to_json(s.spectrum_y)},
          {"spectrumZ", to_json(s.spectrum_z)},
          {"leonard", s.leonard}};
}

json to_json(const DecompositionReport& r) {
  json summands = json::array();
  for (const auto& s : r.summands) summands.push_back(to_json(s));
  json base = json::array();
  for (unsigned b = 0; b < 32; ++b)
    if (r.base_mask & (1u << b)) base.push_back(b);
  return {{"d", r.d},
          {"base", std::move(base)},
          {"dim", r.total_dim},
          {"dimension_ok", r.dimension_ok},
          {"summands", std::move(summands)},
          {"adjacency_spectrum", to_json(r.adjacency_spectrum)},
          {"spectrum_partition_ok", r.spectrum_partition_ok}};
}

}  // namespace skewbi
