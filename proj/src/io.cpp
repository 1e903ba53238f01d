#include "triplication/io.hpp"

#include <fstream>

namespace triplication {

namespace {

json pairs_json(std::span<const Pair> pairs) {
  json out = json::array();
  for (const Pair& p : pairs) out.push_back({p.x, p.y});
  return out;
}

std::vector<Pair> pairs_from(const json& j) {
  std::vector<Pair> out;
  for (const json& p : j) {
    if (!p.is_array() || p.size() != 2) throw Error(ErrorCode::InvalidInput, "pair " + p.dump() + " is not [x, y]");
    out.push_back({p[0].get<int>(), p[1].get<int>()});
  }
  return out;
}

json rows_json(std::span<const Pair> pairs) {
  json rows = json::array();
  if (pairs.empty()) return rows;
  rows.push_back(pairs_json(pairs.subspan(0, 1)));
  for (std::size_t i = 1; i < pairs.size(); i += 3) {
    rows.push_back(pairs_json(pairs.subspan(i, std::min<std::size_t>(3, pairs.size() - i))));
  }
  return rows;
}

std::vector<Pair> pairs_from_rows(const json& rows) {
  if (!rows.is_array()) throw Error(ErrorCode::InvalidInput, "\"rows\" must be an array");
  std::vector<Pair> out;
  for (const json& row : rows) {
    std::vector<Pair> part = pairs_from(row);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// Wraps nlohmann's exceptions so malformed files map to InvalidInput.
template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed ") + what + ": " + e.what());
  }
}

std::optional<Pairing> optional_pairing(const json& j, const char* field, int m) {
  if (!j.contains(field) || j[field].is_null()) return std::nullopt;
  const json& v = j[field];
  if (v.is_string()) return parse_pairing_literal(m, v.get<std::string>());
  Pairing raw(m, pairs_from(v));
  try {
    return order_by_difference(raw);
  } catch (const Error&) {
    return raw;
  }
}

}  // namespace

json pairing_to_json(const Pairing& p) { return {{"modulus", p.modulus()}, {"pairs", pairs_json(p.pairs())}}; }

Pairing pairing_from_json(const json& j) {
  return guarded("pairing", [&] {
    int n = j.contains("modulus") ? j.at("modulus").get<int>() : j.at("order").get<int>();
    return Pairing(n, pairs_from(j.at("pairs")));
  });
}

json table_to_json(const TriplicationTable& table) {
  return {{"m", table.order()}, {"key", table.key()}, {"rows", rows_json(table.pairs())}, {"signs", table.signs()}};
}

TriplicationTable table_from_json(const json& j) {
  auto [m, pairs] = guarded("table", [&] { return std::pair{j.at("m").get<int>(), pairs_from_rows(j.at("rows"))}; });
  return TriplicationTable::validate(m, std::move(pairs));
}

json solution_to_json(const CongruousTable& solution) {
  return {{"scenario", to_string(solution.kind)}, {"r", solution.radix}, {"rows", rows_json(solution.values)}};
}

CongruousTable solution_from_json(const json& j) {
  return guarded("solution", [&] {
    return CongruousTable{parse_scenario_kind(j.at("scenario").get<std::string>()), j.at("r").get<int>(),
                          pairs_from_rows(j.at("rows"))};
  });
}

json stats_to_json(const SolveStats& stats) {
  return {{"nodes", stats.nodes}, {"backtracks", stats.backtracks}, {"seconds", stats.seconds}};
}

json starter_to_json(const Pairing& starter, bool ordered, const std::optional<Provenance>& provenance) {
  json out{{"order", starter.modulus()}, {"pairs", pairs_json(starter.pairs())}, {"ordered", ordered}};
  if (provenance) {
    out["provenance"] = {{"tt", provenance->table},
                         {"scenario", provenance->scenario},
                         {"solution_index", provenance->solution_index}};
  }
  return out;
}

const char* to_string(TemplateMode mode) {
  switch (mode) {
    case TemplateMode::OneStarter: return "one-starter";
    case TemplateMode::ThreeStarter: return "three-starter";
    case TemplateMode::Epicycloidal: return "epicycloidal";
  }
  return "?";
}

TemplateMode parse_template_mode(const std::string& text) {
  if (text == "one-starter") return TemplateMode::OneStarter;
  if (text == "three-starter") return TemplateMode::ThreeStarter;
  if (text == "epicycloidal") return TemplateMode::Epicycloidal;
  throw Error(ErrorCode::InvalidInput, "unknown template mode '" + text + "'");
}

TemplateSpec template_spec_from_json(const json& j) {
  return guarded("template spec", [&] {
    TemplateSpec spec;
    spec.mode = parse_template_mode(j.value("mode", std::string("one-starter")));
    spec.m = j.at("m").get<int>();
    auto t0 = optional_pairing(j, "T0", spec.m);
    if (!t0) throw Error(ErrorCode::InvalidInput, "template spec has no T0");
    spec.t0 = *t0;
    spec.t1 = optional_pairing(j, "T1", spec.m);
    spec.t2 = optional_pairing(j, "T2", spec.m);
    if (j.contains("mu") && !j["mu"].is_null()) spec.mu = j["mu"].get<int>();
    if (j.contains("key") && !j["key"].is_null()) spec.key = j["key"].get<int>();
    return spec;
  });
}

json template_spec_to_json(const TemplateSpec& spec) {
  json out{{"mode", to_string(spec.mode)}, {"m", spec.m}, {"T0", pairs_json(spec.t0.pairs())}};
  if (spec.t1) out["T1"] = pairs_json(spec.t1->pairs());
  if (spec.t2) out["T2"] = pairs_json(spec.t2->pairs());
  if (spec.mu) out["mu"] = *spec.mu;
  if (spec.key) out["key"] = *spec.key;
  return out;
}

TemplateBase base_of(const TemplateSpec& spec) {
  if (spec.t0.modulus() != spec.m) throw Error(ErrorCode::InvalidInput, "T0 is not over Z_" + std::to_string(spec.m));
  switch (spec.mode) {
    case TemplateMode::OneStarter:
      return one_starter_base(spec.t0);
    case TemplateMode::ThreeStarter:
      if (!spec.t1 || !spec.t2) throw Error(ErrorCode::InvalidInput, "three-starter mode needs T1 and T2");
      for (const Pairing* p : {&*spec.t1, &*spec.t2}) {
        if (classify(*p).kind < StarterKind::Starter) {
          throw Error(ErrorCode::InvalidInput, "pairing " + format_pairs(p->pairs()) + " is not a starter");
        }
      }
      return make_base(spec.t0, *spec.t1, *spec.t2);
    case TemplateMode::Epicycloidal:
      if (!spec.mu) throw Error(ErrorCode::InvalidInput, "epicycloidal mode needs mu");
      return epicycloidal_base(spec.t0, *spec.mu);
  }
  throw Error(ErrorCode::InvalidInput, "unknown template mode");
}

TriplicationTable table_of(const TemplateSpec& spec, int key) { return template_table(base_of(spec), key); }

Pairing parse_pairing_literal(int m, const std::string& text) {
  Pairing raw(m, parse_pair_list(text));
  try {
    return order_by_difference(raw);
  } catch (const Error&) {
    // Not a pseudostarter; leave it for classification to report.
    return raw;
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  return guarded("JSON file", [&] { return json::parse(in); });
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace triplication
