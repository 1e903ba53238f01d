#pragma once

// JSON encodings of pairings, tables, discriminator tables, starters and
// template specifications.

#include <optional>
#include <string>

#include "json.hpp"

#include "triplication/msp.hpp"
#include "triplication/templates.hpp"

namespace triplication {

using nlohmann::json;

/// {"modulus": m, "pairs": [[x, y], ...]}
json pairing_to_json(const Pairing& p);
/// Accepts "modulus" or "order" for the modulus.
Pairing pairing_from_json(const json& j);

/// {"m": m, "key": t, "rows": [[[t, t]], [[u, v], [u, v], [u, v]], ...], "signs": [...]}
json table_to_json(const TriplicationTable& table);
/// Validates; throws NotATable on a bad table and InvalidInput on bad JSON.
TriplicationTable table_from_json(const json& j);

/// {"scenario": "mod" | "carry", "r": r, "rows": [...]} with the table's row layout.
json solution_to_json(const CongruousTable& solution);
CongruousTable solution_from_json(const json& j);

json stats_to_json(const SolveStats& stats);

struct Provenance {
  json table;
  std::string scenario;
  int solution_index = 0;
};

/// {"order": n, "pairs": [...], "ordered": b, "provenance": {...}}
json starter_to_json(const Pairing& starter, bool ordered, const std::optional<Provenance>& provenance = {});

enum class TemplateMode { OneStarter, ThreeStarter, Epicycloidal };

const char* to_string(TemplateMode mode);
TemplateMode parse_template_mode(const std::string& text);

struct TemplateSpec {
  TemplateMode mode = TemplateMode::OneStarter;
  int m = 0;
  Pairing t0;
  std::optional<Pairing> t1;
  std::optional<Pairing> t2;
  std::optional<int> mu;
  std::optional<int> key;
};

/// Pairings may be given as "x,y;x,y" strings or as [[x, y], ...] arrays.
TemplateSpec template_spec_from_json(const json& j);
json template_spec_to_json(const TemplateSpec& spec);

/// Base triple named by the spec. Three-starter mode requires T1 and T2 to be
/// starters.
TemplateBase base_of(const TemplateSpec& spec);
/// Table for `key` built the way the spec's mode prescribes.
TriplicationTable table_of(const TemplateSpec& spec, int key);

/// A pairing literal with its pairs sorted by difference class; orientation
/// is kept.
Pairing parse_pairing_literal(int m, const std::string& text);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace triplication
