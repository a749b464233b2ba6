#pragma once

// Text and JSON rendering. JSON needs nlohmann/json; only the CLI and the
// tests include this header.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "corpus.hpp"
#include "verify.hpp"

namespace purespec {

using Json = nlohmann::ordered_json;

enum class Section { ideals, pure, spectra, classify, all };

inline Section parse_section(const std::string& s) {
  if (s == "ideals") return Section::ideals;
  if (s == "pure") return Section::pure;
  if (s == "spectra") return Section::spectra;
  if (s == "classify") return Section::classify;
  if (s == "all") return Section::all;
  throw ConfigError("unknown section '" + s + "'");
}

// Ideals print as member sets, except the whole ring, which prints as A.
inline std::string ideal_text(const Ideal& i) { return i.is_proper() ? i.to_string() : "A"; }

inline Json ideal_json(const Ideal& i) {
  Json out = Json::array();
  i.members().for_each([&](Element e) { out.push_back(i.r().name(e)); });
  return out;
}

inline Json classification_json(const ClassReport& c) {
  auto w = c.witnesses;
  std::sort(w.begin(), w.end());
  return Json{{"reduced", c.is_reduced},
              {"gelfand", c.is_gelfand},
              {"mp", c.is_mp},
              {"krull_dimension", c.krull_dimension},
              {"pp_ring", c.is_pp_ring},
              {"von_neumann_regular", c.is_von_neumann_regular},
              {"pure_ideals_idempotent_generated", c.all_pure_idempotent_generated},
              {"semi_noetherian", c.is_semi_noetherian},
              {"witnesses", w}};
}

inline std::size_t catalog_position(const std::string& id) {
  auto ids = all_check_ids();
  return static_cast<std::size_t>(std::find(ids.begin(), ids.end(), id) - ids.begin());
}

// Checks appear in catalog order whatever order they were requested in.
inline Json checks_json(std::vector<CheckResult> checks) {
  std::stable_sort(checks.begin(), checks.end(), [](const auto& a, const auto& b) {
    return catalog_position(a.check_id) < catalog_position(b.check_id);
  });
  Json out = Json::array();
  for (const auto& c : checks) out.push_back(Json{{"id", c.check_id}, {"status", to_string(c.status)}, {"details", c.details}});
  return out;
}

// {ring, order, classification, checks}. order is null for Z.
inline Json ring_report_json(const std::string& label, std::optional<std::size_t> order,
                             const std::optional<ClassReport>& c, const std::vector<CheckResult>& checks) {
  Json out;
  out["ring"] = label;
  out["order"] = order ? Json(*order) : Json(nullptr);
  out["classification"] = c ? classification_json(*c) : Json(nullptr);
  out["checks"] = checks_json(checks);
  return out;
}

inline Json ring_report_json(const RingReport& r) {
  return ring_report_json(r.label, r.order, r.classification, r.checks);
}

inline Json corpus_report_json(const CorpusReport& rep) {
  Json spec;
  spec["zmod_max"] = rep.spec.zmod_max;
  spec["products"] = rep.spec.products;
  spec["product_factors"] = rep.spec.product_factors;
  spec["product_max_order"] = rep.spec.product_max_order;
  Json pq = Json::array();
  for (auto [p, d] : rep.spec.polyquot) pq.push_back(std::to_string(p) + ":" + std::to_string(d));
  spec["polyquot"] = pq;
  std::vector<std::string> checks = rep.spec.checks;
  std::sort(checks.begin(), checks.end(), [](const auto& a, const auto& b) { return catalog_position(a) < catalog_position(b); });
  spec["checks"] = checks;

  Json out;
  out["caveat"] = rep.caveat;
  out["corpus"] = spec;
  out["ring_count"] = rep.rings.size();
  out["counts"] = Json{{"pass", rep.counts.pass}, {"fail", rep.counts.fail}, {"skipped", rep.counts.skipped}};
  out["conjecture"] = Json{{"pass", rep.conjecture_pass}, {"fail", rep.conjecture_fail}};
  Json rings = Json::array();
  for (const auto& r : rep.rings) rings.push_back(ring_report_json(r));
  out["rings"] = rings;
  return out;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---- text sections for `ring --show` ----

inline std::string yes(bool b) { return b ? "yes" : "no"; }

inline std::string ideals_text(const RingAnalysis& a) {
  std::ostringstream os;
  os << "ideals (" << a.ideals().size() << "):\n";
  for (const auto& i : a.ideals()) {
    os << "  " << ideal_text(i);
    std::vector<std::string> tags;
    if (is_prime_ideal(i)) tags.push_back(std::find(a.maximals().begin(), a.maximals().end(), i) != a.maximals().end() ? "maximal" : "prime");
    if (is_pure(i)) tags.push_back("pure");
    for (std::size_t k = 0; k < tags.size(); ++k) os << (k ? ", " : "  [") << tags[k] << (k + 1 == tags.size() ? "]" : "");
    os << "\n";
  }
  return os.str();
}

inline std::string pure_text(const RingAnalysis& a) {
  std::ostringstream os;
  os << "pure ideals (" << a.pure_info().size() << "):\n";
  for (const auto& p : a.pure_info()) {
    os << "  " << ideal_text(p.ideal) << "  generator " << a.r().name(p.generator);
    if (p.purely_maximal) os << "  purely-maximal";
    else if (p.purely_prime) os << "  purely-prime";
    if (p.purely_minimal) os << "  purely-minimal";
    os << "\n";
  }
  return os.str();
}

inline std::string space_text(const char* title, const FinTopSpace& x) {
  auto t = topology_props(x);
  std::ostringstream os;
  os << "  " << title << ": " << x.size() << " points, " << x.opens().size() << " opens, "
     << (t.is_connected ? "connected" : "disconnected") << ", " << (t.is_hausdorff ? "Hausdorff" : "not Hausdorff") << "\n";
  for (const auto& p : x.points()) os << "    " << ideal_text(p.ideal) << "\n";
  return os.str();
}

inline std::string spectra_text(const RingAnalysis& a) {
  std::ostringstream os;
  os << "spectra:\n";
  os << space_text("Spec (Zariski)", *a.space(SpaceKind::zariski));
  os << space_text("Max (Zariski)", *a.space(SpaceKind::zariski_max));
  os << space_text("Min (Zariski)", *a.space(SpaceKind::zariski_min));
  os << space_text("Min (flat)", *a.space(SpaceKind::flat_min));
  os << space_text("Spp (pure)", *a.space(SpaceKind::pure));
  os << space_text("Sp (Pierce)", *a.space(SpaceKind::pierce));
  auto nu = compare_spaces(canonical_map(CanonicalMapKind::nu, a.space(SpaceKind::zariski), a.space(SpaceKind::pure)));
  auto lam = compare_spaces(canonical_map(CanonicalMapKind::lambda, a.space(SpaceKind::pure), a.space(SpaceKind::pierce)));
  os << "  nu: Spec -> Spp continuous " << yes(nu.is_continuous) << ", surjective " << yes(nu.is_surjective)
     << ", homeomorphism " << yes(nu.is_homeomorphism) << "\n";
  os << "  lambda: Spp -> Sp continuous " << yes(lam.is_continuous) << ", surjective " << yes(lam.is_surjective)
     << ", homeomorphism " << yes(lam.is_homeomorphism) << "\n";
  return os.str();
}

inline std::string classify_text(const ClassReport& c) {
  std::ostringstream os;
  os << "classification:\n"
     << "  reduced " << yes(c.is_reduced) << "\n"
     << "  Gelfand " << yes(c.is_gelfand) << "\n"
     << "  mp " << yes(c.is_mp) << "\n"
     << "  Krull dimension " << c.krull_dimension << "\n"
     << "  p.p. " << yes(c.is_pp_ring) << "\n"
     << "  von Neumann regular " << yes(c.is_von_neumann_regular) << "\n"
     << "  pure ideals idempotent-generated " << yes(c.all_pure_idempotent_generated) << "\n"
     << "  semi-Noetherian " << yes(c.is_semi_noetherian) << "\n";
  auto w = c.witnesses;
  std::sort(w.begin(), w.end());
  for (const auto& s : w) os << "  - " << s << "\n";
  return os.str();
}

inline std::string ring_text(const RingAnalysis& a, Section s) {
  std::string out = "ring " + a.r().label() + " (order " + std::to_string(a.r().order()) + ")\n";
  if (s == Section::ideals || s == Section::all) out += ideals_text(a);
  if (s == Section::pure || s == Section::all) out += pure_text(a);
  if (s == Section::spectra || s == Section::all) out += spectra_text(a);
  if (s == Section::classify || s == Section::all) out += classify_text(a.classification());
  return out;
}

// Z: only the closed forms are available.
inline std::string symz_text(Section s) {
  if (s == Section::spectra) throw UnsupportedBackend("spectra of Z are not computed by the symbolic backend");
  std::string out = "ring Z (infinite)\n";
  if (s == Section::ideals || s == Section::all) out += "ideals: nZ for n >= 0 (not enumerable)\n";
  if (s == Section::pure || s == Section::all) {
    out += "pure ideals (" + std::to_string(pure_ideals_symz().size()) + "):\n";
    for (const auto& i : pure_ideals_symz())
      out += "  " + i.to_string() + "  generator " + std::to_string(i.generator) + "\n";
  }
  if (s == Section::all) out += "spectra: not computed by the symbolic backend\n";
  if (s == Section::classify || s == Section::all) out += classify_text(classify_symz());
  return out;
}

inline std::string check_line(const CheckResult& r) {
  return r.check_id + " " + to_string(r.status) + ": " + r.details;
}

inline std::string corpus_summary_text(const CorpusReport& rep) {
  std::ostringstream os;
  os << rep.rings.size() << " rings; checks pass " << rep.counts.pass << ", fail " << rep.counts.fail << ", skipped "
     << rep.counts.skipped << "\n";
  for (const auto& r : rep.rings)
    for (const auto& c : r.checks)
      if (c.status == CheckStatus::fail) os << "FAIL " << r.label << " " << check_line(c) << "\n";
  return os.str();
}

}  // namespace purespec
