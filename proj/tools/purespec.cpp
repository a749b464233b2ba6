#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "purespec/expr.hpp"
#include "purespec/report.hpp"

using namespace purespec;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitResource = 3;

std::vector<std::string> split_checks(const std::string& list) {
  if (list == "all") return all_check_ids();
  std::vector<std::string> out;
  std::stringstream ss(list);
  for (std::string id; std::getline(ss, id, ',');) {
    id.erase(0, id.find_first_not_of(" \t"));
    id.erase(id.find_last_not_of(" \t") + 1);
    if (id.empty()) continue;
    if (!is_check_id(id)) throw UnknownCheckId("unknown check id '" + id + "'");
    out.push_back(id);
  }
  if (out.empty()) throw ConfigError("no checks selected");
  return out;
}

std::pair<std::uint64_t, unsigned> parse_polyquot(const std::string& s) {
  auto colon = s.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(s);
    std::size_t used = 0;
    auto p = std::stoull(s.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(s);
    auto rest = s.substr(colon + 1);
    auto d = std::stoul(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(s);
    return {p, static_cast<unsigned>(d)};
  } catch (const std::logic_error&) {
    throw ConfigError("--polyquot expects p:d, got '" + s + "'");
  }
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out) throw ConfigError("cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw ConfigError("cannot write " + path.string());
}

IdealLattice lattice_for(const RingPtr& ring, const std::string& cache_dir, const Limits& limits) {
  if (cache_dir.empty()) return IdealLattice::enumerate(ring, limits);
  LatticeCache cache(cache_dir);
  return cache.get_or_compute(ring, limits);
}

int status_exit(bool failed, bool resource) {
  if (failed) return kExitCheckFailed;
  if (resource) return kExitResource;
  return 0;
}

struct Options {
  std::string cache_dir;
  Limits limits;

  std::string expr;
  std::string show = "all";
  bool json = false;
  std::string checks = "all";
  std::string out;

  std::uint64_t zmod_max = 0;
  bool products = false;
  std::size_t product_max_order = 64;
  std::size_t product_factors = 2;
  std::vector<std::string> polyquot;
  unsigned threads = 0;
};

CorpusSpec corpus_spec(const Options& o, std::vector<std::string> checks) {
  CorpusSpec s;
  s.zmod_max = o.zmod_max;
  s.products = o.products;
  s.product_max_order = o.product_max_order;
  s.product_factors = o.product_factors;
  for (const auto& pq : o.polyquot) s.polyquot.push_back(parse_polyquot(pq));
  s.checks = std::move(checks);
  s.threads = o.threads;
  s.limits = o.limits;
  if (!o.cache_dir.empty()) s.cache_dir = o.cache_dir;
  return s;
}

int cmd_ring(const Options& o) {
  auto section = parse_section(o.show);
  auto e = parse_ring_expr(o.expr);
  if (e.kind == RingExpr::Kind::symz) {
    if (o.json) {
      Json j;
      j["ring"] = "Z";
      j["order"] = nullptr;
      Json pure = Json::array();
      for (const auto& i : pure_ideals_symz()) pure.push_back(Json{{"ideal", i.to_string()}, {"generator", std::to_string(i.generator)}});
      j["pure"] = pure;
      j["classification"] = classification_json(classify_symz());
      std::cout << dump(j);
    } else {
      std::cout << symz_text(section);
    }
    return 0;
  }
  auto ring = build_ring(e, o.limits);
  RingAnalysis a(lattice_for(ring, o.cache_dir, o.limits), o.limits);
  if (!o.json) {
    std::cout << ring_text(a, section);
    return 0;
  }
  Json j;
  j["ring"] = a.r().label();
  j["order"] = a.r().order();
  if (section == Section::ideals || section == Section::all) {
    Json is = Json::array();
    for (const auto& i : a.ideals()) is.push_back(ideal_json(i));
    j["ideals"] = is;
  }
  if (section == Section::pure || section == Section::all) {
    Json ps = Json::array();
    for (const auto& p : a.pure_info())
      ps.push_back(Json{{"ideal", ideal_json(p.ideal)},
                        {"generator", a.r().name(p.generator)},
                        {"purely_prime", p.purely_prime},
                        {"purely_maximal", p.purely_maximal},
                        {"purely_minimal", p.purely_minimal}});
    j["pure"] = ps;
  }
  if (section == Section::spectra || section == Section::all) {
    Json sp;
    for (auto k : {SpaceKind::zariski, SpaceKind::zariski_max, SpaceKind::zariski_min, SpaceKind::flat_min,
                   SpaceKind::pure, SpaceKind::pierce}) {
      const auto& x = *a.space(k);
      Json pts = Json::array();
      for (const auto& p : x.points()) pts.push_back(ideal_json(p.ideal));
      sp[to_string(k)] = Json{{"points", pts}, {"open_count", x.opens().size()}};
    }
    j["spectra"] = sp;
  }
  if (section == Section::classify || section == Section::all) j["classification"] = classification_json(a.classification());
  std::cout << dump(j);
  return 0;
}

int cmd_verify(const Options& o) {
  auto ids = split_checks(o.checks);
  auto e = parse_ring_expr(o.expr);
  std::vector<CheckResult> results;
  std::optional<ClassReport> cls;
  std::string label;
  std::optional<std::size_t> order;
  if (e.kind == RingExpr::Kind::symz) {
    label = "Z";
    cls = classify_symz();
    for (const auto& id : ids) results.push_back(run_check_symz(id));
  } else {
    auto ring = build_ring(e, o.limits);
    label = ring->label();
    order = ring->order();
    LatticeCache* cache = nullptr;
    std::optional<LatticeCache> store;
    if (!o.cache_dir.empty()) cache = &store.emplace(o.cache_dir);
    auto rep = analyze_ring(ring, ids, o.limits, cache);
    results = rep.checks;
    cls = rep.classification;
  }
  bool failed = false, resource = false;
  for (const auto& r : results) {
    failed = failed || r.status == CheckStatus::fail;
    resource = resource || is_resource_skip(r);
  }
  auto json = ring_report_json(label, order, cls, results);
  if (!o.out.empty()) write_atomic(o.out, dump(json));
  if (o.json) {
    std::cout << dump(json);
  } else {
    std::cout << "ring " << label << "\n";
    for (const auto& r : results) std::cout << check_line(r) << "\n";
  }
  return status_exit(failed, resource);
}

int cmd_corpus(const Options& o) {
  auto rep = run_corpus(corpus_spec(o, split_checks(o.checks)));
  write_atomic(o.out, dump(corpus_report_json(rep)));
  std::cout << "note: " << rep.caveat << "\n" << corpus_summary_text(rep) << "report written to " << o.out << "\n";
  return status_exit(rep.counts.fail > 0, rep.resource_skips);
}

int cmd_conjecture(const Options& o) {
  auto rep = run_corpus(corpus_spec(o, {"P-CONJ"}));
  std::cout << "conjecture: every purely-prime ideal is purely-maximal\n"
            << "caveat: " << rep.caveat << "\n"
            << rep.rings.size() << " rings: " << rep.counts.pass << " pass, " << rep.counts.fail << " fail, "
            << rep.counts.skipped << " skipped\n";
  for (const auto& r : rep.rings)
    for (const auto& c : r.checks)
      if (c.status != CheckStatus::pass) std::cout << r.label << " " << check_line(c) << "\n";
  if (!o.out.empty()) write_atomic(o.out, dump(corpus_report_json(rep)));
  return status_exit(rep.counts.fail > 0, rep.resource_skips);
}

int cmd_checks() {
  for (const auto& c : check_catalog()) std::cout << c.id << "  " << c.statement << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pure ideals, pure spectra and their theorems on finite commutative rings"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--cache", o.cache_dir, "ideal lattice cache directory")->envname("PURE_SPECTRA_CACHE");
  app.add_option("--order-cap", o.limits.order_cap, "largest ring order accepted")->capture_default_str();
  app.add_option("--lattice-cap", o.limits.lattice_cap, "largest ideal lattice accepted")->capture_default_str();

  auto* ring = app.add_subcommand("ring", "build a ring and print a section");
  ring->add_option("expr", o.expr, "ring expression, e.g. \"Z/2 x Z/3\"")->required();
  ring->add_option("--show", o.show, "ideals|pure|spectra|classify|all")->capture_default_str();
  ring->add_flag("--json", o.json, "print JSON");

  auto* verify = app.add_subcommand("verify", "run catalog checks on one ring");
  verify->add_option("expr", o.expr, "ring expression")->required();
  verify->add_option("--checks", o.checks, "comma-separated check ids or all")->capture_default_str();
  verify->add_option("--out", o.out, "write the JSON report here");
  verify->add_flag("--json", o.json, "print JSON");

  auto add_corpus_opts = [&](CLI::App* c) {
    c->add_option("--zmod-max", o.zmod_max, "include Z/n for 2 <= n <= N")->required();
    c->add_flag("--products", o.products, "include products of seed rings");
    c->add_option("--product-max-order", o.product_max_order, "largest product order")->capture_default_str();
    c->add_option("--product-factors", o.product_factors, "most factors per product")->capture_default_str();
    c->add_option("--polyquot", o.polyquot, "p:d, all monic f over Z/p with deg f <= d");
    c->add_option("--threads", o.threads, "worker threads (0: all cores)");
  };
  auto* corpus = app.add_subcommand("corpus", "sweep a generated corpus and write JSON");
  add_corpus_opts(corpus);
  corpus->add_option("--checks", o.checks, "comma-separated check ids or all")->required();
  corpus->add_option("--out", o.out, "JSON report path")->required();

  auto* conjecture = app.add_subcommand("conjecture", "purely-prime = purely-maximal sweep");
  add_corpus_opts(conjecture);
  conjecture->add_option("--out", o.out, "write the JSON report here");

  auto* checks = app.add_subcommand("checks", "list the check catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*ring) return cmd_ring(o);
    if (*verify) return cmd_verify(o);
    if (*corpus) return cmd_corpus(o);
    if (*conjecture) return cmd_conjecture(o);
    if (*checks) return cmd_checks();
  } catch (const ResourceError& e) {
    std::cerr << e.kind() << ": " << e.what() << "\n";
    return kExitResource;
  } catch (const InvalidArgument& e) {
    std::cerr << e.kind() << ": " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << e.kind() << ": " << e.what() << "\n";
    return EXIT_FAILURE;
  }
  return kExitConfig;
}
