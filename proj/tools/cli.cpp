#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "nilclean/classify.hpp"
#include "nilclean/decompose.hpp"
#include "nilclean/parallel.hpp"
#include "nilclean/ringspec.hpp"
#include "nilclean/serialize.hpp"
#include "nilclean/structure.hpp"
#include "nilclean/suite.hpp"

#ifndef NILCLEAN_DEFAULT_CATALOG
#define NILCLEAN_DEFAULT_CATALOG "data/catalog.txt"
#endif

namespace nilclean::cli {

namespace {

struct Config {
  std::string format = "text";
  std::uint64_t cap = Limits{}.size_cap;
  std::uint64_t budget = Limits{}.search_budget;
  unsigned workers = 0;  // 0: hardware concurrency
  std::string validate = "auto";
  std::uint64_t seed = kDefaultSeed;

  bool json() const { return format == "json"; }
  Limits limits() const {
    Limits l;
    l.size_cap = cap;
    l.search_budget = budget;
    return l;
  }
  SearchOptions search() const { return SearchOptions{budget, workers}; }
};

// Bad files, bad flags, bad environment.
class InputError : public Error {
 public:
  using Error::Error;
};

// A search ran out of budget after output was produced.
class Unresolved : public Error {
 public:
  using Error::Error;
};

void validate(const FiniteRing& ring, const Config& cfg) {
  if (cfg.validate == "off") return;
  auto mode = cfg.validate == "full"      ? ValidationMode::full
              : cfg.validate == "sampled" ? ValidationMode::sampled
                                          : ValidationMode::automatic;
  ensure_valid(ring, mode, cfg.seed);
}

FiniteRing build(const std::string& text, const Config& cfg) {
  auto ring = eval(parse(text), cfg.limits());
  validate(ring, cfg);
  return ring;
}

std::vector<CatalogEntry> read_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read catalog " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_catalog(buf.str());
  } catch (const CatalogError& e) {
    throw InputError(path + ":" + e.what());
  }
}

std::string elem_list(const std::vector<Elem>& elems, std::size_t limit = 16) {
  std::string s;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i > 0) s += ", ";
    if (i == limit) {
      s += "... (" + std::to_string(elems.size()) + " total)";
      break;
    }
    s += std::to_string(elems[i]);
  }
  return s;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

// Pads every cell but the last to its column width.
void emit_row(std::ostream& out, const std::vector<std::string>& cells,
              const std::vector<std::size_t>& widths) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    line += cells[i];
    if (i + 1 < cells.size() && cells[i].size() < widths[i]) {
      line.append(widths[i] - cells[i].size(), ' ');
    }
  }
  while (!line.empty() && line.back() == ' ') line.pop_back();
  out << line << '\n';
}

std::string maj_text(const std::optional<MajWitness>& w) {
  if (!w) return "none";
  std::ostringstream s;
  s << "c = " << w->central_idempotent << ", k = " << w->k
    << "\n  cyclic corner: " << w->cyclic_corner_label << " (size "
    << w->cyclic_corner_size << ")"
    << "\n  s2nc corner:   " << w->s2nc_corner_label << " (size "
    << w->s2nc_corner_size << ")";
  return s.str();
}

int cmd_classify(const std::string& text, const Config& cfg, std::ostream& out) {
  auto ring = build(text, cfg);
  auto report = classify_ring(ring, cfg.search());
  auto maj = maj_decomposition(ring);

  if (cfg.json()) {
    out << classification_json(report, maj).dump(2) << '\n';
  } else {
    out << "ring: " << report.label << "\n"
        << "size: " << report.size
        << "  characteristic: " << report.characteristic << "\n"
        << "idempotents: " << report.idempotent_count
        << "  nilpotents: " << report.nilpotent_count
        << "  units: " << report.unit_count
        << "  radical: " << report.radical_count << "\n";
    for (const auto& entry : report.entries) {
      std::string line = std::string(short_name(entry.cls)) + ": " +
                         std::string(to_string(entry.verdict));
      if (entry.witness) {
        line += " (witness " + std::to_string(*entry.witness) + "; failing " +
                elem_list(entry.failing) + ")";
      }
      if (entry.cls == NilCleanClass::weakly_strongly_2_nil_clean) {
        line += ", criterion: " + bool_text(report.wsnc_criterion.holds);
      } else if (entry.cls == NilCleanClass::strongly_2_nil_clean) {
        line += ", criterion: " + bool_text(report.s2nc_criterion.holds);
      }
      out << line << "\n";
    }
    const auto& w = report.wsnc_criterion;
    out << "30 nilpotent: " << bool_text(w.thirty_nilpotent) << "\n";
    if (!w.failing.empty()) {
      out << "no cubic condition nilpotent at: " << elem_list(w.failing) << "\n";
    }
    out << "oracles agree: " << bool_text(report.oracles_agree()) << "\n"
        << "maj: " << maj_text(maj) << "\n";
  }

  for (const auto& entry : report.entries) {
    if (entry.verdict == Verdict::unresolved) {
      throw Unresolved(std::string(short_name(entry.cls)) +
                       " search exceeded the budget of " +
                       std::to_string(cfg.budget));
    }
  }
  return kOk;
}

void certify_ring(const FiniteRing& ring, NilCleanClass cls, const Config& cfg,
                  std::ostream& out) {
  auto census = take_census(ring);
  auto certs = certify_all(ring, census, cls, cfg.search());
  for (Elem a = 0; a < ring.size(); ++a) {
    const auto& c = certs[a];
    auto j = c ? certificate_json(ring.label(), *c)
               : failure_json(ring.label(), a, cls);
    out << j.dump() << '\n';
  }
}

int cmd_certify(const std::string& text, const std::string& catalog,
                const std::string& cls_name, const Config& cfg,
                std::ostream& out) {
  auto cls = parse_class(cls_name);
  if (!cls) throw InputError("unknown class " + cls_name);
  if (text.empty() == catalog.empty()) {
    throw InputError("certify takes either an expression or --catalog");
  }
  if (!catalog.empty()) {
    for (const auto& entry : read_catalog(catalog)) {
      auto ring = eval(entry.expr, cfg.limits());
      validate(ring, cfg);
      certify_ring(ring, *cls, cfg, out);
    }
  } else {
    certify_ring(build(text, cfg), *cls, cfg, out);
  }
  return kOk;
}

struct ScanRow {
  std::uint64_t n = 0;
  ClassificationReport report;
};

std::string scan_reason(const ClassificationReport& r) {
  if (r.entry(NilCleanClass::weakly_strongly_2_nil_clean).verdict ==
      Verdict::holds) {
    return "";
  }
  if (!r.wsnc_criterion.thirty_nilpotent) return "30 not nilpotent";
  if (!r.wsnc_criterion.failing.empty()) {
    return "no cubic condition at " +
           std::to_string(r.wsnc_criterion.failing.front());
  }
  return "";
}

int cmd_scan(std::uint64_t lo, std::uint64_t hi, const Config& cfg,
             std::ostream& out) {
  if (lo < 1 || lo > hi) throw InputError("scan needs 1 <= zn-min <= zn-max");
  if (hi > cfg.cap) throw SizeCapExceeded(hi, cfg.cap);

  std::vector<ScanRow> rows(hi - lo + 1);
  const SearchOptions inner{cfg.budget, 1};
  parallel_for(rows.size(), cfg.workers, [&](std::size_t i) {
    rows[i].n = lo + i;
    auto ring = build("Z" + std::to_string(rows[i].n), cfg);
    rows[i].report = classify_ring(ring, inner);
  });

  auto verdict = [](const ClassificationReport& r, NilCleanClass c) {
    return std::string(to_string(r.entry(c).verdict));
  };
  bool unresolved = false;
  if (cfg.json()) {
    Json arr = Json::array();
    for (const auto& row : rows) {
      Json j;
      j["n"] = row.n;
      for (auto c : kAllClasses) j[std::string(short_name(c))] = verdict(row.report, c);
      j["criterion_wsnc"] = row.report.wsnc_criterion.holds;
      j["criterion_s2nc"] = row.report.s2nc_criterion.holds;
      j["agree"] = row.report.oracles_agree();
      auto reason = scan_reason(row.report);
      j["reason"] = reason.empty() ? Json(nullptr) : Json(reason);
      arr.push_back(j);
    }
    out << arr.dump(2) << '\n';
  } else {
    const std::vector<std::size_t> widths{6, 11, 11, 11, 11, 11, 11, 7, 0};
    std::vector<std::string> head{"n"};
    for (auto c : kAllClasses) head.emplace_back(short_name(c));
    head.insert(head.end(), {"crit_wsnc", "crit_s2nc", "agree", "reason"});
    emit_row(out, head, widths);
    for (const auto& row : rows) {
      std::vector<std::string> cells{std::to_string(row.n)};
      for (auto c : kAllClasses) cells.push_back(verdict(row.report, c));
      cells.push_back(bool_text(row.report.wsnc_criterion.holds));
      cells.push_back(bool_text(row.report.s2nc_criterion.holds));
      cells.push_back(row.report.oracles_agree() ? "yes" : "NO");
      cells.push_back(scan_reason(row.report));
      emit_row(out, cells, widths);
    }
  }
  for (const auto& row : rows) {
    for (const auto& e : row.report.entries) {
      unresolved = unresolved || e.verdict == Verdict::unresolved;
    }
  }
  if (unresolved) throw Unresolved("some searches exceeded the budget");
  return kOk;
}

int cmd_suite(const std::string& path, const Config& cfg, std::ostream& out) {
  std::vector<RingExpr> catalog;
  for (auto& entry : read_catalog(path)) catalog.push_back(std::move(entry.expr));

  SuiteOptions opt;
  opt.limits = cfg.limits();
  opt.budget = cfg.budget;
  opt.workers = cfg.workers;
  opt.product_bases = default_product_bases();
  auto report = run_lemma_suite(catalog, opt);

  if (cfg.json()) {
    out << suite_json(report).dump(2) << '\n';
  } else {
    std::size_t ring_w = 4, check_w = 5;
    for (const auto& i : report.instances) {
      ring_w = std::max(ring_w, i.ring.size());
      check_w = std::max(check_w, i.check.size());
    }
    const std::vector<std::size_t> widths{ring_w + 2, check_w + 2, 11, 0};
    emit_row(out, {"ring", "check", "verdict", "witness"}, widths);
    for (const auto& i : report.instances) {
      emit_row(out, {i.ring, i.check, std::string(to_string(i.outcome)), i.witness},
               widths);
    }
    const auto& s = report.summary;
    out << "\nrings: " << s.rings << "  wsnc rings: " << s.wsnc_rings
        << "  product pairs: " << s.product_pairs << "\n"
        << "instances: " << s.instances << "  passed: " << s.passed
        << "  vacuous: " << s.vacuous << "  violations: " << s.violations
        << "  skipped: " << s.skipped << "\n"
        << "cyclic factor exponents:";
    if (s.cyclic_factor_exponents.empty()) out << " none";
    for (const auto& [k, count] : s.cyclic_factor_exponents) {
      out << " k=" << k << " (" << count << ")";
    }
    out << "\n";
  }
  return report.clean() ? kOk : kSuiteViolation;
}

int cmd_maj(const std::string& text, const Config& cfg, std::ostream& out) {
  auto ring = build(text, cfg);
  auto maj = maj_decomposition(ring);
  if (cfg.json()) {
    Json j;
    j["ring"] = ring.label();
    j["maj"] = maj_json(maj);
    out << j.dump(2) << '\n';
  } else {
    out << maj_text(maj) << '\n';
  }
  return kOk;
}

void apply_environment(Config& cfg) {
  const char* raw = std::getenv("NILCLEAN_CAP");
  if (raw == nullptr) return;
  std::string_view text(raw);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw InputError("NILCLEAN_CAP must be a positive integer, got '" +
                     std::string(text) + "'");
  }
  cfg.cap = value;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Config cfg;
  CLI::App app{"Classifies small finite rings against the nil-clean hierarchy.",
               "nilclean"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cap", cfg.cap, "Maximum ring size")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "Search budget per element")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", cfg.workers, "Worker threads (0: all cores)");
  app.add_option("--validate", cfg.validate, "Ring axiom validation")
      ->check(CLI::IsMember({"auto", "full", "sampled", "off"}));
  app.add_option("--seed", cfg.seed, "Seed for sampled validation");

  std::string expr, catalog, cls_name = "wsnc";
  std::uint64_t zn_min = 1, zn_max = 30;

  auto* classify = app.add_subcommand("classify", "Classify one ring");
  classify->add_option("expr", expr, "Ring expression")->required();

  auto* certify = app.add_subcommand("certify", "Emit one certificate per element");
  certify->add_option("expr", expr, "Ring expression");
  certify->add_option("--catalog", catalog, "Certify every ring in a catalog file");
  certify->add_option("--class", cls_name, "snc, s2nc, swnc or wsnc");

  auto* scan = app.add_subcommand("scan", "Classify Z_n over a range of n");
  scan->add_option("--zn-min", zn_min, "Smallest n");
  scan->add_option("--zn-max", zn_max, "Largest n");

  std::string suite_path = NILCLEAN_DEFAULT_CATALOG;
  auto* suite = app.add_subcommand("suite", "Run the implication suite");
  suite->add_option("catalog", suite_path, "Catalog file");

  auto* maj = app.add_subcommand("maj", "Find the cyclic 5-primary splitting");
  maj->add_option("expr", expr, "Ring expression")->required();

  for (auto* sub : {classify, certify, scan, suite, maj}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    apply_environment(cfg);
    if (cfg.workers == 0) cfg.workers = default_workers();
    if (*classify) return cmd_classify(expr, cfg, out);
    if (*certify) return cmd_certify(expr, catalog, cls_name, cfg, out);
    if (*scan) return cmd_scan(zn_min, zn_max, cfg, out);
    if (*suite) return cmd_suite(suite_path, cfg, out);
    if (*maj) return cmd_maj(expr, cfg, out);
  } catch (const SizeCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const Unresolved& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace nilclean::cli
