// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "nilclean/classify.hpp"
#include "nilclean/constructions.hpp"
#include "nilclean/decompose.hpp"
#include "nilclean/parallel.hpp"
#include "nilclean/ringspec.hpp"
#include "nilclean/structure.hpp"
#include "nilclean/suite.hpp"
#include "random_expr.hpp"

#ifndef NILCLEAN_DEFAULT_CATALOG
#define NILCLEAN_DEFAULT_CATALOG "data/catalog.txt"
#endif

namespace {

using namespace nilclean;
using Json = nlohmann::ordered_json;
using Cls = NilCleanClass;

struct Result {
  bool ok = true;
  std::string detail;
};

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Collects failed expectations; the first few are kept for the report.
class Expect {
 public:
  void that(bool cond, const std::string& what) {
    if (cond) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  Result done(std::string summary) const {
    if (failures_ == 0) return {true, std::move(summary)};
    return {false, std::to_string(failures_) + " failure(s): " + notes_};
  }

 private:
  std::size_t failures_ = 0;
  std::string notes_;
};

std::vector<CatalogEntry> shipped_catalog() {
  std::ifstream in(NILCLEAN_DEFAULT_CATALOG);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

// Z_1..Z_200 plus every catalog ring of at most 256 elements.
std::vector<RingExpr> oracle_set() {
  std::vector<RingExpr> out;
  std::vector<std::string> seen;
  for (std::uint64_t n = 1; n <= 200; ++n) {
    out.push_back(RingExpr::zn(n));
    seen.push_back(print(out.back()));
  }
  for (const auto& e : shipped_catalog()) {
    if (predicted_size(e.expr) > 256) continue;
    if (std::find(seen.begin(), seen.end(), print(e.expr)) != seen.end()) continue;
    out.push_back(e.expr);
    seen.push_back(print(e.expr));
  }
  return out;
}

bool contains(const std::vector<Elem>& v, Elem a) {
  return std::find(v.begin(), v.end(), a) != v.end();
}

const Json* class_entry(const Json& report, const std::string& cls) {
  for (const auto& c : report["classes"]) {
    if (c["class"] == cls) return &c;
  }
  return nullptr;
}

Result criterion_1() {
  Expect ex;
  auto run = cli({"classify", "Z5", "--format", "json"});
  ex.that(run.code == 0, "classify exit " + std::to_string(run.code));
  auto j = Json::parse(run.out);
  const auto* wsnc = class_entry(j, "wsnc");
  const auto* s2nc = class_entry(j, "s2nc");
  const auto* swnc = class_entry(j, "swnc");
  ex.that(wsnc && (*wsnc)["verdict"] == "true", "wsnc not true");
  ex.that(s2nc && (*s2nc)["verdict"] == "false", "s2nc not false");
  ex.that(s2nc && (*s2nc)["witness"] == 3, "s2nc witness is not 3");
  ex.that(swnc && (*swnc)["verdict"] == "false", "swnc not false");
  const bool three_fails_swnc =
      swnc && contains((*swnc)["failing"].get<std::vector<Elem>>(), 3);
  ex.that(three_fails_swnc, "3 not among swnc failures");
  ex.that(!find_swnc_certificate(zn(5), 3), "3 has an swnc certificate");
  ex.that(!find_s2nc_certificate(zn(5), 3), "3 has an s2nc certificate");
  return ex.done("wsnc true; s2nc false, witness 3; swnc false, 3 among failures " +
                 (swnc ? (*swnc)["failing"].dump() : std::string("?")) +
                 ", least failing " +
                 (swnc ? (*swnc)["witness"].dump() : std::string("?")));
}

Result criterion_2() {
  Expect ex;
  const Elem minus_two_two = ProductCoding{5}.pair(3, 2);
  auto run = cli({"classify", "Z5 x Z5", "--format", "json"});
  ex.that(run.code == 0, "classify exit " + std::to_string(run.code));
  auto j = Json::parse(run.out);
  const auto* wsnc = class_entry(j, "wsnc");
  ex.that(wsnc && (*wsnc)["verdict"] == "false", "wsnc not false");
  ex.that(wsnc && contains((*wsnc)["failing"].get<std::vector<Elem>>(), minus_two_two),
          "(3, 2) not among failures");

  auto certs = cli({"certify", "Z5 x Z5"});
  std::istringstream lines(certs.out);
  std::string line;
  for (Elem i = 0; i <= minus_two_two && std::getline(lines, line); ++i) {}
  auto rec = Json::parse(line);
  ex.that(rec["element"] == minus_two_two && rec.contains("certificate") &&
              rec["certificate"].is_null(),
          "certify emitted a certificate for (3, 2)");
  ex.that(!find_wsnc_certificate(product(zn(5), zn(5)), minus_two_two),
          "search found a certificate for (3, 2)");
  return ex.done("wsnc false; (3, 2) = index " + std::to_string(minus_two_two) +
                 " has no certificate");
}

struct OracleRow {
  std::string label;
  bool wsnc_search = false, wsnc_criterion = false;
  bool s2nc_search = false, s2nc_criterion = false;
  bool resolved = true;
  bool maj = false;
};

std::vector<OracleRow> oracle_rows() {
  auto set = oracle_set();
  std::vector<OracleRow> rows(set.size());
  parallel_for(set.size(), default_workers(), [&](std::size_t i) {
    auto ring = eval(set[i]);
    auto census = take_census(ring);
    auto w = is_class(ring, census, Cls::weakly_strongly_2_nil_clean);
    auto s = is_class(ring, census, Cls::strongly_2_nil_clean);
    rows[i] = OracleRow{ring.label(),
                        w.verdict == Verdict::holds,
                        criterion_wsnc(ring, census).holds,
                        s.verdict == Verdict::holds,
                        criterion_s2nc(ring, census).holds,
                        w.verdict != Verdict::unresolved &&
                            s.verdict != Verdict::unresolved,
                        maj_decomposition(ring).has_value()};
  });
  return rows;
}

Result criterion_3() {
  Expect ex;
  auto rows = oracle_rows();
  for (const auto& r : rows) {
    ex.that(r.resolved, r.label + " unresolved");
    ex.that(r.wsnc_search == r.wsnc_criterion, r.label + " wsnc disagreement");
    ex.that(r.s2nc_search == r.s2nc_criterion, r.label + " s2nc disagreement");
  }
  return ex.done(std::to_string(rows.size()) + " rings, 0 disagreements");
}

Result criterion_4() {
  Expect ex;
  auto rows = oracle_rows();
  std::size_t wsnc = 0;
  for (const auto& r : rows) {
    wsnc += r.wsnc_search;
    ex.that(r.wsnc_search == r.maj,
            r.label + ": wsnc " + (r.wsnc_search ? "true" : "false") +
                ", decomposition " + (r.maj ? "found" : "none"));
  }
  return ex.done(std::to_string(rows.size()) + " rings (" + std::to_string(wsnc) +
                 " wsnc), 0 disagreements");
}

Result criterion_5() {
  Expect ex;
  std::vector<RingExpr> catalog;
  for (auto& e : shipped_catalog()) catalog.push_back(e.expr);
  SuiteOptions opt;
  opt.workers = default_workers();
  opt.product_bases = default_product_bases();
  auto report = run_lemma_suite(catalog, opt);

  // Check families named by this criterion, each of which must be exercised
  // by at least one non-vacuous instance.
  const std::vector<std::string> families{
      "wsnc_implies/thirty_nilpotent",     "wsnc_implies/radical_nil",
      "wsnc_implies/strongly_pi_regular",  "wsnc_implies/fifth_power_condition",
      "nilpotent_two/wsnc_implies_snc",    "nilpotent_three/wsnc_implies_s2nc",
      "nilpotent_six/wsnc_implies_s2nc",   "wsnc_implies/corners_wsnc",
      "quotient/nil_ideal_transport",      "quotient/radical_criterion",
      "quotient/ideal_square",             "triangular/s2nc_equivalence",
      "trivial_extension/transport",       "trivial_extension/square_zero_ideal",
      "skew_triangular/transport",         "skew_triangular/nilpotent_ideal",
      "poly_quotient/transport",           "poly_quotient/nilpotent_ideal",
      "product/rule",                      "product/factor_images"};
  std::size_t counted = 0;
  for (const auto& fam : families) {
    std::size_t exercised = 0;
    for (const auto& i : report.instances) {
      if (i.check != fam) continue;
      ++counted;
      if (i.outcome == Outcome::pass) ++exercised;
      ex.that(i.outcome != Outcome::violation, i.ring + " " + i.check + ": " + i.witness);
      ex.that(i.outcome != Outcome::skipped, i.ring + " " + i.check + " skipped");
    }
    ex.that(exercised > 0, fam + " never exercised");
  }
  return ex.done(std::to_string(counted) + " instances over " +
                 std::to_string(families.size()) + " families, " +
                 std::to_string(report.summary.rings) + " rings + " +
                 std::to_string(report.summary.product_pairs) +
                 " product pairs, 0 violations");
}

Result criterion_6() {
  Expect ex;
  std::uint64_t m = 1;
  for (unsigned k = 1; k <= 3; ++k) {
    m *= 5;
    auto ring = zn(m);
    ex.that(criterion_wsnc(ring).holds, ring.label() + " criterion false");
    if (k <= 2) {
      ex.that(is_class(ring, Cls::weakly_strongly_2_nil_clean).verdict == Verdict::holds,
              ring.label() + " search not wsnc");
    }
    auto w = maj_decomposition(ring);
    ex.that(w && w->central_idempotent == 1 && w->k == k,
            ring.label() + " decomposition is not c = 1, k = " + std::to_string(k));
  }
  return ex.done("Z5, Z25, Z125 wsnc; decompositions c = 1 with k = 1, 2, 3");
}

Result criterion_7() {
  Expect ex;
  auto ring = matrix_ring(zn(2), 2);
  auto entry = is_class(ring, Cls::weakly_strongly_2_nil_clean);
  auto crit = criterion_wsnc(ring);
  ex.that(entry.verdict == Verdict::fails, "search does not report failure");
  ex.that(!crit.holds, "criterion holds");
  ex.that(entry.witness.has_value(), "no failing element recorded");
  if (entry.witness) {
    ex.that(crit.branches[*entry.witness] == 0,
            "witness satisfies a cubic condition");
    ex.that(!find_wsnc_certificate(ring, *entry.witness), "witness has a certificate");
  }
  return ex.done("wsnc false by search and criterion; failing element " +
                 (entry.witness ? std::to_string(*entry.witness) : "?") +
                 " satisfies no cubic condition");
}

Result criterion_8() {
  Expect ex;
  std::mt19937_64 rng(0xC0FFEE);
  for (int i = 0; i < 1000; ++i) {
    auto e = nilclean::testing::random_expr(rng);
    auto text = print(e);
    bool same = false;
    try {
      same = parse(text) == e;
    } catch (const Error&) {
    }
    ex.that(same, "round trip failed: " + text);
  }
  const std::vector<std::string> bad{
      "", "Z", "Z0", "Q5", "Z5 x", "Z5 Z5", "M2Z2", "M2(Z2", "T2(Z2; flip)",
      "T2(Z2;)", "Poly(Z2)", "Poly(Z2, )", "TrivExt Z2", "(Z2", "Z2)", "M(Z2)",
      "Z-3", "Z4294967296", "T2(Z99999999999)"};
  for (const auto& text : bad) {
    try {
      parse(text);
      ex.that(false, "accepted '" + text + "'");
    } catch (const SyntaxError& e) {
      ex.that(e.offset() <= text.size() &&
                  std::string(e.what()).find("offset") != std::string::npos,
              "bad diagnostic for '" + text + "'");
    } catch (const IntegerOverflow& e) {
      ex.that(e.offset() <= text.size() &&
                  std::string(e.what()).find("offset") != std::string::npos,
              "bad diagnostic for '" + text + "'");
    }
  }
  auto catalog = shipped_catalog();
  for (const auto& entry : catalog) {
    ex.that(predicted_size(entry.expr) == eval(entry.expr).size(),
            "size mismatch on " + entry.text);
  }
  return ex.done("1000 round trips; " + std::to_string(bad.size()) +
                 " error cases with offsets; sizes exact on " +
                 std::to_string(catalog.size()) + " catalog rings");
}

Result criterion_9() {
  Expect ex;
  auto a = cli({"certify", "--catalog", NILCLEAN_DEFAULT_CATALOG});
  auto b = cli({"certify", "--catalog", NILCLEAN_DEFAULT_CATALOG});
  auto c = cli({"certify", "--catalog", NILCLEAN_DEFAULT_CATALOG, "--workers", "1"});
  ex.that(a.code == 0 && b.code == 0 && c.code == 0, "certify failed");
  ex.that(a.out == b.out, "two runs differ");
  ex.that(a.out == c.out, "single-worker run differs");
  auto lines = std::count(a.out.begin(), a.out.end(), '\n');
  return ex.done(std::to_string(lines) + " lines, " + std::to_string(a.out.size()) +
                 " bytes, identical across runs and worker counts");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Z5 example fixture", 1, criterion_1},
      {2, "Z5 x Z5 counterexample fixture", 1, criterion_2},
      {3, "search and criterion agree", 120, criterion_3},
      {4, "wsnc iff cyclic 5-primary decomposition", 120, criterion_4},
      {5, "implication suite on shipped catalog", 300, criterion_5},
      {6, "Z5, Z25, Z125 family", 30, criterion_6},
      {7, "M2(Z2) negative fixture", 5, criterion_7},
      {8, "parser properties", 60, criterion_8},
      {9, "certify determinism", 60, criterion_9},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Result out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      out.ok = false;
      out.detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) +
                    " s limit)";
    }
    if (!out.ok) ++failed;
    std::ostringstream t;
    t.setf(std::ios::fixed);
    t.precision(2);
    t << secs;
    std::cout << (out.ok ? "PASS" : "FAIL") << "  criterion " << c.id << "  "
              << c.name << "  [" << t.str() << " s]  " << out.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
