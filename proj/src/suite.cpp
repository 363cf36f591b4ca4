#include "nilclean/suite.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "nilclean/classify.hpp"
#include "nilclean/parallel.hpp"
#include "nilclean/structure.hpp"

namespace nilclean {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::vacuous: return "vacuous";
    case Outcome::violation: return "violation";
    case Outcome::skipped: return "skipped";
  }
  return "?";
}

std::vector<RingExpr> default_product_bases() {
  std::vector<RingExpr> out;
  for (std::uint64_t n : {2, 3, 4, 5, 6, 9, 25}) out.push_back(RingExpr::zn(n));
  return out;
}

namespace {

using Cls = NilCleanClass;

// nullopt: the search was cut off by the budget.
using Answer = std::optional<bool>;

Answer search_holds(const FiniteRing& ring, const ElementCensus& census,
                    NilCleanClass cls, std::uint64_t budget) {
  auto entry = is_class(ring, census, cls, SearchOptions{budget, 1});
  if (entry.verdict == Verdict::unresolved) return std::nullopt;
  return entry.verdict == Verdict::holds;
}

Answer search_holds(const FiniteRing& ring, NilCleanClass cls,
                    std::uint64_t budget) {
  return search_holds(ring, take_census(ring), cls, budget);
}

Answer wsnc_of(const FiniteRing& ring, std::uint64_t budget) {
  return search_holds(ring, Cls::weakly_strongly_2_nil_clean, budget);
}
Answer s2nc_of(const FiniteRing& ring, std::uint64_t budget) {
  return search_holds(ring, Cls::strongly_2_nil_clean, budget);
}

Answer both(Answer a, Answer b) {
  if (a && !*a) return false;
  if (b && !*b) return false;
  if (!a || !b) return std::nullopt;
  return true;
}

Answer either(Answer a, Answer b) {
  if (a && *a) return true;
  if (b && *b) return true;
  if (!a || !b) return std::nullopt;
  return false;
}

std::string show(Answer a) {
  if (!a) return "unresolved";
  return *a ? "true" : "false";
}

struct RingFacts {
  FiniteRing ring;
  ElementCensus census;
  std::uint64_t budget;
  Answer wsnc, s2nc, swnc, snc;
};

RingFacts study(const FiniteRing& ring, std::uint64_t budget) {
  RingFacts f{ring, take_census(ring), budget, {}, {}, {}, {}};
  f.wsnc = search_holds(ring, f.census, Cls::weakly_strongly_2_nil_clean, budget);
  f.s2nc = search_holds(ring, f.census, Cls::strongly_2_nil_clean, budget);
  f.swnc = search_holds(ring, f.census, Cls::strongly_weakly_nil_clean, budget);
  f.snc = search_holds(ring, f.census, Cls::strongly_nil_clean, budget);
  return f;
}

class Recorder {
 public:
  explicit Recorder(std::string ring) : ring_(std::move(ring)) {}

  void record(const std::string& check, Outcome o, std::string witness = {}) {
    out_.push_back(SuiteInstance{ring_, check, o, std::move(witness)});
  }
  void pass(const std::string& check) { record(check, Outcome::pass); }
  void violation(const std::string& check, std::string why) {
    record(check, Outcome::violation, std::move(why));
  }

  // Records a vacuous or skipped outcome unless the premise holds.
  bool premise(const std::string& check, Answer hyp) {
    if (!hyp) {
      record(check, Outcome::skipped, "premise unresolved within budget");
      return false;
    }
    if (!*hyp) {
      record(check, Outcome::vacuous);
      return false;
    }
    return true;
  }

  // Records the outcome of a conclusion once the premise held.
  void conclude(const std::string& check, Answer concl, std::string why) {
    if (!concl) {
      record(check, Outcome::skipped, "conclusion unresolved within budget");
    } else if (*concl) {
      pass(check);
    } else {
      violation(check, std::move(why));
    }
  }

  void implication(const std::string& check, Answer hyp, Answer concl,
                   std::string why) {
    if (premise(check, hyp)) conclude(check, concl, std::move(why));
  }

  void equivalence(const std::string& check, Answer left, Answer right,
                   const std::string& left_name, const std::string& right_name) {
    if (!left || !right) {
      record(check, Outcome::skipped, "unresolved within budget");
    } else if (*left == *right) {
      pass(check);
    } else {
      violation(check, left_name + " = " + show(left) + ", " + right_name +
                           " = " + show(right));
    }
  }

  // Budget and cap failures skip the check; any other library error is a
  // violation of the check that raised it.
  void guarded(const std::string& check, const std::function<void()>& body) {
    try {
      body();
    } catch (const BudgetExceeded& e) {
      record(check, Outcome::skipped, e.what());
    } catch (const SizeCapExceeded& e) {
      record(check, Outcome::skipped, e.what());
    } catch (const Error& e) {
      violation(check, e.what());
    }
  }

  std::vector<SuiteInstance> take() { return std::move(out_); }

 private:
  std::string ring_;
  std::vector<SuiteInstance> out_;
};

std::string ideal_name(Elem generator, const IdealSet& ideal) {
  return "ideal generated by " + std::to_string(generator) + " (" +
         std::to_string(ideal.size()) + " elements)";
}

struct NamedIdeal {
  std::string name;
  IdealSet ideal;
};

// Distinct ideals generated by a single element satisfying `keep`.
std::vector<NamedIdeal> principal_ideals(const FiniteRing& ring,
                                         const std::function<bool(Elem)>& keep) {
  std::vector<NamedIdeal> out;
  std::set<std::vector<Elem>> seen;
  for (Elem g = 0; g < ring.size(); ++g) {
    if (!keep(g)) continue;
    auto ideal = ideal_generated(ring, {g});
    if (seen.insert(ideal.members).second) {
      out.push_back(NamedIdeal{ideal_name(g, ideal), std::move(ideal)});
    }
  }
  return out;
}

bool nilpotent_integer(const FiniteRing& ring, std::int64_t m) {
  return is_nilpotent(ring, int_image(ring, m));
}

void check_oracles(Recorder& rec, const RingFacts& f) {
  rec.guarded("criterion_matches_search/wsnc", [&] {
    rec.equivalence("criterion_matches_search/wsnc", f.wsnc,
                    criterion_wsnc(f.ring, f.census).holds, "search",
                    "criterion");
  });
  rec.guarded("criterion_matches_search/s2nc", [&] {
    rec.equivalence("criterion_matches_search/s2nc", f.s2nc,
                    criterion_s2nc(f.ring, f.census).holds, "search",
                    "criterion");
  });
  rec.guarded("class_hierarchy", [&] {
    const std::string check = "class_hierarchy";
    struct Edge {
      const char* name;
      Answer from;
      Answer to;
    };
    const Edge edges[] = {{"snc => s2nc", f.snc, f.s2nc},
                          {"snc => swnc", f.snc, f.swnc},
                          {"s2nc => wsnc", f.s2nc, f.wsnc},
                          {"swnc => wsnc", f.swnc, f.wsnc}};
    for (const auto& e : edges) {
      if (!e.from || (*e.from && !e.to)) {
        rec.record(check, Outcome::skipped, "unresolved within budget");
        return;
      }
      if (*e.from && !*e.to) {
        rec.violation(check, std::string(e.name) + " fails");
        return;
      }
    }
    rec.pass(check);
  });
}

void check_wsnc_consequences(Recorder& rec, const RingFacts& f) {
  const auto& ring = f.ring;
  rec.guarded("wsnc_implies/thirty_nilpotent", [&] {
    rec.implication("wsnc_implies/thirty_nilpotent", f.wsnc,
                    nilpotent_integer(ring, 30), "30 is not nilpotent");
  });
  rec.guarded("wsnc_implies/radical_nil", [&] {
    const std::string check = "wsnc_implies/radical_nil";
    if (!rec.premise(check, f.wsnc)) return;
    for (Elem j : jacobson_radical(ring)) {
      if (!f.census.nilpotent(j)) {
        rec.violation(check, "radical element " + std::to_string(j) +
                                 " is not nilpotent");
        return;
      }
    }
    rec.pass(check);
  });
  rec.guarded("wsnc_implies/strongly_pi_regular", [&] {
    const std::string check = "wsnc_implies/strongly_pi_regular";
    if (!rec.premise(check, f.wsnc)) return;
    auto pi = strong_pi_regularity(ring);
    if (pi.failing.empty()) {
      rec.pass(check);
    } else {
      rec.violation(check, "element " + std::to_string(pi.failing.front()) +
                               " has no a^n in a^(n+1)R");
    }
  });
  rec.guarded("wsnc_implies/fifth_power_condition", [&] {
    const std::string check = "wsnc_implies/fifth_power_condition";
    if (!rec.premise(check, f.wsnc)) return;
    for (Elem a = 0; a < ring.size(); ++a) {
      if (!f.census.nilpotent(ring.sub(pow(ring, a, 5), a))) {
        rec.violation(check, "a^5 - a is not nilpotent at " + std::to_string(a));
        return;
      }
    }
    rec.pass(check);
  });
  rec.guarded("wsnc_implies/corners_wsnc", [&] {
    const std::string check = "wsnc_implies/corners_wsnc";
    if (!rec.premise(check, f.wsnc)) return;
    for (Elem e : f.census.idempotents) {
      if (e == ring.zero()) continue;
      auto corner = corner_ring(ring, e);
      auto ok = wsnc_of(corner.ring, f.budget);
      if (!ok || !*ok) {
        rec.conclude(check, ok,
                     "corner at idempotent " + std::to_string(e) + " is not wsnc");
        return;
      }
    }
    rec.pass(check);
  });
  rec.guarded("wsnc_implies/images_wsnc", [&] {
    const std::string check = "wsnc_implies/images_wsnc";
    if (!rec.premise(check, f.wsnc)) return;
    for (const auto& [name, ideal] :
         principal_ideals(ring, [](Elem) { return true; })) {
      auto q = quotient_ring(ring, ideal);
      auto ok = wsnc_of(q.ring, f.budget);
      if (!ok || !*ok) {
        rec.conclude(check, ok, "quotient by " + name + " is not wsnc");
        return;
      }
    }
    rec.pass(check);
  });
}

void check_characteristic_upgrades(Recorder& rec, const RingFacts& f) {
  const auto& ring = f.ring;
  auto nil_and_wsnc = [&](std::int64_t m) {
    return both(nilpotent_integer(ring, m), f.wsnc);
  };
  rec.guarded("nilpotent_two/wsnc_implies_snc", [&] {
    rec.implication("nilpotent_two/wsnc_implies_snc", nil_and_wsnc(2), f.snc,
                    "2 nilpotent and wsnc, but not snc");
  });
  rec.guarded("nilpotent_three/wsnc_implies_s2nc", [&] {
    rec.implication("nilpotent_three/wsnc_implies_s2nc", nil_and_wsnc(3),
                    f.s2nc, "3 nilpotent and wsnc, but not s2nc");
  });
  rec.guarded("nilpotent_six/wsnc_implies_s2nc", [&] {
    rec.implication("nilpotent_six/wsnc_implies_s2nc", nil_and_wsnc(6), f.s2nc,
                    "6 nilpotent and wsnc, but not s2nc");
  });
  rec.guarded("nilpotent_three/sign_variants_agree", [&] {
    const std::string check = "nilpotent_three/sign_variants_agree";
    if (!rec.premise(check, nilpotent_integer(ring, 3))) return;
    bool pp = true, pm = true, mm = true;
    for (Elem a = 0; a < ring.size(); ++a) {
      auto v = sign_variant_certificates(ring, f.census, a,
                                         SearchOptions{f.budget, 1});
      pp = pp && v.plus_plus.has_value();
      pm = pm && v.plus_minus.has_value();
      mm = mm && v.minus_minus.has_value();
    }
    if (pp == pm && pm == mm) {
      rec.pass(check);
    } else {
      rec.violation(check, "e+f+n: " + show(pp) + ", e-f+n: " + show(pm) +
                               ", -e-f+n: " + show(mm));
    }
  });
  rec.guarded("nilpotent_five/wsnc_implies_cyclic", [&] {
    const std::string check = "nilpotent_five/wsnc_implies_cyclic";
    if (!rec.premise(check, nil_and_wsnc(5))) return;
    auto m = iso_to_zm(ring);
    bool cyclic = m && power_of_five(*m);
    rec.conclude(check, cyclic,
                 "5 nilpotent and wsnc, but " + ring.label() + " (size " +
                     std::to_string(ring.size()) + ", characteristic " +
                     std::to_string(characteristic(ring)) +
                     ") is not cyclic of order 5^k");
  });
}

void check_quotients(Recorder& rec, const RingFacts& f) {
  const auto& ring = f.ring;
  const auto jac = jacobson_radical(ring);
  const IdealSet radical{ring, jac};
  const bool radical_nil = is_nil_ideal(ring, radical);

  rec.guarded("quotient/nil_ideal_transport", [&] {
    const std::string check = "quotient/nil_ideal_transport";
    auto ideals = principal_ideals(
        ring, [&](Elem g) { return g != ring.zero() && f.census.nilpotent(g); });
    // A nilpotent generator need not generate a nil ideal.
    std::erase_if(ideals, [&](const NamedIdeal& i) {
      return !is_nil_ideal(ring, i.ideal);
    });
    if (radical_nil) {
      ideals.push_back(NamedIdeal{"Jacobson radical", radical});
    }
    if (ideals.empty()) {
      rec.record(check, Outcome::vacuous);
      return;
    }
    for (const auto& [name, ideal] : ideals) {
      auto q = quotient_ring(ring, ideal);
      auto qw = wsnc_of(q.ring, f.budget);
      if (!f.wsnc || !qw) {
        rec.record(check, Outcome::skipped, "unresolved within budget");
        return;
      }
      if (*f.wsnc != *qw) {
        rec.violation(check, "wsnc(R) = " + show(f.wsnc) + ", wsnc(R / " +
                                 name + ") = " + show(qw));
        return;
      }
    }
    rec.pass(check);
  });
  rec.guarded("quotient/radical_criterion", [&] {
    const std::string check = "quotient/radical_criterion";
    Answer rhs = radical_nil;
    if (radical_nil) {
      auto q = quotient_ring(ring, radical);
      rhs = wsnc_of(q.ring, f.budget);
    }
    rec.equivalence(check, f.wsnc, rhs, "wsnc(R)",
                    "J nil and wsnc(R/J)");
  });
  rec.guarded("quotient/ideal_square", [&] {
    const std::string check = "quotient/ideal_square";
    for (const auto& [name, ideal] :
         principal_ideals(ring, [](Elem) { return true; })) {
      auto square = ideal_product(ideal, ideal);
      auto a = wsnc_of(quotient_ring(ring, ideal).ring, f.budget);
      auto b = wsnc_of(quotient_ring(ring, square).ring, f.budget);
      if (!a || !b) {
        rec.record(check, Outcome::skipped, "unresolved within budget");
        return;
      }
      if (*a != *b) {
        rec.violation(check, "for the " + name + ": wsnc(R/I) = " + show(a) +
                                 ", wsnc(R/I^2) = " + show(b));
        return;
      }
    }
    rec.pass(check);
  });
}

void check_structure(Recorder& rec, const RingFacts& f,
                     std::optional<unsigned>& maj_k) {
  const auto& ring = f.ring;
  rec.guarded("structure/decomposition_exists", [&] {
    auto witness = maj_decomposition(ring);
    if (witness) maj_k = witness->k;
    rec.equivalence("structure/decomposition_exists", f.wsnc,
                    witness.has_value(), "wsnc",
                    "cyclic 5-primary split exists");
  });
  rec.guarded("structure/central_splits", [&] {
    for (Elem c : central_idempotents(ring)) split_by_central_idempotent(ring, c);
    rec.pass("structure/central_splits");
  });
}

void check_product(Recorder& rec, const FiniteRing& whole, const FiniteRing& left,
                   const FiniteRing& right, Answer whole_wsnc,
                   std::uint64_t budget) {
  const auto lw = wsnc_of(left, budget);
  const auto rw = wsnc_of(right, budget);
  rec.guarded("product/rule", [&] {
    auto rhs = both(both(lw, rw), either(s2nc_of(left, budget), s2nc_of(right, budget)));
    rec.equivalence("product/rule", whole_wsnc, rhs, "wsnc(" + whole.label() + ")",
                    "factors wsnc and at most one not s2nc");
  });
  rec.guarded("product/factor_images", [&] {
    rec.implication("product/factor_images", whole_wsnc, both(lw, rw),
                    "a factor of a wsnc product is not wsnc");
  });
}

void check_construction(Recorder& rec, const RingExpr& expr, const RingFacts& f,
                        const Limits& limits) {
  using Kind = RingExpr::Kind;
  const auto& ring = f.ring;
  switch (expr.kind) {
    case Kind::product:
      check_product(rec, ring, eval(expr.children[0], limits),
                    eval(expr.children[1], limits), f.wsnc, f.budget);
      break;
    case Kind::tri:
      if (expr.n >= 2) {
        rec.guarded("triangular/s2nc_equivalence", [&] {
          const std::string check = "triangular/s2nc_equivalence";
          auto base = s2nc_of(eval(expr.children[0], limits), f.budget);
          if (!base || !f.s2nc || !f.wsnc) {
            rec.record(check, Outcome::skipped, "unresolved within budget");
          } else if (*base == *f.s2nc && *f.s2nc == *f.wsnc) {
            rec.pass(check);
          } else {
            rec.violation(check, "s2nc(base) = " + show(base) +
                                     ", s2nc(T) = " + show(f.s2nc) +
                                     ", wsnc(T) = " + show(f.wsnc));
          }
        });
      }
      break;
    case Kind::triv_ext: {
      auto base = eval(expr.children[0], limits);
      auto base_wsnc = wsnc_of(base, f.budget);
      rec.guarded("trivial_extension/transport", [&] {
        rec.equivalence("trivial_extension/transport", f.wsnc, base_wsnc,
                        "wsnc(extension)", "wsnc(base)");
      });
      rec.guarded("trivial_extension/square_zero_ideal", [&] {
        const std::string check = "trivial_extension/square_zero_ideal";
        std::vector<Elem> members;
        for (Elem m = 0; m < base.size(); ++m) members.push_back(m * base.size());
        auto ideal = make_ideal(ring, members);
        auto square = ideal_product(ideal, ideal);
        if (square.size() != 1) {
          rec.violation(check, "{(0, m)} does not square to zero");
          return;
        }
        auto q = quotient_ring(ring, ideal);
        if (q.ring.size() != base.size()) {
          rec.violation(check, "quotient size " + std::to_string(q.ring.size()) +
                                   " differs from base size");
          return;
        }
        rec.equivalence(check, wsnc_of(q.ring, f.budget), base_wsnc,
                        "wsnc(extension / {(0, m)})", "wsnc(base)");
      });
      break;
    }
    case Kind::skew_tri:
    case Kind::poly: {
      const bool skew = expr.kind == Kind::skew_tri;
      const auto& inner = expr.children[0];
      auto base = eval(inner, limits);
      const std::string prefix = skew ? "skew_triangular/" : "poly_quotient/";
      rec.guarded(prefix + "transport", [&] {
        rec.equivalence(prefix + "transport", f.wsnc, wsnc_of(base, f.budget),
                        "wsnc(" + ring.label() + ")", "wsnc(base)");
      });
      rec.guarded(prefix + "nilpotent_ideal", [&] {
        const std::string check = prefix + "nilpotent_ideal";
        std::vector<Elem> members;
        for (Elem a = 0; a < ring.size(); ++a) {
          if (a % base.size() == 0) members.push_back(a);
        }
        auto ideal = make_ideal(ring, members);
        auto power = ideal;
        for (std::uint64_t i = 1; i < expr.n; ++i) power = ideal_product(power, ideal);
        if (power.size() != 1) {
          rec.violation(check, "I^" + std::to_string(expr.n) + " has " +
                                   std::to_string(power.size()) + " elements");
          return;
        }
        rec.pass(check);
      });
      break;
    }
    default:
      break;
  }
}

struct JobResult {
  std::vector<SuiteInstance> instances;
  bool wsnc = false;
  std::optional<unsigned> maj_k;
};

JobResult run_catalog_ring(const RingExpr& expr, const SuiteOptions& opt) {
  const auto label = print(expr);
  Recorder rec(label);
  JobResult result;
  std::optional<FiniteRing> ring;
  rec.guarded("ring_axioms", [&] {
    ring = eval(expr, opt.limits);
    auto report = validate_ring(*ring, ValidationMode::automatic);
    if (report.ok) {
      rec.pass("ring_axioms");
    } else {
      rec.violation("ring_axioms", report.axiom + " fails");
      ring.reset();
    }
  });
  if (!ring) {
    result.instances = rec.take();
    return result;
  }

  const auto facts = study(*ring, opt.budget);
  result.wsnc = facts.wsnc.value_or(false);
  check_oracles(rec, facts);
  check_wsnc_consequences(rec, facts);
  check_characteristic_upgrades(rec, facts);
  check_quotients(rec, facts);
  check_structure(rec, facts, result.maj_k);
  check_construction(rec, expr, facts, opt.limits);
  result.instances = rec.take();
  return result;
}

JobResult run_product_pair(const RingExpr& left, const RingExpr& right,
                           const SuiteOptions& opt) {
  const auto expr = RingExpr::product(left, right);
  Recorder rec(print(expr));
  rec.guarded("product/rule", [&] {
    auto whole = eval(expr, opt.limits);
    check_product(rec, whole, eval(left, opt.limits), eval(right, opt.limits),
                  wsnc_of(whole, opt.budget), opt.budget);
  });
  return JobResult{rec.take(), false, std::nullopt};
}

}  // namespace

SuiteReport run_lemma_suite(const std::vector<RingExpr>& catalog,
                            const SuiteOptions& options) {
  const auto& bases = options.product_bases;
  // Pairs already in the catalog get the product checks there.
  std::set<std::string> listed;
  for (const auto& e : catalog) listed.insert(print(e));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i; j < bases.size(); ++j) {
      if (!listed.count(print(RingExpr::product(bases[i], bases[j])))) {
        pairs.emplace_back(i, j);
      }
    }
  }

  const auto jobs = catalog.size() + pairs.size();
  std::vector<JobResult> results(jobs);
  parallel_for(jobs, options.workers, [&](std::size_t k) {
    if (k < catalog.size()) {
      results[k] = run_catalog_ring(catalog[k], options);
    } else {
      auto [i, j] = pairs[k - catalog.size()];
      results[k] = run_product_pair(bases[i], bases[j], options);
    }
  });

  SuiteReport report;
  report.summary.rings = catalog.size();
  report.summary.product_pairs = pairs.size();
  for (std::size_t k = 0; k < jobs; ++k) {
    auto& r = results[k];
    if (k < catalog.size()) {
      if (r.wsnc) ++report.summary.wsnc_rings;
      if (r.maj_k) ++report.summary.cyclic_factor_exponents[*r.maj_k];
    }
    for (auto& inst : r.instances) report.instances.push_back(std::move(inst));
  }
  std::stable_sort(report.instances.begin(), report.instances.end(),
                   [](const SuiteInstance& a, const SuiteInstance& b) {
                     return std::tie(a.ring, a.check) < std::tie(b.ring, b.check);
                   });
  for (const auto& inst : report.instances) {
    ++report.summary.instances;
    switch (inst.outcome) {
      case Outcome::pass: ++report.summary.passed; break;
      case Outcome::vacuous: ++report.summary.vacuous; break;
      case Outcome::violation: ++report.summary.violations; break;
      case Outcome::skipped: ++report.summary.skipped; break;
    }
  }
  return report;
}

}  // namespace nilclean
