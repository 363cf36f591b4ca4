#include "nilclean/decompose.hpp"

#include <span>
#include <utility>

#include "nilclean/parallel.hpp"

namespace nilclean {

std::string_view short_name(NilCleanClass cls) {
  switch (cls) {
    case NilCleanClass::strongly_nil_clean: return "snc";
    case NilCleanClass::strongly_2_nil_clean: return "s2nc";
    case NilCleanClass::strongly_weakly_nil_clean: return "swnc";
    case NilCleanClass::weakly_strongly_2_nil_clean: return "wsnc";
  }
  return "?";
}

std::string_view long_name(NilCleanClass cls) {
  switch (cls) {
    case NilCleanClass::strongly_nil_clean: return "strongly nil-clean";
    case NilCleanClass::strongly_2_nil_clean: return "strongly 2-nil-clean";
    case NilCleanClass::strongly_weakly_nil_clean:
      return "strongly weakly nil-clean";
    case NilCleanClass::weakly_strongly_2_nil_clean:
      return "weakly strongly 2-nil-clean";
  }
  return "?";
}

std::optional<NilCleanClass> parse_class(std::string_view name) {
  for (auto cls : kAllClasses) {
    if (short_name(cls) == name || long_name(cls) == name) return cls;
  }
  return std::nullopt;
}

bool uses_two_idempotents(NilCleanClass cls) {
  return cls == NilCleanClass::strongly_2_nil_clean ||
         cls == NilCleanClass::weakly_strongly_2_nil_clean;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "true";
    case Verdict::fails: return "false";
    case Verdict::unresolved: return "unresolved";
  }
  return "?";
}

namespace {

using SignPair = std::pair<int, int>;

std::vector<SignPair> sign_patterns(NilCleanClass cls) {
  switch (cls) {
    case NilCleanClass::strongly_nil_clean: return {{1, 1}};
    case NilCleanClass::strongly_2_nil_clean: return {{1, 1}};
    case NilCleanClass::strongly_weakly_nil_clean: return {{1, 1}, {-1, 1}};
    case NilCleanClass::weakly_strongly_2_nil_clean:
      return {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  }
  return {};
}

Elem signed_term(const FiniteRing& ring, int sign, Elem x) {
  return sign > 0 ? x : ring.neg(x);
}

std::optional<Certificate> search_two(const FiniteRing& ring,
                                      const ElementCensus& census, Elem a,
                                      NilCleanClass cls,
                                      std::span<const SignPair> patterns) {
  const Elem zero = ring.zero();
  for (auto [se, sf] : patterns) {
    auto attempt = [&](Elem e, Elem f) -> std::optional<Certificate> {
      Elem rest = ring.sub(a, signed_term(ring, se, e));
      Elem n = ring.sub(rest, signed_term(ring, sf, f));
      if (!census.nilpotent(n)) return std::nullopt;
      if (!commute(ring, e, f) || !commute(ring, e, n) || !commute(ring, f, n)) {
        return std::nullopt;
      }
      return Certificate{cls, a, se, sf, e, f, n, census.nil_index[n]};
    };
    for (Elem e : census.idempotents) {
      if (auto c = attempt(e, zero)) return c;
    }
    for (Elem e : census.idempotents) {
      for (Elem f : census.idempotents) {
        if (f == zero) continue;
        if (auto c = attempt(e, f)) return c;
      }
    }
  }
  return std::nullopt;
}

std::optional<Certificate> search_one(const FiniteRing& ring,
                                      const ElementCensus& census, Elem a,
                                      NilCleanClass cls,
                                      std::span<const SignPair> patterns) {
  for (auto [se, unused] : patterns) {
    (void)unused;
    for (Elem e : census.idempotents) {
      Elem n = ring.sub(a, signed_term(ring, se, e));
      if (census.nilpotent(n) && commute(ring, e, n)) {
        return Certificate{cls, a, se, std::nullopt, e, std::nullopt, n,
                           census.nil_index[n]};
      }
    }
  }
  return std::nullopt;
}

void check_budget(const ElementCensus& census, NilCleanClass cls,
                  const SearchOptions& options) {
  auto required = search_space(census, cls);
  if (required > options.budget) throw BudgetExceeded(required, options.budget);
}

}  // namespace

std::uint64_t search_space(const ElementCensus& census, NilCleanClass cls) {
  const std::uint64_t ids = census.idempotents.size();
  const std::uint64_t nils = census.nilpotents.size();
  const std::uint64_t signs = sign_patterns(cls).size();
  return uses_two_idempotents(cls) ? signs * ids * ids * nils
                                   : signs * ids * nils;
}

std::optional<Certificate> find_certificate(const FiniteRing& ring,
                                            const ElementCensus& census,
                                            Elem a, NilCleanClass cls,
                                            const SearchOptions& options) {
  check_budget(census, cls, options);
  auto patterns = sign_patterns(cls);
  return uses_two_idempotents(cls)
             ? search_two(ring, census, a, cls, patterns)
             : search_one(ring, census, a, cls, patterns);
}

std::optional<Certificate> find_wsnc_certificate(const FiniteRing& ring, Elem a,
                                                 const SearchOptions& options) {
  return find_certificate(ring, take_census(ring), a,
                          NilCleanClass::weakly_strongly_2_nil_clean, options);
}

std::optional<Certificate> find_s2nc_certificate(const FiniteRing& ring, Elem a,
                                                 const SearchOptions& options) {
  return find_certificate(ring, take_census(ring), a,
                          NilCleanClass::strongly_2_nil_clean, options);
}

std::optional<Certificate> find_swnc_certificate(const FiniteRing& ring, Elem a,
                                                 const SearchOptions& options) {
  return find_certificate(ring, take_census(ring), a,
                          NilCleanClass::strongly_weakly_nil_clean, options);
}

std::optional<Certificate> find_snc_certificate(const FiniteRing& ring, Elem a,
                                                const SearchOptions& options) {
  return find_certificate(ring, take_census(ring), a,
                          NilCleanClass::strongly_nil_clean, options);
}

bool verify_certificate(const FiniteRing& ring, Elem a, const Certificate& c) {
  const auto size = ring.size();
  if (c.element != a || c.e >= size || c.n >= size) return false;
  const bool two = uses_two_idempotents(c.cls);
  if (two != c.f.has_value() || two != c.sign_f.has_value()) return false;
  if (c.sign_e != 1 && c.sign_e != -1) return false;

  const Elem f = c.f.value_or(ring.zero());
  const int sign_f = c.sign_f.value_or(1);
  if (f >= size || (sign_f != 1 && sign_f != -1)) return false;
  if (c.cls == NilCleanClass::strongly_nil_clean ||
      c.cls == NilCleanClass::strongly_2_nil_clean) {
    if (c.sign_e != 1 || sign_f != 1) return false;
  }

  if (ring.mul(c.e, c.e) != c.e || ring.mul(f, f) != f) return false;

  if (c.nil_index == 0 || pow(ring, c.n, c.nil_index) != ring.zero()) {
    return false;
  }
  if (c.nil_index > 1 && pow(ring, c.n, c.nil_index - 1) == ring.zero()) {
    return false;
  }

  const Elem parts[3] = {c.e, f, c.n};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (ring.mul(parts[i], parts[j]) != ring.mul(parts[j], parts[i])) {
        return false;
      }
    }
    if (ring.mul(parts[i], a) != ring.mul(a, parts[i])) return false;
  }

  Elem sum = c.sign_e > 0 ? c.e : ring.neg(c.e);
  sum = ring.add(sum, sign_f > 0 ? f : ring.neg(f));
  sum = ring.add(sum, c.n);
  return sum == a;
}

SignVariants sign_variant_certificates(const FiniteRing& ring,
                                       const ElementCensus& census, Elem a,
                                       const SearchOptions& options) {
  constexpr auto cls = NilCleanClass::weakly_strongly_2_nil_clean;
  // one sign pattern each
  auto required = search_space(census, cls) / 4;
  if (required > options.budget) throw BudgetExceeded(required, options.budget);

  SignVariants v;
  const SignPair pp[] = {{1, 1}};
  const SignPair pm[] = {{1, -1}};
  const SignPair mm[] = {{-1, -1}};
  v.plus_plus = search_two(ring, census, a, cls, pp);
  v.plus_minus = search_two(ring, census, a, cls, pm);
  v.minus_minus = search_two(ring, census, a, cls, mm);
  return v;
}

SignVariants sign_variant_certificates(const FiniteRing& ring, Elem a,
                                       const SearchOptions& options) {
  return sign_variant_certificates(ring, take_census(ring), a, options);
}

std::vector<std::optional<Certificate>> certify_all(
    const FiniteRing& ring, const ElementCensus& census, NilCleanClass cls,
    const SearchOptions& options) {
  check_budget(census, cls, options);
  std::vector<std::optional<Certificate>> out(ring.size());
  auto patterns = sign_patterns(cls);
  const bool two = uses_two_idempotents(cls);
  parallel_for(ring.size(), options.workers, [&](std::size_t i) {
    auto a = static_cast<Elem>(i);
    out[i] = two ? search_two(ring, census, a, cls, patterns)
                 : search_one(ring, census, a, cls, patterns);
  });
  return out;
}

ClassEntry is_class(const FiniteRing& ring, const ElementCensus& census,
                    NilCleanClass cls, const SearchOptions& options) {
  ClassEntry entry;
  entry.cls = cls;
  std::vector<std::optional<Certificate>> certs;
  try {
    certs = certify_all(ring, census, cls, options);
  } catch (const BudgetExceeded&) {
    entry.verdict = Verdict::unresolved;
    return entry;
  }
  for (std::size_t i = 0; i < certs.size(); ++i) {
    if (!certs[i]) entry.failing.push_back(static_cast<Elem>(i));
  }
  entry.verdict = entry.failing.empty() ? Verdict::holds : Verdict::fails;
  if (!entry.failing.empty()) entry.witness = entry.failing.front();
  return entry;
}

ClassEntry is_class(const FiniteRing& ring, NilCleanClass cls,
                    const SearchOptions& options) {
  return is_class(ring, take_census(ring), cls, options);
}

WsncCriterion criterion_wsnc(const FiniteRing& ring,
                             const ElementCensus& census) {
  WsncCriterion result;
  result.thirty_nilpotent = census.nilpotent(int_image(ring, 30));
  result.branches.assign(ring.size(), 0);

  const Elem one = ring.one();
  const Elem two = int_image(ring, 2);
  std::uint8_t common = kCubeMinusSelf | kShiftedDown | kShiftedUp;
  for (Elem a = 0; a < ring.size(); ++a) {
    Elem cube_minus_self = ring.sub(pow(ring, a, 3), a);
    Elem down = ring.mul(ring.mul(a, ring.sub(a, one)), ring.sub(a, two));
    Elem up = ring.mul(ring.mul(a, ring.add(a, one)), ring.add(a, two));
    std::uint8_t bits = 0;
    if (census.nilpotent(cube_minus_self)) bits |= kCubeMinusSelf;
    if (census.nilpotent(down)) bits |= kShiftedDown;
    if (census.nilpotent(up)) bits |= kShiftedUp;
    result.branches[a] = bits;
    common &= bits;
    if (bits == 0) result.failing.push_back(a);
  }
  result.holds = result.thirty_nilpotent && result.failing.empty();
  for (auto b : {kCubeMinusSelf, kShiftedDown, kShiftedUp}) {
    if (common & b) {
      result.uniform_branch = b;
      break;
    }
  }
  return result;
}

WsncCriterion criterion_wsnc(const FiniteRing& ring) {
  return criterion_wsnc(ring, take_census(ring));
}

S2ncCriterion criterion_s2nc(const FiniteRing& ring,
                             const ElementCensus& census) {
  S2ncCriterion result;
  for (Elem a = 0; a < ring.size(); ++a) {
    if (!census.nilpotent(ring.sub(a, pow(ring, a, 3)))) {
      result.failing.push_back(a);
    }
  }
  result.holds = result.failing.empty();
  return result;
}

S2ncCriterion criterion_s2nc(const FiniteRing& ring) {
  return criterion_s2nc(ring, take_census(ring));
}

bool ClassificationReport::oracles_agree() const {
  auto brute = [&](NilCleanClass cls) { return entry(cls).verdict; };
  auto agrees = [](Verdict v, bool criterion) {
    return v == Verdict::unresolved || (v == Verdict::holds) == criterion;
  };
  return agrees(brute(NilCleanClass::weakly_strongly_2_nil_clean),
                wsnc_criterion.holds) &&
         agrees(brute(NilCleanClass::strongly_2_nil_clean),
                s2nc_criterion.holds);
}

ClassificationReport classify_ring(const FiniteRing& ring,
                                   const SearchOptions& options) {
  ClassificationReport report;
  auto census = take_census(ring);
  report.label = ring.label();
  report.size = ring.size();
  report.characteristic = characteristic(ring);
  report.idempotent_count = census.idempotents.size();
  report.nilpotent_count = census.nilpotents.size();
  report.unit_count = units(ring).size();
  report.radical_count = jacobson_radical(ring).size();
  for (std::size_t i = 0; i < kAllClasses.size(); ++i) {
    report.entries[i] = is_class(ring, census, kAllClasses[i], options);
  }
  report.wsnc_criterion = criterion_wsnc(ring, census);
  report.s2nc_criterion = criterion_s2nc(ring, census);
  return report;
}

}  // namespace nilclean
