#pragma once

// Certificate searches for the four clean-type classes, together with the
// polynomial criteria they are cross-checked against.
//
// Search order is fixed, so the first certificate found is canonical:
//   1. sign patterns in the order (+,+), (+,-), (-,+), (-,-);
//   2. within a sign pattern, decompositions with f = 0 first, then (e, f)
//      in lexicographic index order; n is determined by (e, f).

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "nilclean/classify.hpp"
#include "nilclean/ring.hpp"

namespace nilclean {

enum class NilCleanClass {
  strongly_nil_clean,         // a = e + n
  strongly_2_nil_clean,       // a = e + f + n
  strongly_weakly_nil_clean,  // a = +-e + n
  weakly_strongly_2_nil_clean // a = +-e +-f + n
};

inline constexpr std::array<NilCleanClass, 4> kAllClasses{
    NilCleanClass::strongly_nil_clean, NilCleanClass::strongly_2_nil_clean,
    NilCleanClass::strongly_weakly_nil_clean,
    NilCleanClass::weakly_strongly_2_nil_clean};

std::string_view short_name(NilCleanClass cls);  // "snc", "s2nc", ...
std::string_view long_name(NilCleanClass cls);
// Accepts the short or the long name.
std::optional<NilCleanClass> parse_class(std::string_view name);
bool uses_two_idempotents(NilCleanClass cls);

// element = sign_e * e + sign_f * f + n, with e, f, n pairwise commuting.
// The f-terms are absent for the one-idempotent classes.
struct Certificate {
  NilCleanClass cls = NilCleanClass::weakly_strongly_2_nil_clean;
  Elem element = 0;
  int sign_e = 1;
  std::optional<int> sign_f;
  Elem e = 0;
  std::optional<Elem> f;
  Elem n = 0;
  std::uint32_t nil_index = 1;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct SearchOptions {
  std::uint64_t budget = 10'000'000;
  unsigned workers = 1;
};

// Nominal (sign, e, f, n) tuple count for one element; compared against
// the budget before any search starts.
std::uint64_t search_space(const ElementCensus& census, NilCleanClass cls);

// Throws BudgetExceeded when search_space exceeds the budget.
std::optional<Certificate> find_certificate(const FiniteRing& ring,
                                            const ElementCensus& census,
                                            Elem a, NilCleanClass cls,
                                            const SearchOptions& options = {});

std::optional<Certificate> find_wsnc_certificate(const FiniteRing& ring, Elem a,
                                                 const SearchOptions& options = {});
std::optional<Certificate> find_s2nc_certificate(const FiniteRing& ring, Elem a,
                                                 const SearchOptions& options = {});
std::optional<Certificate> find_swnc_certificate(const FiniteRing& ring, Elem a,
                                                 const SearchOptions& options = {});
std::optional<Certificate> find_snc_certificate(const FiniteRing& ring, Elem a,
                                                const SearchOptions& options = {});

// Re-checks a certificate from scratch: idempotency, least nilpotency index,
// pairwise commutation, commutation with the element, and the signed sum.
bool verify_certificate(const FiniteRing& ring, Elem a, const Certificate& cert);

// Independent searches with each sign pattern held fixed.
struct SignVariants {
  std::optional<Certificate> plus_plus;    // a = e + f + n
  std::optional<Certificate> plus_minus;   // a = e - f + n
  std::optional<Certificate> minus_minus;  // a = -e - f + n
};

SignVariants sign_variant_certificates(const FiniteRing& ring,
                                       const ElementCensus& census, Elem a,
                                       const SearchOptions& options = {});
SignVariants sign_variant_certificates(const FiniteRing& ring, Elem a,
                                       const SearchOptions& options = {});

// One certificate slot per element, in index order.
std::vector<std::optional<Certificate>> certify_all(
    const FiniteRing& ring, const ElementCensus& census, NilCleanClass cls,
    const SearchOptions& options = {});

enum class Verdict { holds, fails, unresolved };

std::string_view to_string(Verdict v);

struct ClassEntry {
  NilCleanClass cls = NilCleanClass::weakly_strongly_2_nil_clean;
  Verdict verdict = Verdict::holds;
  std::optional<Elem> witness;  // least failing element
  std::vector<Elem> failing;    // every failing element
};

ClassEntry is_class(const FiniteRing& ring, const ElementCensus& census,
                    NilCleanClass cls, const SearchOptions& options = {});
ClassEntry is_class(const FiniteRing& ring, NilCleanClass cls,
                    const SearchOptions& options = {});

// Branch bits for the per-element cubic conditions.
enum CubicBranch : std::uint8_t {
  kCubeMinusSelf = 1,  // a^3 - a
  kShiftedDown = 2,    // a(a-1)(a-2)
  kShiftedUp = 4,      // a(a+1)(a+2)
};

struct WsncCriterion {
  bool thirty_nilpotent = false;
  bool holds = false;
  // branches[a] is the set of cubic conditions that are nilpotent at a.
  std::vector<std::uint8_t> branches;
  std::vector<Elem> failing;  // elements satisfying no branch
  // A single branch satisfied by every element, if any (diagnostic for the
  // uniform reading of the quantifier).
  std::optional<CubicBranch> uniform_branch;
};

// 30 nilpotent, and each element satisfies at least one cubic condition.
WsncCriterion criterion_wsnc(const FiniteRing& ring);
WsncCriterion criterion_wsnc(const FiniteRing& ring, const ElementCensus& census);

struct S2ncCriterion {
  bool holds = true;
  std::vector<Elem> failing;  // elements with a - a^3 not nilpotent
};

S2ncCriterion criterion_s2nc(const FiniteRing& ring);
S2ncCriterion criterion_s2nc(const FiniteRing& ring, const ElementCensus& census);

struct ClassificationReport {
  std::string label;
  std::size_t size = 0;
  std::uint64_t characteristic = 0;
  std::size_t idempotent_count = 0;
  std::size_t nilpotent_count = 0;
  std::size_t unit_count = 0;
  std::size_t radical_count = 0;
  std::array<ClassEntry, 4> entries;  // indexed like kAllClasses
  WsncCriterion wsnc_criterion;
  S2ncCriterion s2nc_criterion;

  const ClassEntry& entry(NilCleanClass cls) const {
    return entries[static_cast<std::size_t>(cls)];
  }
  // Brute force and criterion agree wherever both are resolved.
  bool oracles_agree() const;
};

ClassificationReport classify_ring(const FiniteRing& ring,
                                   const SearchOptions& options = {});

}  // namespace nilclean
