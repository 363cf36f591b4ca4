#pragma once

// Runs every implication and equivalence instance the library knows how to
// check over a catalog of ring expressions. A violation is a failed check,
// never a tolerated outcome.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "nilclean/decompose.hpp"
#include "nilclean/ringspec.hpp"

namespace nilclean {

enum class Outcome { pass, vacuous, violation, skipped };

std::string_view to_string(Outcome o);

struct SuiteInstance {
  std::string ring;
  std::string check;
  Outcome outcome = Outcome::pass;
  std::string witness;  // empty unless the check failed or was skipped
};

struct SuiteSummary {
  std::size_t rings = 0;         // catalog rings
  std::size_t wsnc_rings = 0;    // catalog rings classified wsnc by search
  std::size_t product_pairs = 0;
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::size_t vacuous = 0;
  std::size_t violations = 0;
  std::size_t skipped = 0;
  // k of the cyclic 5-primary factor found by the decomposition search,
  // with the number of catalog rings that produced it.
  std::map<unsigned, std::size_t> cyclic_factor_exponents;
};

struct SuiteReport {
  std::vector<SuiteInstance> instances;  // sorted by ring label, then check
  SuiteSummary summary;

  bool clean() const { return summary.violations == 0; }
};

struct SuiteOptions {
  Limits limits;
  std::uint64_t budget = 10'000'000;
  unsigned workers = 1;
  // Every unordered pair (with repetition) of these is checked against the
  // product rule, in addition to the catalog.
  std::vector<RingExpr> product_bases;
};

SuiteReport run_lemma_suite(const std::vector<RingExpr>& catalog,
                            const SuiteOptions& options = {});

// Z2, Z3, Z4, Z5, Z6, Z9, Z25.
std::vector<RingExpr> default_product_bases();

}  // namespace nilclean
