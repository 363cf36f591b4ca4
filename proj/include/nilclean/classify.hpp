#pragma once

// Elementwise and setwise classifiers. Set-valued results are sorted index
// lists.

#include <cstdint>
#include <optional>
#include <vector>

#include "nilclean/ring.hpp"

namespace nilclean {

struct NilpotenceWitness {
  Elem element = 0;
  std::uint32_t index = 1;  // least t >= 1 with element^t = 0
};

bool is_unit(const FiniteRing& ring, Elem a);
bool is_idempotent(const FiniteRing& ring, Elem a);
bool is_nilpotent(const FiniteRing& ring, Elem a);
std::optional<NilpotenceWitness> nilpotence(const FiniteRing& ring, Elem a);

std::vector<Elem> idempotents(const FiniteRing& ring);
std::vector<Elem> nilpotents(const FiniteRing& ring);
std::vector<Elem> units(const FiniteRing& ring);
std::vector<Elem> center(const FiniteRing& ring);

// {a : 1 - ra is a unit for every r}.
std::vector<Elem> jacobson_radical(const FiniteRing& ring);

struct PiRegularWitness {
  Elem element = 0;
  std::uint32_t exponent = 1;  // n with a^n = a^{n+1} r
  Elem multiplier = 0;         // r
};

struct PiRegularity {
  bool holds = true;
  std::vector<PiRegularWitness> witnesses;  // one per element that has one
  std::vector<Elem> failing;
};

PiRegularity strong_pi_regularity(const FiniteRing& ring);
bool is_strongly_pi_regular(const FiniteRing& ring);

// Per-ring element census shared by the decomposition searches.
struct ElementCensus {
  std::vector<Elem> idempotents;
  std::vector<Elem> nilpotents;
  // nil_index[a] is the nilpotency index, or 0 if a is not nilpotent.
  std::vector<std::uint32_t> nil_index;

  bool nilpotent(Elem a) const { return nil_index[a] != 0; }
};

ElementCensus take_census(const FiniteRing& ring);

}  // namespace nilclean
