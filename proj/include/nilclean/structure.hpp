#pragma once

// Ideals, quotients, corner rings, central splittings and the
// R = R1 x Z_{5^k} decomposition search.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilclean/ring.hpp"

namespace nilclean {

// A two-sided ideal as a sorted member list.
struct IdealSet {
  FiniteRing ring;
  std::vector<Elem> members;

  bool contains(Elem a) const;
  std::size_t size() const { return members.size(); }
};

// Checks zero membership and closure under addition, negation and two-sided
// multiplication. `members` need not be sorted.
bool is_ideal(const FiniteRing& ring, const std::vector<Elem>& members);

// Validates and wraps an explicit member list; throws NotAnIdeal.
IdealSet make_ideal(const FiniteRing& ring, std::vector<Elem> members);

// Least ideal containing gens: the additive closure of {r g s}.
IdealSet ideal_generated(const FiniteRing& ring, const std::vector<Elem>& gens);

// The ideal generated by all products ab with a in I, b in J.
IdealSet ideal_product(const IdealSet& left, const IdealSet& right);

bool is_nil_ideal(const FiniteRing& ring, const IdealSet& ideal);

struct QuotientRing {
  FiniteRing ring;
  std::vector<Elem> projection;       // R index -> quotient index
  std::vector<Elem> representatives;  // quotient index -> least R index
};

// Coset ring with least-index representatives, ordered by representative.
QuotientRing quotient_ring(const FiniteRing& ring, const IdealSet& ideal);

struct CornerRing {
  FiniteRing ring;
  Elem idempotent = 0;
  std::vector<Elem> embedding;  // corner index -> R index (sorted)
};

// eRe with identity e. e = 0 yields the trivial ring. Throws NotIdempotent.
CornerRing corner_ring(const FiniteRing& ring, Elem e);

std::vector<Elem> central_idempotents(const FiniteRing& ring);

struct CentralSplit {
  CornerRing first;   // cRc
  CornerRing second;  // (1-c)R(1-c)
};

// Verifies that r -> (crc, (1-c)r(1-c)) is a bijective ring homomorphism
// onto the product of the corners. Throws NotCentralIdempotent, or
// IsoCheckFailed if the verification fails.
CentralSplit split_by_central_idempotent(const FiniteRing& ring, Elem c);

// m = size when 1 generates the additive group (then r -> r * 1 is an
// isomorphism from Z_m), otherwise nullopt.
std::optional<std::uint64_t> iso_to_zm(const FiniteRing& ring);

// If m = 5^k with k >= 1, returns k.
std::optional<unsigned> power_of_five(std::uint64_t m);

struct MajWitness {
  Elem central_idempotent = 0;
  unsigned k = 0;  // 0: the Z_{5^k} factor is trivial
  std::string cyclic_corner_label;
  std::string s2nc_corner_label;
  std::size_t cyclic_corner_size = 0;
  std::size_t s2nc_corner_size = 0;
};

// First central idempotent c (index order) with cRc trivial or cyclic of
// order 5^k, and (1-c)R(1-c) strongly 2-nil-clean by the polynomial
// criterion.
std::optional<MajWitness> maj_decomposition(const FiniteRing& ring);

}  // namespace nilclean
