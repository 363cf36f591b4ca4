#include "nilclean/classify.hpp"

namespace nilclean {

bool is_unit(const FiniteRing& ring, Elem a) {
  for (Elem b = 0; b < ring.size(); ++b) {
    if (ring.mul(a, b) == ring.one() && ring.mul(b, a) == ring.one()) {
      return true;
    }
  }
  return false;
}

bool is_idempotent(const FiniteRing& ring, Elem a) {
  return ring.mul(a, a) == a;
}

bool is_nilpotent(const FiniteRing& ring, Elem a) {
  // Distinct powers precede zero, so the index never exceeds the size.
  return pow(ring, a, ring.size()) == ring.zero();
}

std::optional<NilpotenceWitness> nilpotence(const FiniteRing& ring, Elem a) {
  if (!is_nilpotent(ring, a)) return std::nullopt;
  std::uint32_t t = 1;
  for (Elem p = a; p != ring.zero(); p = ring.mul(p, a)) ++t;
  return NilpotenceWitness{a, t};
}

std::vector<Elem> idempotents(const FiniteRing& ring) {
  std::vector<Elem> out;
  for (Elem a = 0; a < ring.size(); ++a) {
    if (is_idempotent(ring, a)) out.push_back(a);
  }
  return out;
}

std::vector<Elem> nilpotents(const FiniteRing& ring) {
  std::vector<Elem> out;
  for (Elem a = 0; a < ring.size(); ++a) {
    if (is_nilpotent(ring, a)) out.push_back(a);
  }
  return out;
}

std::vector<Elem> units(const FiniteRing& ring) {
  std::vector<Elem> out;
  for (Elem a = 0; a < ring.size(); ++a) {
    if (is_unit(ring, a)) out.push_back(a);
  }
  return out;
}

std::vector<Elem> center(const FiniteRing& ring) {
  std::vector<Elem> out;
  for (Elem a = 0; a < ring.size(); ++a) {
    bool central = true;
    for (Elem b = 0; b < ring.size() && central; ++b) {
      central = commute(ring, a, b);
    }
    if (central) out.push_back(a);
  }
  return out;
}

std::vector<Elem> jacobson_radical(const FiniteRing& ring) {
  const auto n = ring.size();
  std::vector<char> unit(n, 0);
  for (auto u : units(ring)) unit[u] = 1;

  std::vector<Elem> out;
  for (Elem a = 0; a < n; ++a) {
    bool in_radical = true;
    for (Elem r = 0; r < n && in_radical; ++r) {
      in_radical = unit[ring.sub(ring.one(), ring.mul(r, a))] != 0;
    }
    if (in_radical) out.push_back(a);
  }
  return out;
}

PiRegularity strong_pi_regularity(const FiniteRing& ring) {
  const auto n = ring.size();
  PiRegularity result;
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    Elem an = a;  // a^k
    for (std::uint32_t k = 1; k <= n && !found; ++k) {
      Elem next = ring.mul(an, a);  // a^{k+1}
      for (Elem r = 0; r < n; ++r) {
        if (ring.mul(next, r) == an) {
          result.witnesses.push_back({a, k, r});
          found = true;
          break;
        }
      }
      an = next;
    }
    if (!found) {
      result.holds = false;
      result.failing.push_back(a);
    }
  }
  return result;
}

bool is_strongly_pi_regular(const FiniteRing& ring) {
  return strong_pi_regularity(ring).holds;
}

ElementCensus take_census(const FiniteRing& ring) {
  ElementCensus census;
  census.nil_index.assign(ring.size(), 0);
  for (Elem a = 0; a < ring.size(); ++a) {
    if (is_idempotent(ring, a)) census.idempotents.push_back(a);
    if (auto w = nilpotence(ring, a)) {
      census.nilpotents.push_back(a);
      census.nil_index[a] = w->index;
    }
  }
  return census;
}

}  // namespace nilclean
