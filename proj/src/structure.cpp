#include "nilclean/structure.hpp"

#include <algorithm>
#include <limits>

#include "nilclean/classify.hpp"
#include "nilclean/constructions.hpp"
#include "nilclean/decompose.hpp"

namespace nilclean {

namespace {

constexpr Elem kNone = std::numeric_limits<Elem>::max();

std::string member_list(const std::vector<Elem>& members) {
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) s += ", ";
    if (i == 8) {
      s += "... " + std::to_string(members.size()) + " elements";
      break;
    }
    s += std::to_string(members[i]);
  }
  return s + "}";
}

// Subgroup generated by `seeds`, as a membership mask.
std::vector<char> additive_span(const FiniteRing& ring,
                                const std::vector<Elem>& seeds) {
  std::vector<char> in(ring.size(), 0);
  std::vector<Elem> members{ring.zero()};
  in[ring.zero()] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Elem t : seeds) {
      Elem y = ring.add(members[i], t);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  return in;
}

std::vector<Elem> mask_to_list(const std::vector<char>& mask) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(static_cast<Elem>(i));
  }
  return out;
}

}  // namespace

bool IdealSet::contains(Elem a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

bool is_ideal(const FiniteRing& ring, const std::vector<Elem>& members) {
  std::vector<char> in(ring.size(), 0);
  for (Elem m : members) {
    if (m >= ring.size()) return false;
    in[m] = 1;
  }
  if (!in[ring.zero()]) return false;
  for (Elem a : members) {
    if (!in[ring.neg(a)]) return false;
    for (Elem b : members) {
      if (!in[ring.add(a, b)]) return false;
    }
    for (Elem r = 0; r < ring.size(); ++r) {
      if (!in[ring.mul(r, a)] || !in[ring.mul(a, r)]) return false;
    }
  }
  return true;
}

IdealSet make_ideal(const FiniteRing& ring, std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!is_ideal(ring, members)) {
    throw NotAnIdeal(member_list(members) + " is not an ideal of " +
                     ring.label());
  }
  return IdealSet{ring, std::move(members)};
}

IdealSet ideal_generated(const FiniteRing& ring, const std::vector<Elem>& gens) {
  const auto n = ring.size();
  std::vector<char> seen_gen(n, 0);
  std::vector<char> seen_seed(n, 0);
  std::vector<Elem> seeds;
  for (Elem g : gens) {
    if (g >= n || seen_gen[g]) continue;
    seen_gen[g] = 1;
    for (Elem r = 0; r < n; ++r) {
      Elem rg = ring.mul(r, g);
      for (Elem s = 0; s < n; ++s) {
        Elem t = ring.mul(rg, s);
        if (!seen_seed[t]) {
          seen_seed[t] = 1;
          seeds.push_back(t);
        }
      }
    }
  }
  return IdealSet{ring, mask_to_list(additive_span(ring, seeds))};
}

IdealSet ideal_product(const IdealSet& left, const IdealSet& right) {
  const auto& ring = left.ring;
  std::vector<char> seen(ring.size(), 0);
  std::vector<Elem> gens;
  for (Elem a : left.members) {
    for (Elem b : right.members) {
      Elem p = ring.mul(a, b);
      if (!seen[p]) {
        seen[p] = 1;
        gens.push_back(p);
      }
    }
  }
  return ideal_generated(ring, gens);
}

bool is_nil_ideal(const FiniteRing& ring, const IdealSet& ideal) {
  return std::all_of(ideal.members.begin(), ideal.members.end(),
                     [&](Elem a) { return is_nilpotent(ring, a); });
}

QuotientRing quotient_ring(const FiniteRing& ring, const IdealSet& ideal) {
  if (!is_ideal(ring, ideal.members)) {
    throw NotAnIdeal(member_list(ideal.members) + " is not an ideal of " +
                     ring.label());
  }
  const auto n = ring.size();
  std::vector<Elem> least(n, kNone);
  for (Elem a = 0; a < n; ++a) {
    for (Elem i : ideal.members) least[a] = std::min(least[a], ring.add(a, i));
  }

  QuotientRing q{ring, std::vector<Elem>(n), {}};
  std::vector<Elem> slot(n, kNone);
  for (Elem a = 0; a < n; ++a) {
    if (least[a] == a) {
      slot[a] = static_cast<Elem>(q.representatives.size());
      q.representatives.push_back(a);
    }
  }
  for (Elem a = 0; a < n; ++a) q.projection[a] = slot[least[a]];

  const auto m = q.representatives.size();
  std::vector<Elem> add(m * m);
  std::vector<Elem> mul(m * m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      Elem rx = q.representatives[x];
      Elem ry = q.representatives[y];
      add[x * m + y] = q.projection[ring.add(rx, ry)];
      mul[x * m + y] = q.projection[ring.mul(rx, ry)];
    }
  }
  q.ring = FiniteRing::from_tables(ring.label() + " / " +
                                       member_list(ideal.members),
                                   m, std::move(add), std::move(mul),
                                   q.projection[ring.zero()],
                                   q.projection[ring.one()]);
  return q;
}

CornerRing corner_ring(const FiniteRing& ring, Elem e) {
  if (e >= ring.size() || !is_idempotent(ring, e)) {
    throw NotIdempotent(std::to_string(e) + " is not an idempotent of " +
                        ring.label());
  }
  const auto n = ring.size();
  std::vector<char> in(n, 0);
  for (Elem r = 0; r < n; ++r) in[ring.mul(ring.mul(e, r), e)] = 1;

  CornerRing corner{ring, e, mask_to_list(in)};
  std::vector<Elem> slot(n, kNone);
  for (std::size_t i = 0; i < corner.embedding.size(); ++i) {
    slot[corner.embedding[i]] = static_cast<Elem>(i);
  }
  const auto m = corner.embedding.size();
  std::vector<Elem> add(m * m);
  std::vector<Elem> mul(m * m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      Elem a = corner.embedding[x];
      Elem b = corner.embedding[y];
      add[x * m + y] = slot[ring.add(a, b)];
      mul[x * m + y] = slot[ring.mul(a, b)];
    }
  }
  corner.ring = FiniteRing::from_tables(
      "corner(" + ring.label() + ", " + std::to_string(e) + ")", m,
      std::move(add), std::move(mul), slot[ring.zero()], slot[e]);
  return corner;
}

std::vector<Elem> central_idempotents(const FiniteRing& ring) {
  std::vector<Elem> out;
  for (Elem e : idempotents(ring)) {
    bool central = true;
    for (Elem r = 0; r < ring.size() && central; ++r) {
      central = commute(ring, e, r);
    }
    if (central) out.push_back(e);
  }
  return out;
}

CentralSplit split_by_central_idempotent(const FiniteRing& ring, Elem c) {
  if (c >= ring.size() || !is_idempotent(ring, c)) {
    throw NotCentralIdempotent(std::to_string(c) + " is not idempotent");
  }
  for (Elem r = 0; r < ring.size(); ++r) {
    if (!commute(ring, c, r)) {
      throw NotCentralIdempotent(std::to_string(c) + " is not central");
    }
  }
  const Elem complement = ring.sub(ring.one(), c);
  CentralSplit split{corner_ring(ring, c), corner_ring(ring, complement)};

  const auto& first = split.first;
  const auto& second = split.second;
  const auto n = ring.size();
  if (first.ring.size() * second.ring.size() != n) {
    throw IsoCheckFailed("corner sizes do not multiply to " +
                         std::to_string(n));
  }

  auto local_index = [](const CornerRing& corner, Elem x) {
    auto it = std::lower_bound(corner.embedding.begin(),
                               corner.embedding.end(), x);
    return static_cast<Elem>(it - corner.embedding.begin());
  };
  // phi(r) as a pair of corner indices
  std::vector<std::pair<Elem, Elem>> phi(n);
  for (Elem r = 0; r < n; ++r) {
    phi[r] = {local_index(first, ring.mul(ring.mul(c, r), c)),
              local_index(second,
                          ring.mul(ring.mul(complement, r), complement))};
  }
  std::vector<char> hit(n, 0);
  for (Elem r = 0; r < n; ++r) {
    auto code = phi[r].first + first.ring.size() * phi[r].second;
    if (hit[code]) throw IsoCheckFailed("splitting map is not injective");
    hit[code] = 1;
  }
  if (phi[ring.one()] != std::pair{first.ring.one(), second.ring.one()}) {
    throw IsoCheckFailed("splitting map does not preserve one");
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      auto s = phi[ring.add(a, b)];
      auto p = phi[ring.mul(a, b)];
      if (s.first != first.ring.add(phi[a].first, phi[b].first) ||
          s.second != second.ring.add(phi[a].second, phi[b].second) ||
          p.first != first.ring.mul(phi[a].first, phi[b].first) ||
          p.second != second.ring.mul(phi[a].second, phi[b].second)) {
        throw IsoCheckFailed("splitting map is not a homomorphism at (" +
                             std::to_string(a) + ", " + std::to_string(b) +
                             ")");
      }
    }
  }
  return split;
}

std::optional<std::uint64_t> iso_to_zm(const FiniteRing& ring) {
  if (characteristic(ring) == ring.size()) return ring.size();
  return std::nullopt;
}

std::optional<unsigned> power_of_five(std::uint64_t m) {
  if (m < 5) return std::nullopt;
  unsigned k = 0;
  while (m % 5 == 0) {
    m /= 5;
    ++k;
  }
  if (m != 1) return std::nullopt;
  return k;
}

std::optional<MajWitness> maj_decomposition(const FiniteRing& ring) {
  for (Elem c : central_idempotents(ring)) {
    auto cyclic = corner_ring(ring, c);
    unsigned k = 0;
    if (cyclic.ring.size() > 1) {
      auto m = iso_to_zm(cyclic.ring);
      auto five = m ? power_of_five(*m) : std::nullopt;
      if (!five) continue;
      k = *five;
    }
    auto rest = corner_ring(ring, ring.sub(ring.one(), c));
    if (!criterion_s2nc(rest.ring).holds) continue;
    return MajWitness{c,
                      k,
                      cyclic.ring.label(),
                      rest.ring.label(),
                      cyclic.ring.size(),
                      rest.ring.size()};
  }
  return std::nullopt;
}

}  // namespace nilclean
