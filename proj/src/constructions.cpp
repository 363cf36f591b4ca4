#include "nilclean/constructions.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace nilclean {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    r = saturating_mul(r, base);
    if (r == kSaturated) break;
  }
  return r;
}

void check_cap(std::uint64_t predicted, const Limits& limits) {
  if (predicted > limits.size_cap) {
    throw SizeCapExceeded(predicted, limits.size_cap);
  }
}

// Shared state for rings whose elements are fixed-length tuples over a base.
struct TupleRing {
  FiniteRing base;
  TupleCoding coding;

  Elem add(Elem x, Elem y) const {
    auto a = coding.decode(x);
    auto b = coding.decode(y);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = base.add(a[i], b[i]);
    return coding.encode(a);
  }
  Elem neg(Elem x) const {
    auto a = coding.decode(x);
    for (auto& d : a) d = base.neg(d);
    return coding.encode(a);
  }
  Elem constant(Elem value) const {
    std::vector<Elem> digits(coding.length, value);
    return coding.encode(digits);
  }
};

}  // namespace

std::vector<Elem> TupleCoding::decode(Elem index) const {
  std::vector<Elem> digits(length);
  std::uint64_t x = index;
  for (std::size_t i = 0; i < length; ++i) {
    digits[i] = static_cast<Elem>(x % base);
    x /= base;
  }
  return digits;
}

Elem TupleCoding::encode(std::span<const Elem> digits) const {
  std::uint64_t x = 0;
  for (std::size_t i = digits.size(); i-- > 0;) x = x * base + digits[i];
  return static_cast<Elem>(x);
}

std::string parenthesize_product(const std::string& label) {
  int depth = 0;
  for (std::size_t i = 0; i < label.size(); ++i) {
    char c = label[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && c == 'x' && i > 0 && label[i - 1] == ' ' &&
        i + 1 < label.size() && label[i + 1] == ' ') {
      return "(" + label + ")";
    }
  }
  return label;
}

// ---------------------------------------------------------------------------
// Endomorphisms

RingEndomorphism RingEndomorphism::make(FiniteRing domain,
                                        std::vector<Elem> map,
                                        std::string name) {
  const auto n = domain.size();
  if (map.size() != n) {
    throw InvalidEndomorphism("map has " + std::to_string(map.size()) +
                              " entries, domain has " + std::to_string(n));
  }
  for (auto v : map) {
    if (v >= n) throw InvalidEndomorphism("map value out of range");
  }
  if (map[domain.one()] != domain.one()) {
    throw InvalidEndomorphism("map does not fix one");
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (map[domain.add(a, b)] != domain.add(map[a], map[b])) {
        throw InvalidEndomorphism("not additive at (" + std::to_string(a) +
                                  ", " + std::to_string(b) + ")");
      }
      if (map[domain.mul(a, b)] != domain.mul(map[a], map[b])) {
        throw InvalidEndomorphism("not multiplicative at (" +
                                  std::to_string(a) + ", " +
                                  std::to_string(b) + ")");
      }
    }
  }
  return RingEndomorphism(std::move(domain), std::move(map), std::move(name));
}

RingEndomorphism RingEndomorphism::identity(const FiniteRing& domain) {
  std::vector<Elem> map(domain.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<Elem>(i);
  return RingEndomorphism(domain, std::move(map), "id");
}

RingEndomorphism RingEndomorphism::swap(const FiniteRing& domain,
                                        std::size_t factor_size) {
  if (factor_size * factor_size != domain.size()) {
    throw InvalidEndomorphism("swap needs a self-product domain");
  }
  ProductCoding coding{factor_size};
  std::vector<Elem> map(domain.size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    auto [l, r] = coding.unpair(static_cast<Elem>(i));
    map[i] = coding.pair(r, l);
  }
  return RingEndomorphism(domain, std::move(map), "swap");
}

bool RingEndomorphism::is_identity() const {
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (map_[i] != i) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Constructions

FiniteRing zn(std::uint64_t n, const Limits& limits) {
  if (n == 0) throw Error("Z_n needs n >= 1");
  check_cap(n, limits);
  auto m = static_cast<std::uint64_t>(n);
  return FiniteRing(
      "Z" + std::to_string(n), n,
      [m](Elem a, Elem b) { return static_cast<Elem>((std::uint64_t{a} + b) % m); },
      [m](Elem a, Elem b) { return static_cast<Elem>((std::uint64_t{a} * b) % m); },
      [m](Elem a) { return static_cast<Elem>((m - a) % m); }, 0,
      static_cast<Elem>(1 % m));
}

FiniteRing product(const FiniteRing& left, const FiniteRing& right,
                   const Limits& limits) {
  check_cap(saturating_mul(left.size(), right.size()), limits);
  ProductCoding c{left.size()};
  auto label = left.label() + " x " + parenthesize_product(right.label());
  return FiniteRing(
      std::move(label), left.size() * right.size(),
      [=](Elem x, Elem y) {
        auto [xl, xr] = c.unpair(x);
        auto [yl, yr] = c.unpair(y);
        return c.pair(left.add(xl, yl), right.add(xr, yr));
      },
      [=](Elem x, Elem y) {
        auto [xl, xr] = c.unpair(x);
        auto [yl, yr] = c.unpair(y);
        return c.pair(left.mul(xl, yl), right.mul(xr, yr));
      },
      [=](Elem x) {
        auto [xl, xr] = c.unpair(x);
        return c.pair(left.neg(xl), right.neg(xr));
      },
      c.pair(left.zero(), right.zero()), c.pair(left.one(), right.one()));
}

FiniteRing matrix_ring(const FiniteRing& base, std::size_t k,
                       const Limits& limits) {
  if (k == 0) throw Error("matrix size must be >= 1");
  check_cap(saturating_pow(base.size(), k * k), limits);
  auto size = saturating_pow(base.size(), k * k);
  TupleRing tr{base, TupleCoding{base.size(), k * k}};

  std::vector<Elem> id(k * k, base.zero());
  for (std::size_t i = 0; i < k; ++i) id[i * k + i] = base.one();

  return FiniteRing(
      "M" + std::to_string(k) + "(" + base.label() + ")", size,
      [tr](Elem x, Elem y) { return tr.add(x, y); },
      [tr, k](Elem x, Elem y) {
        auto a = tr.coding.decode(x);
        auto b = tr.coding.decode(y);
        std::vector<Elem> c(k * k, tr.base.zero());
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            Elem s = tr.base.zero();
            for (std::size_t l = 0; l < k; ++l) {
              s = tr.base.add(s, tr.base.mul(a[i * k + l], b[l * k + j]));
            }
            c[i * k + j] = s;
          }
        }
        return tr.coding.encode(c);
      },
      [tr](Elem x) { return tr.neg(x); }, tr.constant(base.zero()),
      tr.coding.encode(id));
}

FiniteRing upper_triangular(const FiniteRing& base, std::size_t k,
                            const Limits& limits) {
  if (k == 0) throw Error("matrix size must be >= 1");
  const std::size_t slots = k * (k + 1) / 2;
  check_cap(saturating_pow(base.size(), slots), limits);
  auto size = saturating_pow(base.size(), slots);
  TupleRing tr{base, TupleCoding{base.size(), slots}};

  // slot[i][j] for i <= j, row-major over the upper triangle
  std::vector<std::size_t> slot(k * k, 0);
  for (std::size_t i = 0, s = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) slot[i * k + j] = s++;
  }
  std::vector<Elem> id(slots, base.zero());
  for (std::size_t i = 0; i < k; ++i) id[slot[i * k + i]] = base.one();

  return FiniteRing(
      "T" + std::to_string(k) + "(" + base.label() + ")", size,
      [tr](Elem x, Elem y) { return tr.add(x, y); },
      [tr, k, slot](Elem x, Elem y) {
        auto a = tr.coding.decode(x);
        auto b = tr.coding.decode(y);
        std::vector<Elem> c(a.size(), tr.base.zero());
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = i; j < k; ++j) {
            Elem s = tr.base.zero();
            for (std::size_t l = i; l <= j; ++l) {
              s = tr.base.add(
                  s, tr.base.mul(a[slot[i * k + l]], b[slot[l * k + j]]));
            }
            c[slot[i * k + j]] = s;
          }
        }
        return tr.coding.encode(c);
      },
      [tr](Elem x) { return tr.neg(x); }, tr.constant(base.zero()),
      tr.coding.encode(id));
}

FiniteRing skew_triangular(const FiniteRing& base, std::size_t n,
                           const RingEndomorphism& alpha,
                           const Limits& limits) {
  if (n == 0) throw Error("skew triangular size must be >= 1");
  if (!(alpha.domain() == base) || alpha.domain().size() != base.size()) {
    throw EndomorphismDomainMismatch("endomorphism is defined on " +
                                     alpha.domain().label() + ", not " +
                                     base.label());
  }
  check_cap(saturating_pow(base.size(), n), limits);
  auto size = saturating_pow(base.size(), n);
  TupleRing tr{base, TupleCoding{base.size(), n}};

  // alpha^j as index maps, j = 0..n-1
  std::vector<std::vector<Elem>> twist(n);
  twist[0] = RingEndomorphism::identity(base).map();
  for (std::size_t j = 1; j < n; ++j) {
    twist[j].resize(base.size());
    for (std::size_t r = 0; r < base.size(); ++r) {
      twist[j][r] = alpha(twist[j - 1][r]);
    }
  }
  std::vector<Elem> id(n, base.zero());
  id[0] = base.one();

  return FiniteRing(
      "T" + std::to_string(n) + "(" + base.label() + "; " + alpha.name() + ")",
      size, [tr](Elem x, Elem y) { return tr.add(x, y); },
      [tr, n, twist](Elem x, Elem y) {
        auto a = tr.coding.decode(x);
        auto b = tr.coding.decode(y);
        std::vector<Elem> c(n, tr.base.zero());
        for (std::size_t i = 0; i < n; ++i) {
          Elem s = tr.base.zero();
          for (std::size_t j = 0; j <= i; ++j) {
            s = tr.base.add(s, tr.base.mul(a[j], twist[j][b[i - j]]));
          }
          c[i] = s;
        }
        return tr.coding.encode(c);
      },
      [tr](Elem x) { return tr.neg(x); }, tr.constant(base.zero()),
      tr.coding.encode(id));
}

FiniteRing trivial_extension(const FiniteRing& base, const Limits& limits) {
  check_cap(saturating_mul(base.size(), base.size()), limits);
  ProductCoding c{base.size()};
  return FiniteRing(
      "TrivExt(" + base.label() + ")", base.size() * base.size(),
      [=](Elem x, Elem y) {
        auto [r, m] = c.unpair(x);
        auto [s, n] = c.unpair(y);
        return c.pair(base.add(r, s), base.add(m, n));
      },
      [=](Elem x, Elem y) {
        auto [r, m] = c.unpair(x);
        auto [s, n] = c.unpair(y);
        return c.pair(base.mul(r, s), base.add(base.mul(r, n), base.mul(m, s)));
      },
      [=](Elem x) {
        auto [r, m] = c.unpair(x);
        return c.pair(base.neg(r), base.neg(m));
      },
      c.pair(base.zero(), base.zero()), c.pair(base.one(), base.zero()));
}

FiniteRing poly_quotient(const FiniteRing& base, std::size_t n,
                         const RingEndomorphism& alpha, const Limits& limits) {
  auto ring = skew_triangular(base, n, alpha, limits);
  std::string label = "Poly(" + base.label() + ", " + std::to_string(n);
  if (!alpha.is_identity() || alpha.name() != "id") {
    label += "; " + alpha.name();
  }
  label += ")";
  std::string note = label + " = " + ring.label() + " via a0 + a1 x + ... + a" +
                     std::to_string(n - 1) + " x^" + std::to_string(n - 1) +
                     " -> (a0, a1, ..., a" + std::to_string(n - 1) + ")";
  return ring.with_label(std::move(label)).with_note(std::move(note));
}

// ---------------------------------------------------------------------------
// Endomorphism enumeration

namespace {

constexpr Elem kUnset = std::numeric_limits<Elem>::max();

class EndomorphismSearch {
 public:
  explicit EndomorphismSearch(const FiniteRing& ring) : ring_(ring) {
    const auto n = ring.size();
    // Additive generators, one first. in_span marks the running subgroup.
    std::vector<char> in_span(n, 0);
    in_span[ring.zero()] = 1;
    auto absorb = [&](Elem g) {
      std::vector<Elem> members;
      for (Elem x = 0; x < n; ++x) {
        if (in_span[x]) members.push_back(x);
      }
      for (std::size_t i = 0; i < members.size(); ++i) {
        Elem y = ring.add(members[i], g);
        if (!in_span[y]) {
          in_span[y] = 1;
          members.push_back(y);
        }
      }
    };
    generators_.push_back(ring.one());
    absorb(ring.one());
    for (Elem x = 0; x < n; ++x) {
      if (!in_span[x]) {
        generators_.push_back(x);
        absorb(x);
      }
    }
  }

  std::vector<std::vector<Elem>> run() {
    std::vector<Elem> map(ring_.size(), kUnset);
    map[ring_.zero()] = ring_.zero();
    extend(0, map);
    return std::move(found_);
  }

 private:
  void extend(std::size_t depth, const std::vector<Elem>& map) {
    if (depth == generators_.size()) {
      found_.push_back(map);
      return;
    }
    const Elem g = generators_[depth];
    for (Elem image = 0; image < ring_.size(); ++image) {
      if (depth == 0 && image != ring_.one()) continue;
      auto next = map;
      if (close_over(g, image, next) && multiplicative(next)) {
        extend(depth + 1, next);
      }
    }
  }

  // Extends `map` from the current subgroup H to H + Zg with g -> image.
  bool close_over(Elem g, Elem image, std::vector<Elem>& map) const {
    std::vector<Elem> queue;
    for (Elem x = 0; x < ring_.size(); ++x) {
      if (map[x] != kUnset) queue.push_back(x);
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Elem x = queue[i];
      Elem y = ring_.add(x, g);
      Elem fy = ring_.add(map[x], image);
      if (map[y] == kUnset) {
        map[y] = fy;
        queue.push_back(y);
      } else if (map[y] != fy) {
        return false;
      }
    }
    return true;
  }

  bool multiplicative(const std::vector<Elem>& map) const {
    for (Elem a = 0; a < ring_.size(); ++a) {
      if (map[a] == kUnset) continue;
      for (Elem b = 0; b < ring_.size(); ++b) {
        if (map[b] == kUnset) continue;
        Elem ab = ring_.mul(a, b);
        if (map[ab] != kUnset && map[ab] != ring_.mul(map[a], map[b])) {
          return false;
        }
      }
    }
    return true;
  }

  const FiniteRing& ring_;
  std::vector<Elem> generators_;
  std::vector<std::vector<Elem>> found_;
};

}  // namespace

std::vector<RingEndomorphism> enumerate_unital_endomorphisms(
    const FiniteRing& ring, const Limits& limits) {
  if (ring.size() > limits.endomorphism_cap) {
    throw SizeCapExceeded(ring.size(), limits.endomorphism_cap);
  }
  auto maps = EndomorphismSearch(ring).run();
  std::sort(maps.begin(), maps.end());

  auto id = RingEndomorphism::identity(ring);
  std::vector<RingEndomorphism> result{id};
  std::size_t counter = 0;
  for (auto& m : maps) {
    if (m == id.map()) continue;
    result.push_back(RingEndomorphism::make(
        ring, std::move(m), "alpha" + std::to_string(++counter)));
  }
  return result;
}

}  // namespace nilclean
