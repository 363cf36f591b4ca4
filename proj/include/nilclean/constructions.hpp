#pragma once

// Ring constructions. Index encodings are fixed so that certificates are
// reproducible:
//
//   Z_n               residue r has index r.
//   R x S             pair (r, s) has index r + |R| * s.
//   M_k(R), T_k(R)    entries are read row-major (upper triangle only for
//                     T_k) and packed as little-endian base-|R| digits: the
//                     first entry is the least significant digit.
//   T_n(R, alpha)     tuple (a_0, ..., a_{n-1}) packed little-endian.
//   T(R, R)           pair (r, m) has index r + |R| * m.
//
// Every label is valid ring DSL text (see ringspec.hpp) whenever the
// endomorphism involved is one of the named ones.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nilclean/ring.hpp"

namespace nilclean {

// Little-endian base-`base` tuples of fixed length.
struct TupleCoding {
  std::size_t base = 1;
  std::size_t length = 0;

  std::vector<Elem> decode(Elem index) const;
  Elem encode(std::span<const Elem> digits) const;
};

struct ProductCoding {
  std::size_t left_size = 1;

  Elem pair(Elem left, Elem right) const {
    return static_cast<Elem>(left + left_size * right);
  }
  std::pair<Elem, Elem> unpair(Elem x) const {
    return {static_cast<Elem>(x % left_size),
            static_cast<Elem>(x / left_size)};
  }
};

// A unital ring endomorphism stored as an index map.
class RingEndomorphism {
 public:
  // Validates additivity, multiplicativity and map(one) = one exhaustively;
  // throws InvalidEndomorphism with the first failing pair.
  static RingEndomorphism make(FiniteRing domain, std::vector<Elem> map,
                               std::string name);
  static RingEndomorphism identity(const FiniteRing& domain);
  // The factor swap (a, b) -> (b, a) on S x S, where `factor_size` = |S|
  // and `domain` uses the ProductCoding layout.
  static RingEndomorphism swap(const FiniteRing& domain,
                               std::size_t factor_size);

  const FiniteRing& domain() const noexcept { return domain_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<Elem>& map() const noexcept { return map_; }
  Elem operator()(Elem a) const { return map_[a]; }
  bool is_identity() const;

  friend bool operator==(const RingEndomorphism& a,
                         const RingEndomorphism& b) {
    return a.map_ == b.map_ && a.domain_ == b.domain_;
  }

 private:
  RingEndomorphism(FiniteRing domain, std::vector<Elem> map, std::string name)
      : domain_(std::move(domain)), map_(std::move(map)), name_(std::move(name)) {}

  FiniteRing domain_;
  std::vector<Elem> map_;
  std::string name_;
};

FiniteRing zn(std::uint64_t n, const Limits& limits = {});

FiniteRing product(const FiniteRing& left, const FiniteRing& right,
                   const Limits& limits = {});

FiniteRing matrix_ring(const FiniteRing& base, std::size_t k,
                       const Limits& limits = {});

FiniteRing upper_triangular(const FiniteRing& base, std::size_t k,
                            const Limits& limits = {});

// Constant-diagonal upper-triangular matrices with the alpha-twisted
// convolution c_i = sum_{j<=i} a_j * alpha^j(b_{i-j}), for 0 <= i < n.
FiniteRing skew_triangular(const FiniteRing& base, std::size_t n,
                           const RingEndomorphism& alpha,
                           const Limits& limits = {});

// T(R, R) with (r, m)(s, n) = (rs, rn + ms).
FiniteRing trivial_extension(const FiniteRing& base, const Limits& limits = {});

// R[x; alpha] / <x^n>, realized as skew_triangular(base, n, alpha) via
// a_0 + a_1 x + ... + a_{n-1} x^{n-1} -> (a_0, ..., a_{n-1}).
FiniteRing poly_quotient(const FiniteRing& base, std::size_t n,
                         const RingEndomorphism& alpha,
                         const Limits& limits = {});

// All unital ring endomorphisms, identity first, the rest in lexicographic
// order of their index maps.
std::vector<RingEndomorphism> enumerate_unital_endomorphisms(
    const FiniteRing& ring, const Limits& limits = {});

// Wraps a label in parentheses when it is a top-level product, so it can
// appear as the right operand of " x ".
std::string parenthesize_product(const std::string& label);

}  // namespace nilclean
