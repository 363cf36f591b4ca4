#include "nilclean/ring.hpp"

#include <random>
#include <utility>

namespace nilclean {

FiniteRing::FiniteRing(std::string label, std::size_t size, BinaryOp add,
                       BinaryOp mul, UnaryOp neg, Elem zero, Elem one) {
  auto impl = std::make_shared<Impl>();
  impl->label = std::move(label);
  impl->size = size;
  impl->zero = zero;
  impl->one = one;
  if (size <= kMaterializeLimit) {
    impl->add_table.resize(size * size);
    impl->mul_table.resize(size * size);
    impl->neg_table.resize(size);
    for (std::size_t a = 0; a < size; ++a) {
      impl->neg_table[a] = neg(static_cast<Elem>(a));
      for (std::size_t b = 0; b < size; ++b) {
        impl->add_table[a * size + b] =
            add(static_cast<Elem>(a), static_cast<Elem>(b));
        impl->mul_table[a * size + b] =
            mul(static_cast<Elem>(a), static_cast<Elem>(b));
      }
    }
  } else {
    impl->add_fn = std::move(add);
    impl->mul_fn = std::move(mul);
    impl->neg_fn = std::move(neg);
  }
  impl_ = std::move(impl);
}

FiniteRing FiniteRing::from_tables(std::string label, std::size_t size,
                                   std::vector<Elem> add_table,
                                   std::vector<Elem> mul_table, Elem zero,
                                   Elem one) {
  if (add_table.size() != size * size || mul_table.size() != size * size) {
    throw Error("table dimensions do not match ring size " +
                std::to_string(size));
  }
  for (std::size_t i = 0; i < size * size; ++i) {
    if (add_table[i] >= size || mul_table[i] >= size) {
      auto a = static_cast<Elem>(i / size);
      auto b = static_cast<Elem>(i % size);
      throw AxiomViolation("closure", {a, b, 0});
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->label = std::move(label);
  impl->size = size;
  impl->zero = zero;
  impl->one = one;
  impl->neg_table.assign(size, zero);
  for (std::size_t a = 0; a < size; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < size && !found; ++b) {
      if (add_table[a * size + b] == zero) {
        impl->neg_table[a] = static_cast<Elem>(b);
        found = true;
      }
    }
    if (!found) {
      throw AxiomViolation("additive inverse", {static_cast<Elem>(a), 0, 0});
    }
  }
  impl->add_table = std::move(add_table);
  impl->mul_table = std::move(mul_table);
  return FiniteRing(std::shared_ptr<const Impl>(std::move(impl)));
}

FiniteRing FiniteRing::with_label(std::string label) const {
  auto copy = std::make_shared<Impl>(*impl_);
  copy->label = std::move(label);
  return FiniteRing(std::shared_ptr<const Impl>(std::move(copy)));
}

FiniteRing FiniteRing::with_note(std::string note) const {
  auto copy = std::make_shared<Impl>(*impl_);
  copy->note = std::move(note);
  return FiniteRing(std::shared_ptr<const Impl>(std::move(copy)));
}

namespace {

// Checks every axiom that involves a single triple. Returns the failing
// axiom name or nullptr.
const char* check_triple(const FiniteRing& r, Elem a, Elem b, Elem c) {
  if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) {
    return "additive associativity";
  }
  if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) {
    return "multiplicative associativity";
  }
  if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) {
    return "left distributivity";
  }
  if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) {
    return "right distributivity";
  }
  return nullptr;
}

const char* check_pair(const FiniteRing& r, Elem a, Elem b) {
  const auto n = r.size();
  auto s = r.add(a, b);
  auto p = r.mul(a, b);
  if (s >= n || p >= n) return "closure";
  if (s != r.add(b, a)) return "additive commutativity";
  return nullptr;
}

const char* check_single(const FiniteRing& r, Elem a) {
  if (r.neg(a) >= r.size()) return "closure";
  if (r.add(a, r.zero()) != a || r.add(r.zero(), a) != a) {
    return "additive identity";
  }
  if (r.add(a, r.neg(a)) != r.zero()) return "additive inverse";
  if (r.mul(a, r.one()) != a || r.mul(r.one(), a) != a) {
    return "multiplicative identity";
  }
  return nullptr;
}

ValidationReport fail(ValidationReport report, const char* axiom,
                      std::array<Elem, 3> witness) {
  report.ok = false;
  report.axiom = axiom;
  report.witness = witness;
  return report;
}

}  // namespace

ValidationReport validate_ring(const FiniteRing& ring, ValidationMode mode,
                               std::uint64_t seed, std::size_t samples) {
  const std::size_t n = ring.size();
  ValidationReport report;
  if (mode == ValidationMode::automatic) {
    mode = n <= kFullValidationLimit ? ValidationMode::full
                                     : ValidationMode::sampled;
  }
  report.mode = mode;

  if (n == 0 || ring.zero() >= n || ring.one() >= n) {
    return fail(report, "identity elements in range", {0, 0, 0});
  }
  if (n > 1 && ring.zero() == ring.one()) {
    return fail(report, "zero differs from one", {ring.zero(), 0, 0});
  }

  if (mode == ValidationMode::full) {
    for (Elem a = 0; a < n; ++a) {
      if (auto* ax = check_single(ring, a)) return fail(report, ax, {a, 0, 0});
      for (Elem b = 0; b < n; ++b) {
        if (auto* ax = check_pair(ring, a, b)) {
          return fail(report, ax, {a, b, 0});
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          if (auto* ax = check_triple(ring, a, b, c)) {
            return fail(report, ax, {a, b, c});
          }
          ++report.triples_checked;
        }
      }
    }
    return report;
  }

  // Raw engine output reduced modulo n keeps the sample stream identical
  // across standard library implementations.
  std::mt19937_64 gen(seed);
  auto draw = [&] { return static_cast<Elem>(gen() % n); };
  for (std::size_t i = 0; i < samples; ++i) {
    Elem a = draw();
    Elem b = draw();
    Elem c = draw();
    if (auto* ax = check_single(ring, a)) return fail(report, ax, {a, 0, 0});
    if (auto* ax = check_pair(ring, a, b)) return fail(report, ax, {a, b, 0});
    if (auto* ax = check_triple(ring, a, b, c)) {
      return fail(report, ax, {a, b, c});
    }
    ++report.triples_checked;
  }
  return report;
}

void ensure_valid(const FiniteRing& ring, ValidationMode mode,
                  std::uint64_t seed) {
  auto report = validate_ring(ring, mode, seed);
  if (!report.ok) throw AxiomViolation(report.axiom, report.witness);
}

Elem pow(const FiniteRing& ring, Elem a, std::uint64_t k) {
  Elem result = ring.one();
  Elem base = a;
  while (k > 0) {
    if (k & 1U) result = ring.mul(result, base);
    k >>= 1U;
    if (k > 0) base = ring.mul(base, base);
  }
  return result;
}

bool commute(const FiniteRing& ring, Elem a, Elem b) {
  return ring.mul(a, b) == ring.mul(b, a);
}

std::uint64_t characteristic(const FiniteRing& ring) {
  std::uint64_t m = 1;
  for (Elem x = ring.one(); x != ring.zero(); x = ring.add(x, ring.one())) {
    ++m;
  }
  return m;
}

Elem int_image(const FiniteRing& ring, std::int64_t m) {
  const auto ch = static_cast<std::int64_t>(characteristic(ring));
  std::int64_t r = m % ch;
  if (r < 0) r += ch;
  // double-and-add on the reduced multiplier
  Elem result = ring.zero();
  Elem step = ring.one();
  auto k = static_cast<std::uint64_t>(r);
  while (k > 0) {
    if (k & 1U) result = ring.add(result, step);
    k >>= 1U;
    if (k > 0) step = ring.add(step, step);
  }
  return result;
}

}  // namespace nilclean
