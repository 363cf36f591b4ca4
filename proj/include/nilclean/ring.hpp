#pragma once

// Finite rings over dense element indices 0..size-1.
//
// A FiniteRing is an immutable value. Small rings (size <= kMaterializeLimit)
// carry fully materialized addition/multiplication tables; larger rings keep
// the construction closures and evaluate on demand. Copies share state.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "nilclean/error.hpp"

namespace nilclean {

inline constexpr std::size_t kMaterializeLimit = 1024;
inline constexpr std::size_t kFullValidationLimit = 256;
inline constexpr std::size_t kDefaultSampleCount = 100000;
inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

// Desk-scale resource limits shared by constructions and searches.
struct Limits {
  std::uint64_t size_cap = 65536;
  std::uint64_t search_budget = 10'000'000;
  std::size_t endomorphism_cap = 64;
};

class FiniteRing {
 public:
  using BinaryOp = std::function<Elem(Elem, Elem)>;
  using UnaryOp = std::function<Elem(Elem)>;

  // The closures must be pure and thread-safe. They are evaluated eagerly
  // into tables when size <= kMaterializeLimit.
  FiniteRing(std::string label, std::size_t size, BinaryOp add, BinaryOp mul,
             UnaryOp neg, Elem zero, Elem one);

  // Builds a ring from explicit row-major tables (size*size entries each).
  // Negation is recovered from the addition table; throws AxiomViolation if
  // some element has no additive inverse or an entry is out of range.
  static FiniteRing from_tables(std::string label, std::size_t size,
                                std::vector<Elem> add_table,
                                std::vector<Elem> mul_table, Elem zero,
                                Elem one);

  std::size_t size() const noexcept { return impl_->size; }
  const std::string& label() const noexcept { return impl_->label; }
  // Free-form provenance, e.g. a recorded isomorphism. Not part of identity.
  const std::string& note() const noexcept { return impl_->note; }
  Elem zero() const noexcept { return impl_->zero; }
  Elem one() const noexcept { return impl_->one; }
  bool materialized() const noexcept { return !impl_->add_table.empty(); }

  Elem add(Elem a, Elem b) const {
    return materialized() ? impl_->add_table[index(a, b)] : impl_->add_fn(a, b);
  }
  Elem mul(Elem a, Elem b) const {
    return materialized() ? impl_->mul_table[index(a, b)] : impl_->mul_fn(a, b);
  }
  Elem neg(Elem a) const {
    return materialized() ? impl_->neg_table[a] : impl_->neg_fn(a);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  FiniteRing with_label(std::string label) const;
  FiniteRing with_note(std::string note) const;

  // Equality is by label only; isomorphism is never inferred.
  friend bool operator==(const FiniteRing& a, const FiniteRing& b) {
    return a.label() == b.label();
  }

 private:
  struct Impl {
    std::string label;
    std::string note;
    std::size_t size = 0;
    Elem zero = 0;
    Elem one = 0;
    std::vector<Elem> add_table;
    std::vector<Elem> mul_table;
    std::vector<Elem> neg_table;
    BinaryOp add_fn;
    BinaryOp mul_fn;
    UnaryOp neg_fn;
  };

  explicit FiniteRing(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}

  std::size_t index(Elem a, Elem b) const noexcept {
    return static_cast<std::size_t>(a) * impl_->size + b;
  }

  std::shared_ptr<const Impl> impl_;
};

enum class ValidationMode { automatic, full, sampled };

struct ValidationReport {
  bool ok = true;
  ValidationMode mode = ValidationMode::full;
  std::uint64_t triples_checked = 0;
  std::string axiom;                    // empty when ok
  std::array<Elem, 3> witness{0, 0, 0};  // unused slots are zero
};

// Checks the ring axioms. Full mode is exhaustive over triples; sampled mode
// draws `samples` triples from a fixed-seed generator. Automatic picks full
// for size <= kFullValidationLimit. Reports the first violation found.
ValidationReport validate_ring(const FiniteRing& ring,
                               ValidationMode mode = ValidationMode::automatic,
                               std::uint64_t seed = kDefaultSeed,
                               std::size_t samples = kDefaultSampleCount);

// Throws AxiomViolation when validate_ring reports a failure.
void ensure_valid(const FiniteRing& ring,
                  ValidationMode mode = ValidationMode::automatic,
                  std::uint64_t seed = kDefaultSeed);

Elem pow(const FiniteRing& ring, Elem a, std::uint64_t k);

bool commute(const FiniteRing& ring, Elem a, Elem b);

// Additive order of one.
std::uint64_t characteristic(const FiniteRing& ring);

// m * 1; negative m maps through negation.
Elem int_image(const FiniteRing& ring, std::int64_t m);

}  // namespace nilclean
