#pragma once

// Exception types raised by the library. Every error the library throws
// derives from nilclean::Error so callers can catch the family at once.

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilclean {

using Elem = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction would produce (or the DSL predicts) more elements than the
// configured cap.
class SizeCapExceeded : public Error {
 public:
  SizeCapExceeded(std::uint64_t predicted, std::uint64_t cap)
      : Error("ring size " + std::to_string(predicted) + " exceeds cap " +
              std::to_string(cap)),
        predicted_(predicted),
        cap_(cap) {}

  std::uint64_t predicted() const noexcept { return predicted_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t predicted_;
  std::uint64_t cap_;
};

class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::array<Elem, 3> witness)
      : Error("ring axiom violated: " + axiom + " at (" +
              std::to_string(witness[0]) + ", " + std::to_string(witness[1]) +
              ", " + std::to_string(witness[2]) + ")"),
        axiom_(std::move(axiom)),
        witness_(witness) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::array<Elem, 3>& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::array<Elem, 3> witness_;
};

// The nominal (sign, e, f, n) search space is larger than the budget. This
// is "unresolved", never "no certificate".
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget)
      : Error("search space " + std::to_string(required) +
              " exceeds budget " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

class EndomorphismDomainMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidEndomorphism : public Error {
 public:
  using Error::Error;
};

class NotAnIdeal : public Error {
 public:
  using Error::Error;
};

class NotIdempotent : public Error {
 public:
  using Error::Error;
};

class NotCentralIdempotent : public Error {
 public:
  using Error::Error;
};

// Raised when a central splitting fails its own isomorphism check. On valid
// input this indicates a bug in the core.
class IsoCheckFailed : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected,
              std::string found)
      : Error(format(offset, expected, found)),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept {
    return expected_;
  }

 private:
  static std::string format(std::size_t offset,
                            const std::vector<std::string>& expected,
                            const std::string& found) {
    std::string msg = "syntax error at offset " + std::to_string(offset) +
                      ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += ", found " + found;
    return msg;
  }

  std::size_t offset_;
  std::vector<std::string> expected_;
};

class IntegerOverflow : public Error {
 public:
  explicit IntegerOverflow(std::size_t offset)
      : Error("integer literal too large at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace nilclean
