#pragma once

// The ring-construction DSL.
//
//   expr := term { "x" term }
//   term := "Z" int
//         | "M" int "(" expr ")"
//         | "T" int "(" expr [ ";" endo ] ")"
//         | "TrivExt" "(" expr ")"
//         | "Poly" "(" expr "," int ")"
//         | "(" expr ")"
//   endo := "id" | "swap"
//
// "x" is left-associative and whitespace is insignificant. "T2(R)" is the
// full upper-triangular ring; "T2(R; id)" is the constant-diagonal skew
// triangular ring with the identity twist.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nilclean/ring.hpp"

namespace nilclean {

enum class NamedEndo { id, swap };

struct RingExpr {
  enum class Kind { zn, product, mat, tri, skew_tri, triv_ext, poly };

  Kind kind = Kind::zn;
  std::uint64_t n = 1;  // modulus, matrix size, or truncation degree
  NamedEndo endo = NamedEndo::id;
  std::vector<RingExpr> children;

  static RingExpr zn(std::uint64_t n);
  static RingExpr product(RingExpr left, RingExpr right);
  static RingExpr mat(std::uint64_t k, RingExpr inner);
  static RingExpr tri(std::uint64_t k, RingExpr inner);
  static RingExpr skew_tri(std::uint64_t k, RingExpr inner, NamedEndo endo);
  static RingExpr triv_ext(RingExpr inner);
  static RingExpr poly(RingExpr inner, std::uint64_t n);

  friend bool operator==(const RingExpr&, const RingExpr&) = default;
};

// Throws SyntaxError or IntegerOverflow (literals above 2^32 - 1).
RingExpr parse(std::string_view text);

// Canonical text; parse(print(e)) == e.
std::string print(const RingExpr& expr);

// Element count of the ring the expression denotes, saturating at
// UINT64_MAX.
std::uint64_t predicted_size(const RingExpr& expr);

// Throws SizeCapExceeded (checked symbolically before building) or
// InvalidEndomorphism.
FiniteRing eval(const RingExpr& expr, const Limits& limits = {});

struct CatalogEntry {
  std::size_t line = 0;  // 1-based
  std::string text;
  RingExpr expr;
};

class CatalogError : public Error {
 public:
  CatalogError(std::size_t line, std::size_t offset, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what),
        line_(line),
        offset_(offset) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t line_;
  std::size_t offset_;
};

// One expression per line; '#' starts a comment, blank lines are skipped.
std::vector<CatalogEntry> parse_catalog(std::string_view text);

}  // namespace nilclean
