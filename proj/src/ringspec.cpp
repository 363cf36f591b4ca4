#include "nilclean/ringspec.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <utility>

#include "nilclean/constructions.hpp"

namespace nilclean {

RingExpr RingExpr::zn(std::uint64_t n) { return {Kind::zn, n, NamedEndo::id, {}}; }

RingExpr RingExpr::product(RingExpr left, RingExpr right) {
  RingExpr e{Kind::product, 1, NamedEndo::id, {}};
  e.children.push_back(std::move(left));
  e.children.push_back(std::move(right));
  return e;
}

RingExpr RingExpr::mat(std::uint64_t k, RingExpr inner) {
  RingExpr e{Kind::mat, k, NamedEndo::id, {}};
  e.children.push_back(std::move(inner));
  return e;
}

RingExpr RingExpr::tri(std::uint64_t k, RingExpr inner) {
  RingExpr e{Kind::tri, k, NamedEndo::id, {}};
  e.children.push_back(std::move(inner));
  return e;
}

RingExpr RingExpr::skew_tri(std::uint64_t k, RingExpr inner, NamedEndo endo) {
  RingExpr e{Kind::skew_tri, k, endo, {}};
  e.children.push_back(std::move(inner));
  return e;
}

RingExpr RingExpr::triv_ext(RingExpr inner) {
  RingExpr e{Kind::triv_ext, 1, NamedEndo::id, {}};
  e.children.push_back(std::move(inner));
  return e;
}

RingExpr RingExpr::poly(RingExpr inner, std::uint64_t n) {
  RingExpr e{Kind::poly, n, NamedEndo::id, {}};
  e.children.push_back(std::move(inner));
  return e;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok {
  integer, z, m, t, triv_ext, poly, x, id, swap,
  lparen, rparen, semicolon, comma, end, invalid
};

struct Token {
  Tok kind = Tok::end;
  std::size_t offset = 0;
  std::string_view text;
  std::uint64_t value = 0;
};

std::string describe(Tok t) {
  switch (t) {
    case Tok::integer: return "integer";
    case Tok::z: return "'Z'";
    case Tok::m: return "'M'";
    case Tok::t: return "'T'";
    case Tok::triv_ext: return "'TrivExt'";
    case Tok::poly: return "'Poly'";
    case Tok::x: return "'x'";
    case Tok::id: return "'id'";
    case Tok::swap: return "'swap'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::semicolon: return "';'";
    case Tok::comma: return "','";
    case Tok::end: return "end of input";
    case Tok::invalid: return "invalid character";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    Token tok;
    tok.offset = pos_;
    if (pos_ >= text_.size()) {
      tok.kind = Tok::end;
      return tok;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = 0;
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
        if (v > std::numeric_limits<std::uint32_t>::max()) {
          throw IntegerOverflow(start);
        }
        ++pos_;
      }
      tok.kind = Tok::integer;
      tok.value = v;
      tok.text = text_.substr(start, pos_ - start);
      return tok;
    }
    static constexpr std::pair<std::string_view, Tok> kKeywords[] = {
        {"TrivExt", Tok::triv_ext}, {"Poly", Tok::poly}, {"swap", Tok::swap},
        {"id", Tok::id},            {"Z", Tok::z},       {"M", Tok::m},
        {"T", Tok::t},              {"x", Tok::x},
    };
    for (auto [word, kind] : kKeywords) {
      if (text_.substr(pos_, word.size()) == word) {
        tok.kind = kind;
        tok.text = text_.substr(pos_, word.size());
        pos_ += word.size();
        return tok;
      }
    }
    tok.text = text_.substr(pos_, 1);
    ++pos_;
    switch (c) {
      case '(': tok.kind = Tok::lparen; break;
      case ')': tok.kind = Tok::rparen; break;
      case ';': tok.kind = Tok::semicolon; break;
      case ',': tok.kind = Tok::comma; break;
      default: tok.kind = Tok::invalid; break;
    }
    return tok;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  RingExpr parse_all() {
    RingExpr e = expr({Tok::end});
    expect(Tok::end, {Tok::x, Tok::end});
    return e;
  }

 private:
  // `follow` lists the tokens that may legally end this expression; it is
  // only used to build error messages.
  RingExpr expr(std::vector<Tok> follow) {
    RingExpr left = term();
    while (cur_.kind == Tok::x) {
      advance();
      left = RingExpr::product(std::move(left), term());
    }
    if (cur_.kind != Tok::x &&
        std::find(follow.begin(), follow.end(), cur_.kind) == follow.end()) {
      follow.insert(follow.begin(), Tok::x);
      fail(follow);
    }
    return left;
  }

  RingExpr term() {
    switch (cur_.kind) {
      case Tok::z: {
        advance();
        return RingExpr::zn(positive_int());
      }
      case Tok::m: {
        advance();
        auto k = positive_int();
        expect(Tok::lparen);
        auto inner = expr({Tok::rparen});
        expect(Tok::rparen);
        return RingExpr::mat(k, std::move(inner));
      }
      case Tok::t: {
        advance();
        auto k = positive_int();
        expect(Tok::lparen);
        auto inner = expr({Tok::semicolon, Tok::rparen});
        if (cur_.kind == Tok::semicolon) {
          advance();
          NamedEndo endo;
          if (cur_.kind == Tok::id) {
            endo = NamedEndo::id;
          } else if (cur_.kind == Tok::swap) {
            endo = NamedEndo::swap;
          } else {
            fail({Tok::id, Tok::swap});
          }
          advance();
          expect(Tok::rparen);
          return RingExpr::skew_tri(k, std::move(inner), endo);
        }
        expect(Tok::rparen);
        return RingExpr::tri(k, std::move(inner));
      }
      case Tok::triv_ext: {
        advance();
        expect(Tok::lparen);
        auto inner = expr({Tok::rparen});
        expect(Tok::rparen);
        return RingExpr::triv_ext(std::move(inner));
      }
      case Tok::poly: {
        advance();
        expect(Tok::lparen);
        auto inner = expr({Tok::comma});
        expect(Tok::comma);
        auto n = positive_int();
        expect(Tok::rparen);
        return RingExpr::poly(std::move(inner), n);
      }
      case Tok::lparen: {
        advance();
        auto inner = expr({Tok::rparen});
        expect(Tok::rparen);
        return inner;
      }
      default:
        fail({Tok::z, Tok::m, Tok::t, Tok::triv_ext, Tok::poly, Tok::lparen});
    }
  }

  std::uint64_t positive_int() {
    if (cur_.kind != Tok::integer) fail({Tok::integer});
    if (cur_.value == 0) {
      throw SyntaxError(cur_.offset, {"positive integer"}, "'0'");
    }
    auto v = cur_.value;
    advance();
    return v;
  }

  void expect(Tok kind, std::vector<Tok> expected = {}) {
    if (cur_.kind != kind) {
      if (expected.empty()) expected.push_back(kind);
      fail(expected);
    }
    advance();
  }

  [[noreturn]] void fail(const std::vector<Tok>& expected) {
    std::vector<std::string> names;
    for (auto t : expected) names.push_back(describe(t));
    std::string found = cur_.kind == Tok::end
                            ? "end of input"
                            : "'" + std::string(cur_.text) + "'";
    throw SyntaxError(cur_.offset, std::move(names), found);
  }

  void advance() { cur_ = lexer_.next(); }

  Lexer lexer_;
  Token cur_;
};

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  if (base <= 1) return base;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp && r != kSaturated; ++i) r = sat_mul(r, base);
  return r;
}

}  // namespace

RingExpr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const RingExpr& e) {
  using K = RingExpr::Kind;
  auto n = std::to_string(e.n);
  switch (e.kind) {
    case K::zn: return "Z" + n;
    case K::product: {
      auto right = print(e.children[1]);
      if (e.children[1].kind == K::product) right = "(" + right + ")";
      return print(e.children[0]) + " x " + right;
    }
    case K::mat: return "M" + n + "(" + print(e.children[0]) + ")";
    case K::tri: return "T" + n + "(" + print(e.children[0]) + ")";
    case K::skew_tri:
      return "T" + n + "(" + print(e.children[0]) + "; " +
             (e.endo == NamedEndo::swap ? "swap" : "id") + ")";
    case K::triv_ext: return "TrivExt(" + print(e.children[0]) + ")";
    case K::poly: return "Poly(" + print(e.children[0]) + ", " + n + ")";
  }
  return {};
}

std::uint64_t predicted_size(const RingExpr& e) {
  using K = RingExpr::Kind;
  switch (e.kind) {
    case K::zn: return e.n;
    case K::product:
      return sat_mul(predicted_size(e.children[0]),
                     predicted_size(e.children[1]));
    case K::mat: {
      auto k2 = sat_mul(e.n, e.n);
      return sat_pow(predicted_size(e.children[0]), k2);
    }
    case K::tri: {
      auto slots = e.n % 2 == 0 ? sat_mul(e.n / 2, e.n + 1)
                                : sat_mul(e.n, (e.n + 1) / 2);
      return sat_pow(predicted_size(e.children[0]), slots);
    }
    case K::skew_tri:
    case K::poly: return sat_pow(predicted_size(e.children[0]), e.n);
    case K::triv_ext: {
      auto s = predicted_size(e.children[0]);
      return sat_mul(s, s);
    }
  }
  return 0;
}

FiniteRing eval(const RingExpr& e, const Limits& limits) {
  using K = RingExpr::Kind;
  auto predicted = predicted_size(e);
  if (predicted > limits.size_cap) {
    throw SizeCapExceeded(predicted, limits.size_cap);
  }
  switch (e.kind) {
    case K::zn: return zn(e.n, limits);
    case K::product:
      return product(eval(e.children[0], limits), eval(e.children[1], limits),
                     limits);
    case K::mat: return matrix_ring(eval(e.children[0], limits), e.n, limits);
    case K::tri:
      return upper_triangular(eval(e.children[0], limits), e.n, limits);
    case K::skew_tri: {
      const auto& inner = e.children[0];
      if (e.endo == NamedEndo::swap &&
          (inner.kind != K::product || !(inner.children[0] == inner.children[1]))) {
        throw InvalidEndomorphism("swap needs an inner ring of the form S x S, got " +
                                  print(inner));
      }
      auto base = eval(inner, limits);
      auto alpha = e.endo == NamedEndo::swap
                       ? RingEndomorphism::swap(
                             base, predicted_size(inner.children[0]))
                       : RingEndomorphism::identity(base);
      return skew_triangular(base, e.n, alpha, limits);
    }
    case K::triv_ext: return trivial_extension(eval(e.children[0], limits), limits);
    case K::poly: {
      auto base = eval(e.children[0], limits);
      return poly_quotient(base, e.n, RingEndomorphism::identity(base), limits);
    }
  }
  throw Error("unknown expression kind");
}

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? text.npos
                                                              : nl - pos);
    ++line_no;
    auto hash = line.find('#');
    auto body = line.substr(0, hash);
    bool blank = true;
    for (char c : body) {
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    }
    if (!blank) {
      try {
        out.push_back({line_no, std::string(body), parse(body)});
      } catch (const SyntaxError& err) {
        throw CatalogError(line_no, err.offset(), err.what());
      } catch (const IntegerOverflow& err) {
        throw CatalogError(line_no, err.offset(), err.what());
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  // trim surrounding whitespace from the stored text
  for (auto& entry : out) {
    auto& s = entry.text;
    auto first = s.find_first_not_of(" \t\r");
    auto last = s.find_last_not_of(" \t\r");
    s = s.substr(first, last - first + 1);
  }
  return out;
}

}  // namespace nilclean
