#pragma once

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "config.hpp"
#include "errors.hpp"
#include "ring.hpp"

namespace purespec {

// Syntax tree of a ring expression. Polynomial coefficients are kept as
// written (ascending, unreduced) so printing and re-parsing is exact.
struct RingExpr {
  enum class Kind { zmod, poly_quotient, product, symz };

  Kind kind = Kind::zmod;
  std::uint64_t modulus = 0;
  std::vector<std::int64_t> coefficients;
  std::vector<RingExpr> factors;

  static RingExpr zmod(std::uint64_t n) { return {Kind::zmod, n, {}, {}}; }
  static RingExpr poly_quotient(std::uint64_t n, std::vector<std::int64_t> f) {
    return {Kind::poly_quotient, n, std::move(f), {}};
  }
  static RingExpr product(std::vector<RingExpr> fs) { return {Kind::product, 0, {}, std::move(fs)}; }
  static RingExpr symz() { return {Kind::symz, 0, {}, {}}; }

  friend bool operator==(const RingExpr&, const RingExpr&) = default;
};

inline std::string to_string(const RingExpr& e) {
  switch (e.kind) {
    case RingExpr::Kind::zmod: return "Z/" + std::to_string(e.modulus);
    case RingExpr::Kind::poly_quotient:
      return "Z/" + std::to_string(e.modulus) + "[x]/(" + format_poly(e.coefficients) + ")";
    case RingExpr::Kind::symz: return "Z";
    case RingExpr::Kind::product: {
      std::string out;
      for (std::size_t k = 0; k < e.factors.size(); ++k) out += (k ? " x " : "") + to_string(e.factors[k]);
      return out;
    }
  }
  return "?";
}

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  RingExpr parse() {
    std::vector<RingExpr> fs;
    std::vector<std::size_t> at;
    skip();
    at.push_back(pos_);
    fs.push_back(factor());
    for (skip(); pos_ < s_.size(); skip()) {
      if (s_[pos_] != 'x' && s_[pos_] != '*') throw ParseError(pos_, "'x', '*' or end of input");
      ++pos_;
      skip();
      at.push_back(pos_);
      fs.push_back(factor());
    }
    if (fs.size() == 1) return std::move(fs[0]);
    for (std::size_t k = 0; k < fs.size(); ++k)
      if (fs[k].kind == RingExpr::Kind::symz)
        throw SemanticError("Z at byte " + std::to_string(at[k]) + " cannot be a product factor");
    return RingExpr::product(std::move(fs));
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) throw ParseError(pos_, std::string("'") + c + "'");
    ++pos_;
  }
  bool digit() { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  std::uint64_t nat(const char* what) {
    skip();
    if (!digit()) throw ParseError(pos_, what);
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    constexpr auto kMax = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
    for (; digit(); ++pos_) {
      auto d = static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > (kMax - d) / 10) throw ParseError(start, std::string(what) + " below 2^63");
      v = v * 10 + d;
    }
    return v;
  }

  RingExpr factor() {
    expect('Z');
    if (!peek('/')) return RingExpr::symz();
    ++pos_;
    skip();
    const std::size_t at = pos_;
    auto n = nat("modulus");
    if (n < 2) throw ParseError(at, "modulus at least 2");
    if (!peek('[')) return RingExpr::zmod(n);
    ++pos_;
    expect('x');
    expect(']');
    expect('/');
    expect('(');
    skip();
    const std::size_t poly_at = pos_;
    auto f = poly();
    expect(')');
    while (!f.empty() && f.back() == 0) f.pop_back();
    if (f.size() < 2) throw SemanticError("polynomial at byte " + std::to_string(poly_at) + " has degree < 1");
    auto lead = f.back() % static_cast<std::int64_t>(n);
    if (lead < 0) lead += static_cast<std::int64_t>(n);
    if (lead != 1) throw SemanticError("polynomial at byte " + std::to_string(poly_at) + " is not monic mod " + std::to_string(n));
    return RingExpr::poly_quotient(n, std::move(f));
  }

  // poly := term (("+"|"-") term)*, term := nat | [nat ["*"]] "x" ["^" nat]
  std::vector<std::int64_t> poly() {
    std::vector<std::int64_t> f;
    bool first = true;
    for (;;) {
      skip();
      std::int64_t sign = 1;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        break;
      }
      first = false;
      std::int64_t coef = 1;
      bool has_coef = digit();
      if (has_coef) coef = static_cast<std::int64_t>(nat("coefficient"));
      if (has_coef && peek('*')) ++pos_;
      std::uint64_t power = 0;
      if (peek('x')) {
        ++pos_;
        power = 1;
        if (peek('^')) {
          ++pos_;
          const std::size_t at = pos_;
          power = nat("exponent");
          if (power > 64) throw ParseError(at, "exponent at most 64");
        }
      } else if (!has_coef) {
        skip();
        throw ParseError(pos_, "coefficient or 'x'");
      }
      if (f.size() <= power) f.resize(power + 1, 0);
      f[power] += sign * coef;
    }
    return f;
  }
};

}  // namespace detail

inline RingExpr parse_ring_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

// Builds the finite ring an expression denotes. Z has no finite tables.
inline RingPtr build_ring(const RingExpr& e, const Limits& limits = {}) {
  switch (e.kind) {
    case RingExpr::Kind::zmod: return build_zmod(e.modulus, limits);
    case RingExpr::Kind::poly_quotient: {
      const auto n = static_cast<std::int64_t>(e.modulus);
      auto f = e.coefficients;
      for (auto& c : f) c = ((c % n) + n) % n;
      return build_poly_quotient(e.modulus, std::move(f), limits);
    }
    case RingExpr::Kind::product: {
      std::size_t order = 1;
      std::vector<RingPtr> fs;
      for (const auto& f : e.factors) {
        fs.push_back(build_ring(f, limits));
        order *= fs.back()->order();
        if (order > limits.order_cap)
          throw OrderCapExceeded(to_string(e) + " exceeds order cap " + std::to_string(limits.order_cap));
      }
      return build_product(fs, limits);
    }
    case RingExpr::Kind::symz: throw UnsupportedBackend("Z has no finite tables; use the symbolic backend");
  }
  throw InternalInvariant("unknown ring expression kind");
}

}  // namespace purespec
