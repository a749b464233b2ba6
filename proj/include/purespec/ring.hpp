#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "element_set.hpp"
#include "errors.hpp"

namespace purespec {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

// Formats an integer polynomial given by ascending coefficients, highest
// power first: {1,1,1} -> "x^2+x+1", {-1,1} -> "x-1", {} -> "0".
inline std::string format_poly(std::span<const std::int64_t> coeffs) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    std::int64_t c = coeffs[k];
    if (c == 0) continue;
    std::uint64_t mag = c < 0 ? static_cast<std::uint64_t>(-c) : static_cast<std::uint64_t>(c);
    if (c < 0) out += '-';
    else if (!out.empty()) out += '+';
    if (k == 0 || mag != 1) out += std::to_string(mag);
    if (k >= 1) out += 'x';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

// How a ring was built. The fingerprint is a canonical rendering of this
// record and is what caches key on (never the display label).
struct Construction {
  enum class Kind { zmod, product, poly_quotient, quotient, tables };

  Kind kind = Kind::tables;
  std::uint64_t modulus = 0;                // zmod, poly_quotient
  std::vector<std::int64_t> coefficients;   // poly_quotient, ascending, reduced
  std::vector<RingPtr> parts;               // product factors, or quotient parent
  std::vector<Element> ideal;               // quotient: members of the ideal
  std::string tables_tag;                   // tables: caller-supplied name

  std::string fingerprint() const;
};

class FiniteRing {
 public:
  // Builds a ring from explicit tables and audits every axiom over all
  // triples. Throws OrderCapExceeded or InvalidRingTables.
  static RingPtr from_tables(std::size_t order, std::vector<Element> add,
                             std::vector<Element> mul, Element zero, Element one,
                             std::string label, Construction construction,
                             std::vector<std::string> names = {},
                             const Limits& limits = {}) {
    if (order == 0) throw InvalidRingTables("ring order must be positive");
    if (order > limits.order_cap) {
      throw OrderCapExceeded("ring order " + std::to_string(order) +
                             " exceeds cap " + std::to_string(limits.order_cap));
    }
    if (add.size() != order * order || mul.size() != order * order) {
      throw InvalidRingTables("table size does not match order");
    }
    if (!names.empty() && names.size() != order) {
      throw InvalidRingTables("element name count does not match order");
    }
    if (names.empty()) {
      names.reserve(order);
      for (std::size_t i = 0; i < order; ++i) names.push_back(std::to_string(i));
    }
    auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
    ring->order_ = order;
    ring->add_ = std::move(add);
    ring->mul_ = std::move(mul);
    ring->zero_ = zero;
    ring->one_ = one;
    ring->label_ = std::move(label);
    ring->construction_ = std::move(construction);
    ring->names_ = std::move(names);
    ring->compute_negations();
    ring->audit();
    return ring;
  }

  std::size_t order() const noexcept { return order_; }
  Element zero() const noexcept { return zero_; }
  Element one() const noexcept { return one_; }
  const std::string& label() const noexcept { return label_; }
  const Construction& construction() const noexcept { return construction_; }
  std::string fingerprint() const { return construction_.fingerprint(); }

  Element add(Element a, Element b) const { return add_[a * order_ + b]; }
  Element mul(Element a, Element b) const { return mul_[a * order_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  const std::string& name(Element e) const { return names_[e]; }
  const std::vector<Element>& add_table() const noexcept { return add_; }
  const std::vector<Element>& mul_table() const noexcept { return mul_; }

  // Exhaustive axiom audit; throws InvalidRingTables naming the first
  // violated law and its witness.
  void audit() const {
    auto n = static_cast<Element>(order_);
    auto fail = [&](const std::string& what) {
      throw InvalidRingTables(label_ + ": " + what);
    };
    if (zero_ >= n || one_ >= n) fail("identity index out of range");
    if (n > 1 && zero_ == one_) fail("one equals zero in a non-trivial ring");
    for (Element v : add_) if (v >= n) fail("addition table entry out of range");
    for (Element v : mul_) if (v >= n) fail("multiplication table entry out of range");
    for (Element a = 0; a < n; ++a) {
      if (add(zero_, a) != a) fail("zero is not an additive identity for " + name(a));
      if (mul(one_, a) != a) fail("one is not a multiplicative identity for " + name(a));
      for (Element b = 0; b < n; ++b) {
        if (add(a, b) != add(b, a)) fail("addition not commutative at " + pair(a, b));
        if (mul(a, b) != mul(b, a)) fail("multiplication not commutative at " + pair(a, b));
      }
      if (neg_[a] >= n || add(a, neg_[a]) != zero_) fail("no additive inverse for " + name(a));
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        Element ab_sum = add(a, b);
        Element ab_prod = mul(a, b);
        for (Element c = 0; c < n; ++c) {
          if (add(ab_sum, c) != add(a, add(b, c))) fail("addition not associative");
          if (mul(ab_prod, c) != mul(a, mul(b, c))) fail("multiplication not associative");
          if (mul(a, add(b, c)) != add(ab_prod, mul(a, c))) fail("distributivity fails");
        }
      }
    }
  }

 private:
  FiniteRing() = default;

  void compute_negations() {
    auto n = static_cast<Element>(order_);
    neg_.assign(order_, n);
    if (zero_ >= n) return;
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n && neg_[a] == n; ++b)
        if (add_[a * order_ + b] < n && add_[a * order_ + b] == zero_) neg_[a] = b;
  }

  std::string pair(Element a, Element b) const {
    return "(" + name(a) + ", " + name(b) + ")";
  }

  std::size_t order_ = 0;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::vector<Element> neg_;
  Element zero_ = 0;
  Element one_ = 0;
  std::string label_;
  Construction construction_;
  std::vector<std::string> names_;
};

inline std::string Construction::fingerprint() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::zmod:
      os << "zmod(" << modulus << ")";
      break;
    case Kind::poly_quotient:
      os << "polyquot(" << modulus << ";";
      for (std::size_t i = 0; i < coefficients.size(); ++i) os << (i ? "," : "") << coefficients[i];
      os << ")";
      break;
    case Kind::product:
      os << "product(";
      for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i]->fingerprint();
      os << ")";
      break;
    case Kind::quotient:
      os << "quotient(" << parts.at(0)->fingerprint() << ";";
      for (std::size_t i = 0; i < ideal.size(); ++i) os << (i ? "," : "") << ideal[i];
      os << ")";
      break;
    case Kind::tables:
      os << "tables(" << tables_tag << ")";
      break;
  }
  return os.str();
}

inline RingPtr build_zmod(std::uint64_t n, const Limits& limits = {}) {
  if (n < 2) throw InvalidArgument("Z/n requires n >= 2, got " + std::to_string(n));
  if (n > limits.order_cap) {
    throw OrderCapExceeded("Z/" + std::to_string(n) + " exceeds order cap " +
                           std::to_string(limits.order_cap));
  }
  std::vector<Element> add(n * n), mul(n * n);
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Element>((a + b) % n);
      mul[a * n + b] = static_cast<Element>((a * b) % n);
    }
  }
  Construction c;
  c.kind = Construction::Kind::zmod;
  c.modulus = n;
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), 0, 1,
                                 "Z/" + std::to_string(n), std::move(c), {}, limits);
}

// Product ring. Element index is mixed-radix with the first factor most
// significant; elements print as tuples.
inline RingPtr build_product(const std::vector<RingPtr>& factors, const Limits& limits = {}) {
  if (factors.size() < 2) throw InvalidArgument("a product needs at least two factors");
  std::size_t order = 1;
  for (const auto& f : factors) {
    if (!f) throw InvalidArgument("null factor ring");
    order *= f->order();
    if (order > limits.order_cap) {
      throw OrderCapExceeded("product order exceeds cap " + std::to_string(limits.order_cap));
    }
  }
  const std::size_t k = factors.size();
  auto digits = [&](std::size_t idx) {
    std::vector<Element> d(k);
    for (std::size_t i = k; i-- > 0;) {
      d[i] = static_cast<Element>(idx % factors[i]->order());
      idx /= factors[i]->order();
    }
    return d;
  };
  auto index = [&](const std::vector<Element>& d) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx = idx * factors[i]->order() + d[i];
    return static_cast<Element>(idx);
  };
  std::vector<std::vector<Element>> all(order);
  std::vector<std::string> names(order);
  for (std::size_t i = 0; i < order; ++i) {
    all[i] = digits(i);
    std::string nm = "(";
    for (std::size_t j = 0; j < k; ++j) nm += (j ? "," : "") + factors[j]->name(all[i][j]);
    names[i] = nm + ")";
  }
  std::vector<Element> add(order * order), mul(order * order), tmp(k);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t j = 0; j < k; ++j) tmp[j] = factors[j]->add(all[a][j], all[b][j]);
      add[a * order + b] = index(tmp);
      for (std::size_t j = 0; j < k; ++j) tmp[j] = factors[j]->mul(all[a][j], all[b][j]);
      mul[a * order + b] = index(tmp);
    }
  }
  std::vector<Element> z(k), o(k);
  std::string label;
  for (std::size_t j = 0; j < k; ++j) {
    z[j] = factors[j]->zero();
    o[j] = factors[j]->one();
    bool nested = factors[j]->construction().kind == Construction::Kind::product;
    label += (j ? " x " : "") + (nested ? "(" + factors[j]->label() + ")" : factors[j]->label());
  }
  Construction c;
  c.kind = Construction::Kind::product;
  c.parts = factors;
  return FiniteRing::from_tables(order, std::move(add), std::move(mul), index(z), index(o),
                                 std::move(label), std::move(c), std::move(names), limits);
}

// (Z/n)[x]/(f) with f monic. `f` holds ascending integer coefficients; its
// leading coefficient must be 1. Elements are residues of degree < deg f,
// indexed by sum c_i n^i.
inline RingPtr build_poly_quotient(std::uint64_t n, std::vector<std::int64_t> f,
                                   const Limits& limits = {}) {
  if (n < 2) throw InvalidArgument("coefficient modulus must be >= 2");
  while (!f.empty() && f.back() == 0) f.pop_back();
  if (f.size() < 2) throw InvalidArgument("polynomial must have degree >= 1");
  if (f.back() != 1) throw InvalidArgument("polynomial must be monic");
  const auto mod = static_cast<std::int64_t>(n);
  for (auto& c : f) c = ((c % mod) + mod) % mod;
  const std::size_t d = f.size() - 1;
  std::size_t order = 1;
  for (std::size_t i = 0; i < d; ++i) {
    order *= n;
    if (order > limits.order_cap) {
      throw OrderCapExceeded("poly quotient order exceeds cap " +
                             std::to_string(limits.order_cap));
    }
  }
  std::vector<std::vector<std::int64_t>> coeffs(order, std::vector<std::int64_t>(d));
  std::vector<std::string> names(order);
  for (std::size_t i = 0; i < order; ++i) {
    std::size_t idx = i;
    for (std::size_t j = 0; j < d; ++j) {
      coeffs[i][j] = static_cast<std::int64_t>(idx % n);
      idx /= n;
    }
    names[i] = format_poly(coeffs[i]);
  }
  auto index = [&](const std::vector<std::int64_t>& c) {
    std::size_t idx = 0;
    for (std::size_t j = d; j-- > 0;) idx = idx * n + static_cast<std::size_t>(c[j]);
    return static_cast<Element>(idx);
  };
  std::vector<Element> add(order * order), mul(order * order);
  std::vector<std::int64_t> sum(d), prod(2 * d - 1);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t j = 0; j < d; ++j) sum[j] = (coeffs[a][j] + coeffs[b][j]) % mod;
      add[a * order + b] = index(sum);
      std::fill(prod.begin(), prod.end(), 0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          prod[i + j] = (prod[i + j] + coeffs[a][i] * coeffs[b][j]) % mod;
      // x^k = x^(k-d) * (x^d) and x^d = -(f_0 + ... + f_{d-1} x^{d-1})
      for (std::size_t k = prod.size(); k-- > d;) {
        std::int64_t top = prod[k];
        if (top == 0) continue;
        prod[k] = 0;
        for (std::size_t i = 0; i < d; ++i) {
          auto& slot = prod[k - d + i];
          slot = ((slot - top * f[i]) % mod + mod) % mod;
        }
      }
      std::vector<std::int64_t> low(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d));
      mul[a * order + b] = index(low);
    }
  }
  Construction c;
  c.kind = Construction::Kind::poly_quotient;
  c.modulus = n;
  c.coefficients = f;
  std::string label = "Z/" + std::to_string(n) + "[x]/(" + format_poly(f) + ")";
  return FiniteRing::from_tables(order, std::move(add), std::move(mul), 0, 1,
                                 std::move(label), std::move(c), std::move(names), limits);
}

// All e with e*e = e, ascending.
inline std::vector<Element> idempotents(const FiniteRing& r) {
  std::vector<Element> out;
  for (Element e = 0; e < r.order(); ++e)
    if (r.mul(e, e) == e) out.push_back(e);
  return out;
}

// Sampled axiom audit for large rings; returns the number of violations.
inline std::size_t audit_sampled(const FiniteRing& r, std::mt19937_64& rng, std::size_t samples) {
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(r.order() - 1));
  std::size_t bad = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    Element a = pick(rng), b = pick(rng), c = pick(rng);
    bad += r.add(r.add(a, b), c) != r.add(a, r.add(b, c));
    bad += r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c));
    bad += r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c));
    bad += r.add(a, b) != r.add(b, a);
    bad += r.mul(a, b) != r.mul(b, a);
    bad += r.add(a, r.neg(a)) != r.zero();
  }
  return bad;
}

}  // namespace purespec
