#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace purespec {

using Element = std::uint32_t;

// A subset of {0, ..., universe-1}. Used for ideal members (elements of a
// ring) and for point sets of finite spaces.
class ElementSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe) {}
  ElementSet(std::size_t universe, std::initializer_list<Element> members)
      : bits_(universe) {
    for (auto m : members) insert(m);
  }

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    s.bits_.set();
    return s;
  }

  template <class Range>
  static ElementSet of(std::size_t universe, const Range& members) {
    ElementSet s(universe);
    for (auto m : members) s.insert(static_cast<Element>(m));
    return s;
  }

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }
  bool is_full() const noexcept { return bits_.all(); }

  bool contains(Element e) const { return e < bits_.size() && bits_.test(e); }
  void insert(Element e) { bits_.set(e); }
  void erase(Element e) { bits_.reset(e); }

  bool is_subset_of(const ElementSet& other) const {
    return bits_.is_subset_of(other.bits_);
  }
  bool is_proper_subset_of(const ElementSet& other) const {
    return bits_.is_proper_subset_of(other.bits_);
  }
  bool intersects(const ElementSet& other) const {
    return bits_.intersects(other.bits_);
  }

  ElementSet& operator|=(const ElementSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    bits_ &= o.bits_;
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    bits_ -= o.bits_;
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  ElementSet complement() const {
    ElementSet s = *this;
    s.bits_.flip();
    return s;
  }

  // Smallest member, or universe() when empty.
  Element first() const {
    auto p = bits_.find_first();
    return p == Bits::npos ? static_cast<Element>(bits_.size()) : static_cast<Element>(p);
  }

  template <class F>
  void for_each(F&& f) const {
    for (auto p = bits_.find_first(); p != Bits::npos; p = bits_.find_next(p)) {
      f(static_cast<Element>(p));
    }
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for_each([&](Element e) { out.push_back(e); });
    return out;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.bits_ == b.bits_;
  }

  std::size_t hash() const {
    std::vector<std::uint64_t> blocks;
    boost::to_block_range(bits_, std::back_inserter(blocks));
    std::size_t h = 1469598103934665603ull ^ bits_.size();
    for (auto b : blocks) h = (h ^ b) * 1099511628211ull;
    return h;
  }

 private:
  Bits bits_;
};

// Canonical order: by cardinality, then lexicographically on the sorted
// member lists. Among sets of equal size the one holding the smallest element
// of the symmetric difference comes first.
inline bool canonical_less(const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a == b) return false;
  auto diff = (a - b) | (b - a);
  return a.contains(diff.first());
}

struct CanonicalLess {
  bool operator()(const ElementSet& a, const ElementSet& b) const {
    return canonical_less(a, b);
  }
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace purespec
