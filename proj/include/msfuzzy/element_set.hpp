#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace msfuzzy {

/// Index of an element in its lattice's canonical (input) order.
using Element = std::size_t;

/// Maximum carrier size; subsets are stored as 64-bit masks.
inline constexpr std::size_t kMaxElements = 64;

/// Subset of a lattice carrier, iterated in canonical element order.
class ElementSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    Element operator*() const { return static_cast<Element>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator&, const iterator&) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static ElementSet single(Element e) { return ElementSet(std::uint64_t{1} << e); }
  static ElementSet first_n(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  std::uint64_t bits() const noexcept { return bits_; }
  bool contains(Element e) const noexcept { return (bits_ >> e) & 1U; }
  bool empty() const noexcept { return bits_ == 0; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

  void insert(Element e) noexcept { bits_ |= std::uint64_t{1} << e; }
  void erase(Element e) noexcept { bits_ &= ~(std::uint64_t{1} << e); }

  bool subset_of(ElementSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }

  friend ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend bool operator==(ElementSet, ElementSet) = default;

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace msfuzzy
