#ifndef PGROWTH_INDEX_SET_HPP
#define PGROWTH_INDEX_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "pgrowth/errors.hpp"

namespace pgrowth {

/// Fixed-capacity bit set over a dense index universe [0, universe).
/// Union, intersection, comparison and population count are word-parallel;
/// the growth iteration touches every point and line of the ambient plane
/// repeatedly, so sets are kept this flat on purpose.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static IndexSet of(std::size_t universe,
                     std::initializer_list<std::uint32_t> ids) {
    IndexSet s(universe);
    for (auto i : ids) s.set(i);
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool test(std::uint32_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::uint32_t i) {
    if (i >= universe_) throw IndexOutOfRangeError("IndexSet::set out of range");
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(std::uint32_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  IndexSet& operator|=(const IndexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  IndexSet& operator&=(const IndexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  bool is_subset_of(const IndexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  /// Visit members in ascending order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        const int bit = std::countr_zero(w);
        f(static_cast<std::uint32_t>(wi * 64 + bit));
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint32_t> to_vector() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::uint32_t i) { out.push_back(i); });
    return out;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace pgrowth

#endif  // PGROWTH_INDEX_SET_HPP
