#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <vector>

namespace fppshield {

using Index = std::size_t;

/// Subset of a carrier {0, ..., universe-1}, stored as a packed bit row.
///
/// Rows of any length are supported; carriers of at most 64 points occupy a
/// single machine word. Binary operations require equal universes.
class VertexSet {
public:
  class const_iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Index;
    using difference_type = std::ptrdiff_t;
    using pointer = const Index *;
    using reference = Index;

    const_iterator() = default;
    Index operator*() const { return pos_; }
    const_iterator &operator++() {
      advance(pos_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator &o) const { return pos_ == o.pos_; }

  private:
    friend class VertexSet;
    const_iterator(const VertexSet *set, Index start) : set_(set) {
      advance(start);
    }
    void advance(Index from);

    const VertexSet *set_ = nullptr;
    Index pos_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Index> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Index i) const noexcept {
    return i < universe_ && ((words_[i >> 6] >> (i & 63)) & 1U) != 0;
  }
  void insert(Index i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(Index i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t size() const noexcept;
  bool empty() const noexcept;
  std::optional<Index> first() const noexcept;

  bool is_subset_of(const VertexSet &other) const noexcept;
  bool intersects(const VertexSet &other) const noexcept;

  VertexSet &operator|=(const VertexSet &other) noexcept;
  VertexSet &operator&=(const VertexSet &other) noexcept;
  // Set difference.
  VertexSet &operator-=(const VertexSet &other) noexcept;

  friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet &b) { return a -= b; }

  bool operator==(const VertexSet &other) const = default;
  std::strong_ordering operator<=>(const VertexSet &other) const = default;

  const_iterator begin() const { return const_iterator(this, 0); }
  const_iterator end() const {
    const_iterator it;
    it.set_ = this;
    it.pos_ = universe_;
    return it;
  }

  std::vector<Index> to_vector() const;

private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace fppshield
