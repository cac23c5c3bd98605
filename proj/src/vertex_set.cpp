#include <fppshield/vertex_set.hpp>

#include <algorithm>

namespace fppshield {

void VertexSet::const_iterator::advance(Index from) {
  const auto n = set_->universe_;
  Index i = from;
  while (i < n) {
    const std::uint64_t word = set_->words_[i >> 6] >> (i & 63);
    if (word != 0) {
      pos_ = i + static_cast<Index>(std::countr_zero(word));
      return;
    }
    i = (i | 63) + 1;
  }
  pos_ = n;
}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Index> members)
    : VertexSet(universe) {
  for (auto m : members)
    insert(m);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto &w : s.words_)
    w = ~std::uint64_t{0};
  if (universe % 64 != 0)
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t c = 0;
  for (auto w : words_)
    c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

std::optional<Index> VertexSet::first() const noexcept {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k] != 0)
      return k * 64 + static_cast<Index>(std::countr_zero(words_[k]));
  return std::nullopt;
}

bool VertexSet::is_subset_of(const VertexSet &other) const noexcept {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if ((words_[k] & ~other.words_[k]) != 0)
      return false;
  return true;
}

bool VertexSet::intersects(const VertexSet &other) const noexcept {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if ((words_[k] & other.words_[k]) != 0)
      return true;
  return false;
}

VertexSet &VertexSet::operator|=(const VertexSet &other) noexcept {
  for (std::size_t k = 0; k < words_.size(); ++k)
    words_[k] |= other.words_[k];
  return *this;
}

VertexSet &VertexSet::operator&=(const VertexSet &other) noexcept {
  for (std::size_t k = 0; k < words_.size(); ++k)
    words_[k] &= other.words_[k];
  return *this;
}

VertexSet &VertexSet::operator-=(const VertexSet &other) noexcept {
  for (std::size_t k = 0; k < words_.size(); ++k)
    words_[k] &= ~other.words_[k];
  return *this;
}

std::vector<Index> VertexSet::to_vector() const {
  return std::vector<Index>(begin(), end());
}

} // namespace fppshield
