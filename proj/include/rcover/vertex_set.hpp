#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <vector>

namespace rcover {

using Vertex = std::uint32_t;

// Dynamic bitset over the vertex universe [0, universe). All binary
// operations require operands with the same universe.
class VertexSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const std::uint64_t* words, std::size_t count, std::size_t word)
        : words_(words), count_(count), word_(word) {
      if (word_ < count_) current_ = words_[word_];
      settle();
    }

    Vertex operator*() const {
      return static_cast<Vertex>(word_ * 64 + std::countr_zero(current_));
    }
    const_iterator& operator++() {
      current_ &= current_ - 1;
      settle();
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const {
      return word_ == other.word_ && current_ == other.current_;
    }

   private:
    void settle() {
      while (current_ == 0 && word_ < count_) {
        ++word_;
        current_ = word_ < count_ ? words_[word_] : 0;
      }
    }

    const std::uint64_t* words_ = nullptr;
    std::size_t count_ = 0;
    std::size_t word_ = 0;
    std::uint64_t current_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_(word_count(universe), 0) {}

  static std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t v = 0; v < universe; ++v) s.insert(static_cast<Vertex>(v));
    return s;
  }

  static VertexSet from_words(std::size_t universe, std::span<const std::uint64_t> words) {
    VertexSet s(universe);
    for (std::size_t i = 0; i < s.words_.size() && i < words.size(); ++i) s.words_[i] = words[i];
    return s;
  }

  template <class Range>
  static VertexSet of(std::size_t universe, const Range& vertices) {
    VertexSet s(universe);
    for (auto v : vertices) s.insert(static_cast<Vertex>(v));
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u) != 0;
  }
  void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t size() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  std::optional<Vertex> first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
    return std::nullopt;
  }

  // Largest member, if any.
  std::optional<Vertex> last() const noexcept {
    for (std::size_t i = words_.size(); i-- > 0;)
      if (words_[i] != 0) return static_cast<Vertex>(i * 64 + 63 - std::countl_zero(words_[i]));
    return std::nullopt;
  }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  const_iterator begin() const { return {words_.data(), words_.size(), 0}; }
  const_iterator end() const { return {words_.data(), words_.size(), words_.size()}; }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool intersects(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

  bool operator==(const VertexSet&) const = default;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// |a ∩ b| over raw word spans of equal length.
inline std::size_t intersection_count(std::span<const std::uint64_t> a,
                                      std::span<const std::uint64_t> b) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

}  // namespace rcover
