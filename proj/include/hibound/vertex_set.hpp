#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace hibound {

using Vertex = std::uint32_t;

/// Fixed-capacity set of vertex ids backed by 64-bit words. One word covers
/// every instance with n <= 64; larger n spills into further words.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::uint32_t capacity)
      : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

  static VertexSet of(std::uint32_t capacity, std::span<const Vertex> vs) {
    VertexSet s(capacity);
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  std::uint32_t capacity() const noexcept { return capacity_; }

  void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool contains(Vertex v) const {
    return v < capacity_ && ((words_[v >> 6] >> (v & 63)) & 1u) != 0;
  }

  std::uint32_t size() const noexcept {
    std::uint32_t c = 0;
    for (auto w : words_) c += static_cast<std::uint32_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// True iff every element of *this is in `other`.
  bool subset_of(const VertexSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
      if (words_[i] & ~o) return false;
    }
    return true;
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::uint32_t capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace hibound
