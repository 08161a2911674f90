#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace monfact {

/// Fixed-width bit vector over [0, width) used by the set searches. Bits at or
/// beyond width are kept zero by every operation.
class DenseBits {
 public:
  DenseBits() = default;
  explicit DenseBits(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

  std::size_t width() const { return width_; }

  bool test(std::size_t i) const {
    return i < width_ && ((words_[i >> 6] >> (i & 63)) & 1u);
  }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  bool none() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  /// Bits i with (i + shift) set in this.
  DenseBits shifted_down(std::size_t shift) const {
    DenseBits out(width_);
    const std::size_t ws = shift >> 6, bs = shift & 63;
    for (std::size_t i = 0; i + ws < words_.size(); ++i) {
      std::uint64_t w = words_[i + ws] >> bs;
      if (bs != 0 && i + ws + 1 < words_.size()) w |= words_[i + ws + 1] << (64 - bs);
      out.words_[i] = w;
    }
    return out;
  }

  /// this |= (other << shift), truncated to width.
  void or_shifted_up(const DenseBits& other, std::size_t shift) {
    const std::size_t ws = shift >> 6, bs = shift & 63;
    for (std::size_t i = words_.size(); i-- > ws;) {
      const std::size_t src = i - ws;
      std::uint64_t w = other.words_[src] << bs;
      if (bs != 0 && src > 0) w |= other.words_[src - 1] >> (64 - bs);
      words_[i] |= w;
    }
    trim();
  }

  DenseBits& operator&=(const DenseBits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  /// Clears every bit >= limit.
  void truncate(std::size_t limit) {
    for (std::size_t i = limit; i < width_ && (i & 63) != 0; ++i) reset(i);
    for (std::size_t w = (limit + 63) / 64; w < words_.size(); ++w) words_[w] = 0;
  }

  /// True iff this and o agree on [0, limit).
  bool equal_below(const DenseBits& o, std::size_t limit) const {
    const std::size_t full = limit >> 6;
    for (std::size_t i = 0; i < full; ++i) {
      if (words_[i] != o.words_[i]) return false;
    }
    const std::size_t rest = limit & 63;
    if (rest == 0) return true;
    const std::uint64_t mask = (std::uint64_t{1} << rest) - 1;
    return ((words_[full] ^ o.words_[full]) & mask) == 0;
  }

  bool operator==(const DenseBits&) const = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

 private:
  void trim() {
    if ((width_ & 63) != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << (width_ & 63)) - 1;
    }
  }

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace monfact
