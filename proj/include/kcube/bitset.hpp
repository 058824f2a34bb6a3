#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace kcube {

// Fixed-size bitset over 64-bit words, sized at runtime. Used as vertex sets
// and adjacency rows of the compatibility graph.
class Bitset {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + word_bits - 1) / word_bits, 0) {}

  static Bitset full(std::size_t size) {
    Bitset b(size);
    for (auto& w : b.words_) w = ~word_type{0};
    b.trim();
    return b;
  }

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept { return (words_[i / word_bits] >> (i % word_bits)) & 1U; }
  void set(std::size_t i) noexcept { words_[i / word_bits] |= word_type{1} << (i % word_bits); }
  void reset(std::size_t i) noexcept { words_[i / word_bits] &= ~(word_type{1} << (i % word_bits)); }

  // Clears bits 0..i inclusive.
  void reset_through(std::size_t i) noexcept {
    const std::size_t w = i / word_bits;
    for (std::size_t j = 0; j < w; ++j) words_[j] = 0;
    const std::size_t shift = i % word_bits + 1;
    words_[w] &= shift == word_bits ? word_type{0} : ~((word_type{1} << shift) - 1);
  }

  bool none() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const noexcept { return !none(); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  // Index of the lowest set bit at or after `from`, or npos.
  std::size_t next(std::size_t from = 0) const noexcept {
    if (from >= size_) return npos;
    std::size_t w = from / word_bits;
    word_type cur = words_[w] & (~word_type{0} << (from % word_bits));
    for (;;) {
      if (cur) return w * word_bits + static_cast<std::size_t>(std::countr_zero(cur));
      if (++w == words_.size()) return npos;
      cur = words_[w];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      for (word_type cur = words_[w]; cur; cur &= cur - 1)
        f(w * word_bits + static_cast<std::size_t>(std::countr_zero(cur)));
  }

  Bitset& operator&=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }

  bool intersects(const Bitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  // True when every set bit of *this is also set in o.
  bool subset_of(const Bitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

  std::size_t hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto w : words_) {
      h ^= static_cast<std::size_t>(w);
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return h;
  }

 private:
  void trim() noexcept {
    if (size_ % word_bits != 0 && !words_.empty()) words_.back() &= (word_type{1} << (size_ % word_bits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

}  // namespace kcube
