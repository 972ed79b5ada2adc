#pragma once

#include <bit>
#include <cstdint>

namespace genus {

// Fixed-width vertex set.  Word selects the compiled capacity: the 64-bit
// instantiation is the fast path, the 128-bit one covers larger inputs.
template <class Word>
class SmallBitset {
 public:
  static constexpr int capacity() { return static_cast<int>(sizeof(Word) * 8); }

  constexpr SmallBitset() = default;

  static constexpr SmallBitset single(int v) { return SmallBitset(Word(1) << v); }

  constexpr void add(int v) { bits_ |= Word(1) << v; }
  constexpr void remove(int v) { bits_ &= ~(Word(1) << v); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1; }

  // true iff other is a subset of *this
  constexpr bool contains_all(SmallBitset other) const {
    return (other.bits_ & ~bits_) == 0;
  }
  constexpr bool intersects(SmallBitset other) const {
    return (bits_ & other.bits_) != 0;
  }
  constexpr SmallBitset and_not(SmallBitset other) const {
    return SmallBitset(bits_ & ~other.bits_);
  }
  constexpr bool empty() const { return bits_ == 0; }

  int count() const {
    if constexpr (sizeof(Word) > 8) {
      return std::popcount(static_cast<std::uint64_t>(bits_)) +
             std::popcount(static_cast<std::uint64_t>(bits_ >> 64));
    } else {
      return std::popcount(static_cast<std::uint64_t>(bits_));
    }
  }

  friend constexpr SmallBitset operator|(SmallBitset a, SmallBitset b) {
    return SmallBitset(a.bits_ | b.bits_);
  }
  friend constexpr SmallBitset operator&(SmallBitset a, SmallBitset b) {
    return SmallBitset(a.bits_ & b.bits_);
  }
  constexpr SmallBitset& operator|=(SmallBitset other) {
    bits_ |= other.bits_;
    return *this;
  }
  friend constexpr bool operator==(SmallBitset a, SmallBitset b) {
    return a.bits_ == b.bits_;
  }
  friend constexpr bool operator!=(SmallBitset a, SmallBitset b) {
    return a.bits_ != b.bits_;
  }

 private:
  constexpr explicit SmallBitset(Word bits) : bits_(bits) {}
  Word bits_ = 0;
};

using VertexSet64 = SmallBitset<std::uint64_t>;
using VertexSet128 = SmallBitset<unsigned __int128>;

}  // namespace genus
