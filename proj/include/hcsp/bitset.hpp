#ifndef HCSP_BITSET_HPP
#define HCSP_BITSET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace hcsp {

/**
 * Fixed-width bit vector whose width is chosen at construction.
 *
 * Bit i stands for ground element i+1. Ordering compares the vectors as
 * unsigned integers (most significant word first), which is the order
 * blocks are kept in inside a SetSystem.
 */
class Bitset {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t bits_per_word = 64;

  Bitset() = default;
  explicit Bitset(std::size_t nbits)
      : nbits_(nbits), words_((nbits + bits_per_word - 1) / bits_per_word, 0) {}

  std::size_t width() const { return nbits_; }
  std::size_t word_count() const { return words_.size(); }
  Word word(std::size_t i) const { return words_[i]; }

  void set(std::size_t i) { words_[i / bits_per_word] |= Word{1} << (i % bits_per_word); }
  void reset(std::size_t i) { words_[i / bits_per_word] &= ~(Word{1} << (i % bits_per_word)); }
  bool test(std::size_t i) const {
    return (words_[i / bits_per_word] >> (i % bits_per_word)) & 1U;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (Word w : words_)
      n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool none() const {
    for (Word w : words_)
      if (w != 0)
        return false;
    return true;
  }

  /// Index of the lowest set bit, if any.
  std::optional<std::size_t> first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0)
        return i * bits_per_word + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return std::nullopt;
  }

  /// The single element when exactly one bit is set.
  std::optional<std::size_t> single() const {
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      if (w == 0)
        continue;
      if (found || (w & (w - 1)) != 0)
        return std::nullopt;
      found = i * bits_per_word + static_cast<std::size_t>(std::countr_zero(w));
    }
    return found;
  }

  template <class F> void for_each(F &&f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w != 0) {
        f(i * bits_per_word + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  Bitset &operator&=(const Bitset &o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= o.words_[i];
    return *this;
  }
  Bitset &operator|=(const Bitset &o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] |= o.words_[i];
    return *this;
  }

  /// Complement relative to {0, ..., width()-1}.
  Bitset complemented() const {
    Bitset r = *this;
    for (Word &w : r.words_)
      w = ~w;
    r.trim();
    return r;
  }

  bool is_subset_of(const Bitset &o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0)
        return false;
    return true;
  }

  friend Bitset operator&(Bitset a, const Bitset &b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset &b) { return a |= b; }

  /// |a & b| without materialising the intersection.
  friend std::size_t intersection_count(const Bitset &a, const Bitset &b) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      n += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
    return n;
  }

  friend bool operator==(const Bitset &a, const Bitset &b) {
    return a.nbits_ == b.nbits_ && a.words_ == b.words_;
  }

  friend std::strong_ordering operator<=>(const Bitset &a, const Bitset &b) {
    if (a.nbits_ != b.nbits_)
      return a.nbits_ <=> b.nbits_;
    for (std::size_t i = a.words_.size(); i-- > 0;)
      if (a.words_[i] != b.words_[i])
        return a.words_[i] <=> b.words_[i];
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<std::size_t>{}(nbits_);
    for (Word w : words_)
      h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

private:
  void trim() {
    std::size_t rem = nbits_ % bits_per_word;
    if (rem != 0 && !words_.empty())
      words_.back() &= (Word{1} << rem) - 1;
  }

  std::size_t nbits_ = 0;
  std::vector<Word> words_;
};

} // namespace hcsp

template <> struct std::hash<hcsp::Bitset> {
  std::size_t operator()(const hcsp::Bitset &b) const noexcept { return b.hash(); }
};

#endif
