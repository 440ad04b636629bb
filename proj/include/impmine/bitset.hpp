#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "impmine/kernels.hpp"

namespace impmine {

/// Fixed-width dynamic bitset backed by the runtime-selected word kernels.
/// Bits past size() are kept zero. Binary operations require equal widths.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t nbits, bool fill = false)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {
    if (fill) set_all();
  }

  std::size_t size() const { return nbits_; }
  std::size_t word_count() const { return words_.size(); }
  const std::uint64_t* data() const { return words_.data(); }

  bool test(std::size_t i) const {
    assert(i < nbits_);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }
  void set(std::size_t i) {
    assert(i < nbits_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(std::size_t i) {
    assert(i < nbits_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void flip(std::size_t i) {
    assert(i < nbits_);
    words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
  }

  void set_all() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    mask_tail();
  }
  void reset_all() {
    for (auto& w : words_) w = 0;
  }

  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }
  bool all() const { return count() == nbits_; }

  std::size_t count() const {
    return active_kernels().popcount(words_.data(), words_.size());
  }
  std::size_t count_and(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    return active_kernels().popcount_and(words_.data(), o.words_.data(),
                                         words_.size());
  }

  Bitset& operator&=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    active_kernels().bit_and(words_.data(), words_.data(), o.words_.data(),
                             words_.size());
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    active_kernels().bit_or(words_.data(), words_.data(), o.words_.data(),
                            words_.size());
    return *this;
  }
  /// this = this & ~o
  Bitset& and_not_assign(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    active_kernels().bit_andnot(words_.data(), words_.data(), o.words_.data(),
                                words_.size());
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool is_subset_of(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    return active_kernels().is_subset(words_.data(), o.words_.data(),
                                      words_.size());
  }
  bool is_proper_subset_of(const Bitset& o) const {
    return is_subset_of(o) && !(*this == o);
  }
  bool intersects(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    return active_kernels().intersects(words_.data(), o.words_.data(),
                                       words_.size());
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.nbits_ == b.nbits_ &&
           active_kernels().equals(a.words_.data(), b.words_.data(),
                                   a.words_.size());
  }
  friend bool operator!=(const Bitset& a, const Bitset& b) {
    return !(a == b);
  }

  /// All bits flipped within size().
  Bitset complement() const {
    Bitset r(nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.mask_tail();
    return r;
  }

  /// Index of the lowest set bit, or -1.
  int find_first() const;

  /// Visits set bits in ascending order; f may not mutate the bitset.
  template <typename F>
  void for_each_set(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        unsigned bit = static_cast<unsigned>(__builtin_ctzll(w));
        f(static_cast<std::size_t>(wi * 64 + bit));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_indices() const;

 private:
  void mask_tail() {
    if (nbits_ % 64 != 0 && !words_.empty())
      words_.back() &= (~std::uint64_t{0}) >> (64 - nbits_ % 64);
  }

  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace impmine
