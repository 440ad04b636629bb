#include "impmine/bitset.hpp"

namespace impmine {

int Bitset::find_first() const {
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    if (words_[wi])
      return static_cast<int>(wi * 64 + __builtin_ctzll(words_[wi]));
  }
  return -1;
}

std::vector<int> Bitset::to_indices() const {
  std::vector<int> out;
  out.reserve(count());
  for_each_set([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
  return out;
}

}  // namespace impmine
