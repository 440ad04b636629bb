#pragma once

#include <cstddef>
#include <cstdint>

namespace impmine {

/// Word-level set kernels. Every operation works on arrays of `n` 64-bit
/// words; a bitset is stored little-endian (bit i lives in word i/64).
/// Two implementations exist: a scalar reference and an AVX2 variant.
/// `active_kernels()` picks one at startup based on the host CPU; the
/// environment variable IMPMINE_KERNELS=scalar|avx2 overrides the choice.
struct KernelOps {
  const char* name;

  void (*bit_and)(std::uint64_t* dst, const std::uint64_t* a,
                  const std::uint64_t* b, std::size_t n);
  void (*bit_or)(std::uint64_t* dst, const std::uint64_t* a,
                 const std::uint64_t* b, std::size_t n);
  // dst = a & ~b
  void (*bit_andnot)(std::uint64_t* dst, const std::uint64_t* a,
                     const std::uint64_t* b, std::size_t n);
  std::uint64_t (*popcount)(const std::uint64_t* a, std::size_t n);
  std::uint64_t (*popcount_and)(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t n);
  // a subset of b, i.e. (a & ~b) == 0
  bool (*is_subset)(const std::uint64_t* a, const std::uint64_t* b,
                    std::size_t n);
  bool (*intersects)(const std::uint64_t* a, const std::uint64_t* b,
                     std::size_t n);
  bool (*equals)(const std::uint64_t* a, const std::uint64_t* b,
                 std::size_t n);
};

const KernelOps& scalar_kernels();

#if defined(IMPMINE_HAVE_AVX2_TU)
const KernelOps& avx2_kernels();
bool avx2_supported();
#endif

const KernelOps& active_kernels();

}  // namespace impmine
