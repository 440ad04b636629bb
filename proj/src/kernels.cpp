#include "impmine/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace impmine {
namespace {

const KernelOps& select_kernels() {
  const char* force = std::getenv("IMPMINE_KERNELS");
#if defined(IMPMINE_HAVE_AVX2_TU)
  if (force != nullptr) {
    if (std::strcmp(force, "avx2") == 0 && avx2_supported())
      return avx2_kernels();
    return scalar_kernels();
  }
  if (avx2_supported()) return avx2_kernels();
#else
  (void)force;
#endif
  return scalar_kernels();
}

}  // namespace

const KernelOps& active_kernels() {
  static const KernelOps& ops = select_kernels();
  return ops;
}

}  // namespace impmine
