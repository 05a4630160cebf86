#include <cstdlib>
#include <string_view>

#include "qens/kernels.hpp"

namespace qens::kernels {

#if !defined(QENS_HAVE_AVX2_BUILD)
const Ops* avx2_ops() { return nullptr; }
#endif

namespace {

const Ops& resolve() {
  if (const char* force = std::getenv("QENS_KERNELS")) {
    const std::string_view want(force);
    if (want == "scalar") return scalar_ops();
    if (want == "avx2") {
      if (const Ops* ops = avx2_ops()) return *ops;
      return scalar_ops();
    }
  }
  if (const Ops* ops = avx2_ops()) return *ops;
  return scalar_ops();
}

}  // namespace

const Ops& active_ops() {
  static const Ops& ops = resolve();
  return ops;
}

}  // namespace qens::kernels
