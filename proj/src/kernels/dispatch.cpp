#include <stdexcept>
#include <string>

#include "tables.hpp"

namespace flowline::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(FLOWLINE_HAVE_AVX2)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

Backend detect() {
  return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

Backend& backend_ref() {
  static Backend b = detect();
  return b;
}

}  // namespace

bool available(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
      return cpu_has_avx2();
  }
  return false;
}

Backend active_backend() { return backend_ref(); }

void set_backend(Backend b) {
  if (!available(b))
    throw std::invalid_argument("kernel backend '" +
                                std::string(backend_name(b)) +
                                "' is unavailable on this host");
  backend_ref() = b;
}

const KernelTable& table(Backend b) {
  switch (b) {
    case Backend::scalar:
      return scalar_table();
    case Backend::avx2:
#if defined(FLOWLINE_HAVE_AVX2)
      if (cpu_has_avx2()) return avx2_table();
#endif
      break;
  }
  throw std::invalid_argument("kernel backend '" +
                              std::string(backend_name(b)) +
                              "' is unavailable on this host");
}

const KernelTable& table() { return table(backend_ref()); }

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace flowline::kernels
