#pragma once

#include "flowline/kernels.hpp"

namespace flowline::kernels {

const KernelTable& scalar_table();
#if defined(FLOWLINE_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

}  // namespace flowline::kernels
