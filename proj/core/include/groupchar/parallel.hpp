#pragma once

namespace groupchar {

// Worker budget for enumeration kernels: GROUPCHAR_THREADS if set, else 1.
// Clamped to [1, hardware_concurrency].
int thread_budget();

}  // namespace groupchar
