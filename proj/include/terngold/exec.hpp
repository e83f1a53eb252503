#pragma once

namespace terngold {

// Execution policy for kernels that exist in both a serial reference form and
// an OpenMP form.  Parallel kernels use order-independent reductions, so both
// policies produce identical results.
enum class Exec { Serial, Parallel };

}  // namespace terngold
