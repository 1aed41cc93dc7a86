#pragma once

namespace egcd {

/// Kernels come in two flavours: a plain loop kept as the reference, and an
/// OpenMP loop over the same per-item work. Both produce identical results.
enum class Execution { serial, parallel };

/// Threads the parallel kernels will use (1 without OpenMP).
int parallel_threads();

}  // namespace egcd
