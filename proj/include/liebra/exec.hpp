#pragma once

namespace liebra {

// Execution policy for the kernels that have both a serial reference
// implementation and an OpenMP one. Results are bit-identical across
// policies; "automatic" picks the parallel path for large problems when
// the build has OpenMP, and the serial path otherwise.
enum class Exec { automatic, serial, parallel };

// Number of threads the parallel path would use (1 without OpenMP).
int exec_thread_count();

// Resolve "automatic" for a given problem size (rows*cols, triples, ...).
bool exec_use_parallel(Exec policy, long long work_estimate);

} // namespace liebra
