// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLOWERDECK_PARALLEL_H_
#define FLOWERDECK_PARALLEL_H_

namespace fd {

// Exhaustive scans come in two flavours. The serial one is the reference;
// the parallel one must return bit-identical results.
enum class Exec { kSerial, kParallel };

// Worker bound for parallel scans. 0 restores the OpenMP default.
void set_jobs(int jobs);
int jobs();

}  // namespace fd

#endif  // FLOWERDECK_PARALLEL_H_
