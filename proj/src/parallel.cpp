// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flowerdeck/parallel.h"

#include <omp.h>

namespace fd {

namespace {
// Captured before anyone calls set_jobs.
const int kDefaultJobs = omp_get_max_threads();
int default_jobs() { return kDefaultJobs; }
}  // namespace

void set_jobs(int n) { omp_set_num_threads(n > 0 ? n : default_jobs()); }

int jobs() { return omp_get_max_threads(); }

}  // namespace fd
