#include "regpow/parallel.hpp"

#include <omp.h>

namespace regpow {

namespace {
int default_workers = omp_get_max_threads();
}

int worker_count() { return omp_get_max_threads(); }

void set_worker_count(int workers) { omp_set_num_threads(workers < 1 ? default_workers : workers); }

}  // namespace regpow
