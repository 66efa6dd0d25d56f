#include "lemni/parallel.hpp"

#include <omp.h>

#include <algorithm>

namespace lemni {

void set_parallelism(int threads) { omp_set_num_threads(std::max(1, threads)); }

int parallelism() { return omp_get_max_threads(); }

}  // namespace lemni
