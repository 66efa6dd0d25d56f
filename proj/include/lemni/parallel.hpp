#pragma once

namespace lemni {

/// Number of worker threads used by the data-parallel kernels. Results never
/// depend on this value.
void set_parallelism(int threads);
int parallelism();

}  // namespace lemni
