#include "preproj/parallel.hpp"

#include <omp.h>

namespace preproj {

int worker_threads() { return omp_get_max_threads(); }

}  // namespace preproj
