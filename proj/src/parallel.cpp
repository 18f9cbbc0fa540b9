/*
   Copyright 2026 The shardbench Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "shardbench/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace shardbench {

std::size_t default_thread_count() noexcept {
    if (const char* env = std::getenv(kThreadsEnvVar)) {
        char* end = nullptr;
        long value = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
    }
    int n = omp_get_max_threads();
    return n > 0 ? static_cast<std::size_t>(n) : 1;
}

}  // namespace shardbench
