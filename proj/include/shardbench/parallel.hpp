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

#pragma once

#include <cstddef>

namespace shardbench {

/// Environment variable capping analysis parallelism; 0 or unset means auto.
inline constexpr const char* kThreadsEnvVar = "SHARDBENCH_THREADS";

/// Worker count for the parallel kernels: SHARDBENCH_THREADS if set to a
/// positive integer, otherwise the OpenMP default.
std::size_t default_thread_count() noexcept;

}  // namespace shardbench
