// Copyright 2026 The ccxlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CCX_PARALLEL_HPP
#define CCX_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace ccx {

/// 0 means one worker per hardware thread.
std::size_t resolve_threads(std::size_t requested) noexcept;

/// Calls fn(i) for every i in [0, n) on up to `threads` workers. Tasks must
/// write to disjoint outputs. The first exception thrown by any task is
/// rethrown after all workers stop.
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)> &fn);

}  // namespace ccx

#endif  // CCX_PARALLEL_HPP
