// Copyright 2026 The bribelab Authors
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

#include "bribelab/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace bribelab {

unsigned resolve_thread_count(unsigned requested) {
  unsigned threads = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("BRIBELAB_THREADS")) {
    unsigned limit = 0;
    const char* end = cap + std::strlen(cap);
    const auto [ptr, ec] = std::from_chars(cap, end, limit);
    if (ec == std::errc() && ptr == end && limit > 0) threads = std::min(threads, limit);
  }
  return threads;
}

}  // namespace bribelab
