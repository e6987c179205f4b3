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

#ifndef BRIBELAB_TOOLS_SVG_PLOT_HPP_
#define BRIBELAB_TOOLS_SVG_PLOT_HPP_

#include <string>
#include <vector>

#include "sweep.hpp"

namespace bribelab::cli {

// Two stacked panels against the swept parameter: success probability on
// [0, 1], and expected corruption cost in units of phi*gamma*R. Invalid rows
// leave gaps in the curves.
std::string render_sweep_svg(const std::vector<SweepRow>& rows);

}  // namespace bribelab::cli

#endif  // BRIBELAB_TOOLS_SVG_PLOT_HPP_
