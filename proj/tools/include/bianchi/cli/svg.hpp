// Copyright 2026 The bianchi-floor Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "bianchi/swan.hpp"

namespace bianchi::cli {

// Projection of the floor onto C: the face discs tiled over a neighbourhood
// of F, F itself as a dashed frame and singular points as crosses.
std::string render_swan_svg(const Order& order, const SwanResult& result);

}  // namespace bianchi::cli
