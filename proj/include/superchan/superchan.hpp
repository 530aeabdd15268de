// Copyright 2026 The superchan Authors
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

#ifndef SUPERCHAN_SUPERCHAN_HPP
#define SUPERCHAN_SUPERCHAN_HPP

#include "superchan/capacity.hpp"
#include "superchan/channels.hpp"
#include "superchan/json_io.hpp"
#include "superchan/optimize.hpp"
#include "superchan/random.hpp"
#include "superchan/supermaps.hpp"
#include "superchan/tensor_core.hpp"
#include "superchan/vacuum.hpp"

#endif  // SUPERCHAN_SUPERCHAN_HPP
