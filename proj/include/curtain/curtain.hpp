// Copyright 2026 The Curtain Planner Authors
//
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

#ifndef CURTAIN__CURTAIN_HPP_
#define CURTAIN__CURTAIN_HPP_

#include "curtain/belief.hpp"
#include "curtain/bench.hpp"
#include "curtain/errors.hpp"
#include "curtain/geometry.hpp"
#include "curtain/io.hpp"
#include "curtain/loop.hpp"
#include "curtain/planner.hpp"
#include "curtain/scenegen.hpp"
#include "curtain/simulator.hpp"
#include "curtain/uncertainty.hpp"

#endif  // CURTAIN__CURTAIN_HPP_
