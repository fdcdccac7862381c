// Copyright 2026 the cvopt authors
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

#pragma once

#include "cvopt/bench.hpp"
#include "cvopt/cvi/evaluator.hpp"
#include "cvopt/cvi/indices.hpp"
#include "cvopt/cvi/spec.hpp"
#include "cvopt/dataset.hpp"
#include "cvopt/error.hpp"
#include "cvopt/eval.hpp"
#include "cvopt/geometry.hpp"
#include "cvopt/nngraph.hpp"
#include "cvopt/optim.hpp"
#include "cvopt/owa.hpp"
#include "cvopt/partition.hpp"
#include "cvopt/rng.hpp"
#include "cvopt/stats.hpp"
