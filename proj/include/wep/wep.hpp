// Copyright 2026 The wep Authors
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

#include "wep/cotree.hpp"
#include "wep/equitability.hpp"
#include "wep/error.hpp"
#include "wep/experiment.hpp"
#include "wep/graph.hpp"
#include "wep/graph_enum.hpp"
#include "wep/graph_io.hpp"
#include "wep/joint.hpp"
#include "wep/matrix.hpp"
#include "wep/oracle.hpp"
#include "wep/partition.hpp"
#include "wep/permutation.hpp"
#include "wep/rng.hpp"
#include "wep/spectral.hpp"
#include "wep/union_find.hpp"
#include "wep/weighted_view.hpp"
