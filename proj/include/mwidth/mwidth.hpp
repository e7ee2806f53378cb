// Copyright 2026 The mwidth Authors
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

#include "mwidth/errors.hpp"
#include "mwidth/graph.hpp"
#include "mwidth/matching.hpp"
#include "mwidth/width.hpp"
#include "mwidth/instances.hpp"
#include "mwidth/cnf.hpp"
#include "mwidth/decomposition.hpp"
#include "mwidth/dimacs.hpp"
#include "mwidth/pace.hpp"
#include "mwidth/branching_program.hpp"
#include "mwidth/obdd.hpp"
#include "mwidth/lbound.hpp"
