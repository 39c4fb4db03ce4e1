// Copyright 2026 The mcbc Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

/// \file mcbc.hpp
/// \brief Umbrella header.

#pragma once

#include "mcbc/common.hpp"
#include "mcbc/instance_io.hpp"
#include "mcbc/graph.hpp"
#include "mcbc/transform.hpp"
#include "mcbc/presolve.hpp"
#include "mcbc/simplex.hpp"
#include "mcbc/lp.hpp"
#include "mcbc/separation.hpp"
#include "mcbc/heuristics.hpp"
#include "mcbc/propagate.hpp"
#include "mcbc/log.hpp"
#include "mcbc/bnc.hpp"
#include "mcbc/racing.hpp"
