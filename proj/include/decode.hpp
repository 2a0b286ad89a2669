// Copyright 2026 The DeCoDe Authors
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

#include "decode/cluster_tree.hpp"
#include "decode/components.hpp"
#include "decode/density.hpp"
#include "decode/error.hpp"
#include "decode/evaluation.hpp"
#include "decode/graph.hpp"
#include "decode/io.hpp"
#include "decode/layers.hpp"
#include "decode/modal_clustering.hpp"
#include "decode/partition.hpp"
#include "decode/pipeline.hpp"
#include "decode/stats.hpp"
#include "decode/union_find.hpp"
