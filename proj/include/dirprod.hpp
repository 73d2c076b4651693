// Copyright 2026 The dirprod Authors
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

#include "dirprod/edge_list.hpp"
#include "dirprod/error.hpp"
#include "dirprod/families.hpp"
#include "dirprod/geodesic.hpp"
#include "dirprod/graph.hpp"
#include "dirprod/hyperbolicity.hpp"
#include "dirprod/length.hpp"
#include "dirprod/odd_cycles.hpp"
#include "dirprod/parallel.hpp"
#include "dirprod/parity.hpp"
#include "dirprod/product.hpp"
#include "dirprod/qi.hpp"
#include "dirprod/reports.hpp"
#include "dirprod/serialize.hpp"
