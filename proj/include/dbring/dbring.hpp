// Copyright 2026 The dbring Authors
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

#pragma once

#include "dbring/composer.hpp"
#include "dbring/cyclic_map.hpp"
#include "dbring/decoder.hpp"
#include "dbring/errors.hpp"
#include "dbring/numeric.hpp"
#include "dbring/pattern.hpp"
#include "dbring/ring_builder.hpp"
#include "dbring/ring_graph.hpp"
#include "dbring/stats.hpp"
#include "dbring/verifier.hpp"
#include "dbring/words.hpp"
