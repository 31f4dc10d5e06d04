// Copyright 2026 The squeezekit Authors
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

#include "squeezekit/errors.hpp"
#include "squeezekit/optimize.hpp"
#include "squeezekit/output.hpp"
#include "squeezekit/quantum_core.hpp"
#include "squeezekit/reduction.hpp"
#include "squeezekit/serialization.hpp"
#include "squeezekit/squeezing.hpp"
#include "squeezekit/state_family.hpp"
#include "squeezekit/sweep.hpp"
