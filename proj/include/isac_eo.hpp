// SPDX-License-Identifier: Apache-2.0
//
// isac-eo: stochastic ISAC channel simulation with environment-object reflections
// Copyright (C) 2026 The isac-eo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef ISAC_EO_HPP
#define ISAC_EO_HPP

#include "isac_eo/antenna.hpp"
#include "isac_eo/cir_assembly.hpp"
#include "isac_eo/config.hpp"
#include "isac_eo/errors.hpp"
#include "isac_eo/experiment.hpp"
#include "isac_eo/geometry.hpp"
#include "isac_eo/materials.hpp"
#include "isac_eo/metrics.hpp"
#include "isac_eo/output.hpp"
#include "isac_eo/random.hpp"
#include "isac_eo/scatterer_power.hpp"
#include "isac_eo/scenario_library.hpp"
#include "isac_eo/stochastic_clusters.hpp"
#include "isac_eo/vec3.hpp"

#endif
