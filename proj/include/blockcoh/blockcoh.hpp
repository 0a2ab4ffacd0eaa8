// Copyright 2026 The blockcoh developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header: block-coherence quantifiers of density matrices, the
// positivity-induced trade-off bounds, bound-saturating state constructors,
// block-coherence-number certification, and the qutrit feasibility region.

#ifndef BLOCKCOH_BLOCKCOH_HPP
#define BLOCKCOH_BLOCKCOH_HPP

#include "blockcoh/campaign.hpp"
#include "blockcoh/coherence.hpp"
#include "blockcoh/detection.hpp"
#include "blockcoh/errors.hpp"
#include "blockcoh/io.hpp"
#include "blockcoh/matrix_kernel.hpp"
#include "blockcoh/qutrit_region.hpp"
#include "blockcoh/states.hpp"

#endif  // BLOCKCOH_BLOCKCOH_HPP
