// Copyright 2026 The photonsim Authors
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

#include "photonsim/backends.hpp"
#include "photonsim/certification.hpp"
#include "photonsim/circuit.hpp"
#include "photonsim/circuit_io.hpp"
#include "photonsim/distribution.hpp"
#include "photonsim/error.hpp"
#include "photonsim/fock.hpp"
#include "photonsim/gate_analysis.hpp"
#include "photonsim/logical.hpp"
#include "photonsim/matrix.hpp"
#include "photonsim/matrix_io.hpp"
#include "photonsim/optimize.hpp"
#include "photonsim/permanent.hpp"
#include "photonsim/postselect.hpp"
#include "photonsim/random.hpp"
#include "photonsim/reference_circuits.hpp"
#include "photonsim/state_vector.hpp"
#include "photonsim/time_bin.hpp"
#include "photonsim/vqe.hpp"
