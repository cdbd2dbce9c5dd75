// Copyright 2026 The stabtherm Authors
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

#ifndef STABTHERM_STABTHERM_HPP
#define STABTHERM_STABTHERM_HPP

#include "stabtherm/complex.hpp"
#include "stabtherm/duality.hpp"
#include "stabtherm/enumerate.hpp"
#include "stabtherm/errors.hpp"
#include "stabtherm/gf2.hpp"
#include "stabtherm/lattice.hpp"
#include "stabtherm/models.hpp"
#include "stabtherm/oracle.hpp"
#include "stabtherm/parallel.hpp"
#include "stabtherm/pauli.hpp"
#include "stabtherm/thermo.hpp"

#endif
