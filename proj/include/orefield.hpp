/*
   Copyright 2026 The orefield Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef OREFIELD_OREFIELD_HPP
#define OREFIELD_OREFIELD_HPP

// Everything at once.

#include "orefield/basefield.hpp"
#include "orefield/catalog.hpp"
#include "orefield/central.hpp"
#include "orefield/error.hpp"
#include "orefield/expr.hpp"
#include "orefield/extend.hpp"
#include "orefield/ground.hpp"
#include "orefield/group.hpp"
#include "orefield/irreducible.hpp"
#include "orefield/laurent.hpp"
#include "orefield/linalg.hpp"
#include "orefield/random.hpp"
#include "orefield/rational.hpp"
#include "orefield/report.hpp"
#include "orefield/scenario.hpp"
#include "orefield/skewfrac.hpp"
#include "orefield/skewpoly.hpp"
#include "orefield/suites.hpp"
#include "orefield/tower.hpp"

#endif  // OREFIELD_OREFIELD_HPP
