// Copyright 2026 The zonal authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZONAL_ZONAL_HPP
#define ZONAL_ZONAL_HPP

#include "zonal/bipoly.hpp"
#include "zonal/check.hpp"
#include "zonal/factor.hpp"
#include "zonal/families.hpp"
#include "zonal/finiteness.hpp"
#include "zonal/genfun.hpp"
#include "zonal/integer.hpp"
#include "zonal/pell.hpp"
#include "zonal/ratfunc.hpp"
#include "zonal/rational.hpp"
#include "zonal/roots.hpp"
#include "zonal/serialize.hpp"
#include "zonal/tripoly.hpp"
#include "zonal/unipoly.hpp"
#include "zonal/verify.hpp"
#include "zonal/zonal_poly.hpp"

#endif  // ZONAL_ZONAL_HPP
