/*
   Copyright 2026 The slicereg authors

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

#ifndef SLICEREG_SLICEREG_HPP
#define SLICEREG_SLICEREG_HPP

#include "slicereg/error.hpp"
#include "slicereg/expr.hpp"
#include "slicereg/quaternion.hpp"
#include "slicereg/real_poly.hpp"
#include "slicereg/slice_laws.hpp"
#include "slicereg/slice_poly.hpp"
#include "slicereg/star_power.hpp"
#include "slicereg/tolerance.hpp"
#include "slicereg/zero_structure.hpp"

#endif
