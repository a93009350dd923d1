/*
   Copyright 2026 The selfdual Authors

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

#ifndef SELFDUAL_SELFDUAL_HPP
#define SELFDUAL_SELFDUAL_HPP

#include "codes.hpp"
#include "constructions.hpp"
#include "cyclotomic.hpp"
#include "error.hpp"
#include "field_algorithms.hpp"
#include "galois_field.hpp"
#include "matrix.hpp"
#include "number_theory.hpp"
#include "polynomial.hpp"
#include "quadratic_extension.hpp"
#include "serialization.hpp"
#include "table.hpp"

#endif
