/*
   Copyright 2026 The aswsum Authors

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

#ifndef ASWSUM_ASWSUM_HPP
#define ASWSUM_ASWSUM_HPP

#include "arith.hpp"
#include "bounds.hpp"
#include "charsum.hpp"
#include "conductor.hpp"
#include "cyclotomic.hpp"
#include "elliptic.hpp"
#include "embedding.hpp"
#include "errors.hpp"
#include "finite_field.hpp"
#include "galois_ring.hpp"
#include "laurent.hpp"
#include "multipoly.hpp"
#include "parse.hpp"
#include "place.hpp"
#include "polynomial.hpp"
#include "projective_line.hpp"
#include "rational_function.hpp"
#include "witt.hpp"

#endif  // ASWSUM_ASWSUM_HPP
