/*
   Copyright 2026 The salemtori Authors

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

#ifndef SALEMTORI_SALEMTORI_HPP
#define SALEMTORI_SALEMTORI_HPP

#include "salemtori/classify.hpp"
#include "salemtori/error.hpp"
#include "salemtori/factor.hpp"
#include "salemtori/matrix.hpp"
#include "salemtori/number.hpp"
#include "salemtori/poly.hpp"
#include "salemtori/roots.hpp"
#include "salemtori/salem.hpp"
#include "salemtori/sturm.hpp"
#include "salemtori/torus.hpp"
#include "salemtori/wedge.hpp"

#endif
