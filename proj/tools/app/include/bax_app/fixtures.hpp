/*
   Copyright 2026 The bax Authors

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

#pragma once

#include "bax/matrix.hpp"
#include "bax/scalar.hpp"

namespace bax::app {

/// Published 4x4 spin-1/2 R(mu) over Q(s).
ParamMatrix reference_spin_half();

/// Published 9x9 spin-1 R(mu) over Q(s).
ParamMatrix reference_spin_one();

/// Published 9x9 Taft R(mu) on V_{3,l} (x) V_{3,l}, with q the given primitive
/// root of unity; normalized so the (1,1) entry is 1.
ParamMatrix reference_taft(int l, const Scalar& q);

}  // namespace bax::app
