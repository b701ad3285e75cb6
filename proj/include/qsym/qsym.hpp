// Copyright 2026 The qsym Authors
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


#pragma once

/// @file qsym.hpp
/// Umbrella header for the qsym library.

#include "qsym/algebra.hpp"
#include "qsym/backend.hpp"
#include "qsym/basis.hpp"
#include "qsym/coproduct.hpp"
#include "qsym/decompose.hpp"
#include "qsym/dense.hpp"
#include "qsym/dicke.hpp"
#include "qsym/exact_linalg.hpp"
#include "qsym/hecke.hpp"
#include "qsym/metric.hpp"
#include "qsym/qscalar.hpp"
#include "qsym/report.hpp"
#include "qsym/sparse.hpp"
#include "qsym/suites.hpp"
#include "qsym/symgroup.hpp"
