/*
Copyright 2026 The bddv Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef BDDV_BDDV_HPP_
#define BDDV_BDDV_HPP_

// Everything except the CLI layer.
#include "bddv/analysis.hpp"
#include "bddv/branching.hpp"
#include "bddv/dimacs.hpp"
#include "bddv/graph.hpp"
#include "bddv/oracle.hpp"
#include "bddv/search.hpp"
#include "bddv/structures.hpp"
#include "bddv/verify.hpp"

#endif  // BDDV_BDDV_HPP_
