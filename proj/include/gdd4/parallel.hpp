// Copyright 2026 The gdd4 Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

namespace gdd4 {

// Selects between the OpenMP kernel and the serial reference path. The two
// must produce identical results; tests compare them.
enum class Exec { serial, parallel };

// Sets the OpenMP thread count used by parallel kernels (0 keeps the
// runtime default).
void set_thread_count(int threads);
int thread_count();

}  // namespace gdd4
