/*
 * Copyright (c) 2026 the rdfbench authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <string>
#include <vector>

namespace rdfbench::namedata {

// Fixed word material compiled in from data/*.txt; the lists are part of
// the deterministic-output contract, so they are versioned with the code.
const std::vector<std::string>& first_names();
const std::vector<std::string>& last_names();
const std::vector<std::string>& publishers();
const std::vector<std::string>& words();

}  // namespace rdfbench::namedata
