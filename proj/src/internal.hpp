/* Copyright 2026 The OTN Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef OTN_SRC_INTERNAL_HPP_
#define OTN_SRC_INTERNAL_HPP_

#include <optional>

#include "otn/terms.hpp"

namespace otn::detail {

// CNF sum without validation of the result.
Ord add_parts(Ord a, Ord b);
// The b > 0 with c + b = d, if any.
std::optional<Ord> left_subtract(Ord c, Ord d);

}  // namespace otn::detail

#endif  // OTN_SRC_INTERNAL_HPP_
