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

// Batch command-line front end. Kept in the library so tests can drive it
// without spawning processes.

#ifndef OTN_CLI_HPP_
#define OTN_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace otn {

// args excludes the program name. Returns the process exit code: 0 on
// success, 1 when a check or report fails, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace otn

#endif  // OTN_CLI_HPP_
