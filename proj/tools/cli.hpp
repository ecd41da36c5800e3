/*
   Copyright 2026 The z2dc Authors

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

#ifndef Z2DC_TOOLS_CLI_HPP
#define Z2DC_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace z2dc::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInternal = 1,
    kValidation = 2,
    kCapExceeded = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace z2dc::cli

#endif
