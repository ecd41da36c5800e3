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

#ifndef Z2DC_VERIFY_HPP
#define Z2DC_VERIFY_HPP

#include <string>
#include <vector>

#include "z2dc/code.hpp"

namespace z2dc {

struct PropertyResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    /// Test hook: perturb the closed-form dual triple before checking it. Dual-dependent
    /// properties must then fail.
    bool corrupt_dual = false;
};

/// Structural check of a standard-form matrix against its block template.
bool standard_form_matches_template(const StandardForm& form);

/**
 * Runs every structural and duality property on one code against the brute-force oracle.
 * Requires n <= 22 (throws CapExceededError otherwise).
 */
std::vector<PropertyResult> verify_instance(const DoubleCyclicCode& code, const VerifyOptions& options = {});

}  // namespace z2dc

#endif
