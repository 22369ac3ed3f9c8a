/*
 * Copyright 2026 The colgame Authors
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

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace colgame {

/**
 * The regression suite of concrete game-value claims (T1..T10). Each claim
 * is exact; a claim passes only if every check holds and it finished inside
 * its wall-clock budget.
 */
struct ClaimResult {
    std::string id;
    std::string title;
    bool checks_passed = false;
    double seconds = 0;
    double budget_seconds = 0;
    std::vector<std::string> details;

    bool passed() const { return checks_passed && seconds < budget_seconds; }
};

std::vector<std::string> claim_ids();

/// Throws RulesError for an unknown id.
ClaimResult run_claim(std::string_view id);

/// "PASS T1 title (0.01 s / budget 10 s)"
std::string summary_line(const ClaimResult& r);

} // namespace colgame
