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

#include <stdexcept>
#include <string>

namespace colgame {

/// Malformed graph input. The message names the offending line where possible.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A request that violates the game rules or a precondition of an operation.
class RulesError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Input exceeds a fixed capacity bound (vertex count, palette size).
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// The solver ran out of its memory or time allowance. Never a wrong answer.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace colgame
