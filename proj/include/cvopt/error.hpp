// Copyright 2026 the cvopt authors
//
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

#include <stdexcept>
#include <string>

namespace cvopt {

// Base class of everything the library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct EmptyInputError : Error { using Error::Error; };
struct LengthError : Error { using Error::Error; };
struct DegenerateDataError : Error { using Error::Error; };
struct ParameterError : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct NotSurjectiveError : Error { using Error::Error; };
struct ContractViolation : Error { using Error::Error; };
struct UndefinedScoreError : Error { using Error::Error; };
struct MissingOverlapError : Error { using Error::Error; };
struct GenerationFailure : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace cvopt
