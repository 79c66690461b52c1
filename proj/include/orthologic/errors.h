// Copyright 2026 The Orthologic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ORTHOLOGIC_ERRORS_H
#define ORTHOLOGIC_ERRORS_H

#include <stdexcept>
#include <string>
#include <vector>

namespace orthologic {

#define ORTHOLOGIC_ERROR(name, base)                                \
    struct name : public base {                                     \
        explicit name(const std::string &what) : base(what) {       \
        }                                                           \
    };

ORTHOLOGIC_ERROR(DimensionMismatch, std::invalid_argument)
ORTHOLOGIC_ERROR(InvalidDimension, std::invalid_argument)
ORTHOLOGIC_ERROR(InvalidIndex, std::out_of_range)
ORTHOLOGIC_ERROR(InvalidParameter, std::invalid_argument)
ORTHOLOGIC_ERROR(NonFinite, std::invalid_argument)
ORTHOLOGIC_ERROR(ZeroState, std::invalid_argument)
ORTHOLOGIC_ERROR(SpaceMismatch, std::invalid_argument)
ORTHOLOGIC_ERROR(PreconditionViolated, std::invalid_argument)
ORTHOLOGIC_ERROR(NotInDomain, std::domain_error)
ORTHOLOGIC_ERROR(AnchorNotInMeet, std::invalid_argument)
ORTHOLOGIC_ERROR(NotOrthonormal, std::invalid_argument)
ORTHOLOGIC_ERROR(UnknownLinearity, std::logic_error)

#undef ORTHOLOGIC_ERROR

/// Raised when a pair of morphisms breaks one of the composite-system
/// conditions. Every broken condition is listed, not just the first.
struct AxiomViolation : public std::runtime_error {
    AxiomViolation(std::vector<int> conditions, const std::string &what)
        : std::runtime_error(what), conditions(std::move(conditions)) {
    }
    bool names(int condition) const {
        for (int c : conditions) {
            if (c == condition) {
                return true;
            }
        }
        return false;
    }
    std::vector<int> conditions;
};

}  // namespace orthologic

#endif
