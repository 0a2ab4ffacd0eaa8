// Copyright 2026 The blockcoh developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BLOCKCOH_ERRORS_HPP
#define BLOCKCOH_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace blockcoh {

// Every failure carries a stable kind() string so callers (and the CLI) can
// name the violated invariant without parsing the message text.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define BLOCKCOH_DEFINE_ERROR(name)                                   \
  struct name : Error {                                               \
    explicit name(const std::string& msg) : Error(#name, msg) {}      \
  }

BLOCKCOH_DEFINE_ERROR(InvalidMatrix);
BLOCKCOH_DEFINE_ERROR(InvalidOrder);
BLOCKCOH_DEFINE_ERROR(NotHermitian);
BLOCKCOH_DEFINE_ERROR(NotPSD);
BLOCKCOH_DEFINE_ERROR(TraceNotOne);
BLOCKCOH_DEFINE_ERROR(InvalidProbability);
BLOCKCOH_DEFINE_ERROR(UnsupportedBlock);
BLOCKCOH_DEFINE_ERROR(DimensionMismatch);
BLOCKCOH_DEFINE_ERROR(SameBlock);
BLOCKCOH_DEFINE_ERROR(InvalidRank);
BLOCKCOH_DEFINE_ERROR(InvalidBCN);
BLOCKCOH_DEFINE_ERROR(WeightMismatch);
BLOCKCOH_DEFINE_ERROR(NotNormalized);
BLOCKCOH_DEFINE_ERROR(DegenerateWeight);
BLOCKCOH_DEFINE_ERROR(InternalInconsistency);
BLOCKCOH_DEFINE_ERROR(InvalidConfig);
BLOCKCOH_DEFINE_ERROR(ParseError);

#undef BLOCKCOH_DEFINE_ERROR

}  // namespace blockcoh

#endif  // BLOCKCOH_ERRORS_HPP
