// Copyright 2026 The foldkappa Authors
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

#ifndef FOLDKAPPA_ERROR_HPP_
#define FOLDKAPPA_ERROR_HPP_

#include <stdexcept>

namespace foldkappa {

// Argument errors are std::invalid_argument, range errors std::out_of_range.
// A request that would need more memory or vertices than allowed raises this.
class ResourceExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace foldkappa

#endif  // FOLDKAPPA_ERROR_HPP_
