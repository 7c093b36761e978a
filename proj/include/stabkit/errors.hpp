// Copyright 2026 The stabkit authors
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

namespace stabkit {

// Parameter outside its documented range. Messages name the violated
// inequality so callers can surface it verbatim.
class param_error : public std::invalid_argument {
 public:
  explicit param_error(const std::string& what) : std::invalid_argument(what) {}
};

// Problem size exceeds a configured cap. Messages carry a remediation hint.
class cap_error : public std::runtime_error {
 public:
  explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed file or stream content.
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stabkit
