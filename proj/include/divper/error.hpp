// Copyright 2026 The divperiod Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace divper {

// Every domain failure derives from Error so the CLI can map it to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// d(1) = 1 is a fixed point, so 1 never reaches 2.
class UndefinedPeriod : public Error {
 public:
  using Error::Error;
};

// A value too large to render or represent under the configured ceiling.
class TooLarge : public Error {
 public:
  using Error::Error;
};

// A request whose working set exceeds the documented practical ceiling.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace divper
