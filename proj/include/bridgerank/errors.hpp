// Copyright 2026 The bridgerank Authors
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

#ifndef BRIDGERANK_ERRORS_HPP
#define BRIDGERANK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bridgerank {

/// Base class for all bridgerank errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition (dimension mismatch,
/// empty dataset, invalid configuration, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text (bad TSV line, unknown config key, ...).
/// Messages carry file path and line number where available.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Filesystem-level failure (missing file, unwritable path, ...).
class IoError : public Error {
 public:
  using Error::Error;
};

/// Optimization failed, e.g. the loss became non-finite.
class TrainingError : public Error {
 public:
  using Error::Error;
};

}  // namespace bridgerank

#endif  // BRIDGERANK_ERRORS_HPP
