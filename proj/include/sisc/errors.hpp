// Copyright 2026 The sisc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SISC_ERRORS_HPP
#define SISC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sisc {

// Input data could not be parsed or written (file formats, WAV, CSV).
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// A spectrum expected to be conjugate-symmetric was not.
struct SymmetryError : std::runtime_error {
  explicit SymmetryError(const std::string& what) : std::runtime_error(what) {}
};

// Basis update requested with no information to update from.
struct NoUpdateError : std::runtime_error {
  explicit NoUpdateError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sisc

#endif  // SISC_ERRORS_HPP
