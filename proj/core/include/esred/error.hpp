// Copyright 2026 The esred Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace esred {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (JSON, FCIDUMP, command-line values).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a documented invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition of an algorithm does not hold
/// (non-positive-definite overlap, missing spectral gap, ...).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// A requested quantity lies outside the range an algorithm can reach.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (Hilbert-space dimension, mode count) is
/// exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Filesystem failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace esred
