// Copyright 2026 The Carmichael Toolkit Authors
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

namespace carmichael {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument outside the mathematical domain of an operation (modulus 0, p not dividing n, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

class CrtInconsistentError : public Error {
 public:
  using Error::Error;
};

/// Input rejected by a constructor or validator; the message names the violated condition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A configured resource ceiling (memory, enumeration count, search bound) would be exceeded.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// A result failed a cross-check that the mathematics guarantees; indicates a bug.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace carmichael
