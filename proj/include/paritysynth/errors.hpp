// Copyright 2026 The paritysynth Authors
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

namespace paritysynth {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sizes that must agree do not (parity length vs qubit count, graph size vs
/// polynomial size, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Bad gate operands: out of range or equal operands on a two-qubit gate.
class OperandError : public Error {
 public:
  using Error::Error;
};

/// A GF(2) matrix that must be invertible is singular.
class RankError : public Error {
 public:
  using Error::Error;
};

/// A gate kind that the operation cannot handle (e.g. H in a phase
/// polynomial extraction).
class UnsupportedGateError : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraphError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a hard size cap (statevector, brute-force oracle).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Overhead factor requested against a zero baseline.
class UndefinedOverheadError : public Error {
 public:
  using Error::Error;
};

/// A qubit mapping that is not a bijection.
class MappingError : public Error {
 public:
  using Error::Error;
};

/// Invalid argument to a graph family or spanning-tree constructor.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Command-line misuse: missing or conflicting options.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace paritysynth
