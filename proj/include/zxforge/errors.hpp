// Copyright 2026 The zxforge authors
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

namespace zxforge {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// qcore
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};
class ShapeError : public Error {
 public:
  using Error::Error;
};
class NonNormalized : public Error {
 public:
  using Error::Error;
};
class BadProbabilities : public Error {
 public:
  using Error::Error;
};
class NotHermitian : public Error {
 public:
  using Error::Error;
};
class NotPositive : public Error {
 public:
  using Error::Error;
};

// circuits / diagram ingestion
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line)
      : Error("parse error at line " + std::to_string(line) + ": " + msg),
        line_number(line) {}
  explicit ParseError(const std::string& msg) : Error(msg), line_number(0) {}
  int line_number;
};
class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};
class UnsupportedGate : public Error {
 public:
  using Error::Error;
};
class TooLarge : public Error {
 public:
  using Error::Error;
};

// zx diagrams and rewriting
class MalformedDiagram : public Error {
 public:
  using Error::Error;
};
class NoMatch : public Error {
 public:
  using Error::Error;
};
class SoundnessViolation : public Error {
 public:
  using Error::Error;
};
class StepLimitExceeded : public Error {
 public:
  using Error::Error;
};
class TypeMismatch : public Error {
 public:
  using Error::Error;
};

// information geometry
class DegenerateSupport : public Error {
 public:
  using Error::Error;
};
class ZeroState : public Error {
 public:
  using Error::Error;
};

}  // namespace zxforge
