// Copyright 2026 The mwidth Authors
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

namespace mwidth {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

/// An exponential routine was asked to run above its configured cap.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::size_t value, std::size_t cap)
      : Error(what + ": " + std::to_string(value) + " exceeds cap " +
              std::to_string(cap)),
        value_(value),
        cap_(cap) {}

  std::size_t value() const noexcept { return value_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t value_;
  std::size_t cap_;
};

/// A proven property failed at runtime. Always a bug in this library.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class MalformedInput : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

/// A decomposition handed to a constructive routine is not valid.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A branching program does not compute the function it was checked against.
class EquivalenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace mwidth
