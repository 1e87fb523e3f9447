// Copyright 2026 The rellat Authors
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

#ifndef RELLAT_ERROR_HPP_
#define RELLAT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace rellat {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed relation, universe, or file contents.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Two operands were built against different universes.
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// A term mentions a name the assignment does not bind.
class UnboundName : public Error {
 public:
  explicit UnboundName(const std::string& name)
      : Error("unbound name '" + name + "'"), name_(name) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class UnknownLaw : public Error {
 public:
  explicit UnknownLaw(const std::string& id)
      : Error("unknown law '" + id + "'") {}
};

/// A search or enumeration would exceed its configured bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// A declared constraint does not hold for the supplied relations.
class ConstraintViolation : public Error {
 public:
  ConstraintViolation(const std::string& constraint, const std::string& detail)
      : Error("constraint " + constraint + " violated: " + detail),
        constraint_(constraint) {}

  const std::string& constraint() const { return constraint_; }

 private:
  std::string constraint_;
};

/// The instance generator cannot satisfy a constraint set by construction.
class UnsatisfiableConstraints : public Error {
 public:
  using Error::Error;
};

/// A rewrite failed semantic verification and was not emitted.
class UnverifiedRewrite : public Error {
 public:
  using Error::Error;
};

}  // namespace rellat

#endif  // RELLAT_ERROR_HPP_
