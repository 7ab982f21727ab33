// Copyright 2026 The adjprobe Authors.
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

#ifndef ADJPROBE_ERRORS_H_
#define ADJPROBE_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adjprobe {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A document could not be parsed. Carries the 1-based line (or record) number
// and the offending field when known.
class FormatError : public Error {
 public:
  FormatError(std::size_t line, std::string field, const std::string& message)
      : Error("line " + std::to_string(line) + ", field '" + field +
              "': " + message),
        line_(line),
        field_(std::move(field)) {}

  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

// Parsed data violates a domain invariant. Names the offending surface.
class ValidationError : public Error {
 public:
  ValidationError(std::string surface, const std::string& message)
      : Error(message + ": '" + surface + "'"), surface_(std::move(surface)) {}

  const std::string& surface() const { return surface_; }

 private:
  std::string surface_;
};

// Vector arithmetic precondition failure (dimension clash, zero vector).
class GeometryError : public Error {
 public:
  using Error::Error;
};

// A caller broke an operation's contract (wrong phrase shape, bad option).
class ContractError : public Error {
 public:
  using Error::Error;
};

// No embedding is available for a text.
class MissingEmbeddingError : public Error {
 public:
  explicit MissingEmbeddingError(std::string text)
      : Error("no embedding for text '" + text + "'"), text_(std::move(text)) {}

  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

// Remote endpoint unreachable or kept failing after retries.
class TransportError : public Error {
 public:
  using Error::Error;
};

// Remote endpoint answered, but the answer breaks the wire protocol.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

// Embedding data is unusable (non-finite components, dimension clash).
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace adjprobe

#endif  // ADJPROBE_ERRORS_H_
