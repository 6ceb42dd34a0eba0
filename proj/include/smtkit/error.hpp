// error.hpp
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace smtkit {

// Exit-code convention: 0 success, 1 usage/config, 2 data, 3 internal.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const { return 3; }
};

// Bad flags, malformed config files, missing resources. Exit 1.
class ConfigError : public Error {
public:
  using Error::Error;
  int exit_code() const override { return 1; }
};

// Malformed input data (corpora, trees, model files). Exit 2.
class DataError : public Error {
public:
  using Error::Error;
  int exit_code() const override { return 2; }
};

// Invalid byte sequence in input text.
class DecodeError : public DataError {
public:
  DecodeError(const std::string& what, std::size_t byte_offset)
      : DataError(what + " at byte offset " + std::to_string(byte_offset)),
        byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

private:
  std::size_t byte_offset_;
};

// Syntax error in structured text (bracketed trees, rule files).
class ParseError : public DataError {
public:
  ParseError(const std::string& what, std::size_t offset)
      : DataError(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

// A violated internal invariant. Exit 3.
class InternalError : public Error {
public:
  using Error::Error;
  int exit_code() const override { return 3; }
};

}  // namespace smtkit
