// Copyright 2026 The SQNN Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqnn {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A requested register or device exceeds what can be simulated or hosted.
class CapacityError : public Error {
  public:
    using Error::Error;
};

/// A value violates a numeric or semantic precondition (non-unitary matrix,
/// non-finite angle, zero-norm vector, ...).
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// A qubit or parameter index is outside its valid range.
class IndexError : public Error {
  public:
    using Error::Error;
};

/// Two containers that must agree in size or geometry do not.
class ShapeError : public Error {
  public:
    using Error::Error;
};

/// No tiling of the image satisfies the requested device capacities.
class PartitionError : public Error {
  public:
    using Error::Error;
};

/// A configuration field is missing or invalid. `path()` names the field.
class ConfigError : public Error {
  public:
    ConfigError(std::string path, const std::string &message)
        : Error(path + ": " + message), path_(std::move(path)) {}

    [[nodiscard]] const std::string &path() const noexcept { return path_; }

  private:
    std::string path_;
};

/// Input data is missing or unreadable.
class DataError : public Error {
  public:
    using Error::Error;
};

/// A binary input file is malformed. `offset()` is the byte position at which
/// the problem was detected.
class FormatError : public DataError {
  public:
    FormatError(const std::string &message, std::size_t offset)
        : DataError(message + " (at byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

  private:
    std::size_t offset_;
};

/// A checkpoint failed to parse or its content hash does not match.
class CheckpointError : public Error {
  public:
    using Error::Error;
};

} // namespace sqnn
