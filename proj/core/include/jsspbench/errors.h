// Copyright 2026 The jsspbench Authors
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

#ifndef JSSPBENCH_ERRORS_H_
#define JSSPBENCH_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jsspbench {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A generator or run configuration that cannot be satisfied.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// An instance of the wrong kind was handed to a kind-specific routine, e.g.
// a free-form instance to the Large-TA writer.
class KindError : public Error {
 public:
  using Error::Error;
};

// A benchmark directory that does not follow the <root>/<bench>/<sub>/ layout.
class LayoutError : public Error {
 public:
  using Error::Error;
};

// A call whose documented precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An input too large for an exhaustive routine.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& detail)
      : Error("line " + std::to_string(line) + ": " + detail),
        line_(line),
        detail_(detail) {}

  std::size_t line() const { return line_; }
  // The message without the line prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

// A schedule lacks a start time for (job, operation).
class IncompleteScheduleError : public Error {
 public:
  IncompleteScheduleError(std::size_t job, std::size_t operation)
      : Error("schedule has no start time for job " + std::to_string(job) +
              " operation " + std::to_string(operation)),
        job_(job),
        operation_(operation) {}

  std::size_t job() const { return job_; }
  std::size_t operation() const { return operation_; }

 private:
  std::size_t job_;
  std::size_t operation_;
};

}  // namespace jsspbench

#endif  // JSSPBENCH_ERRORS_H_
