/*
Copyright 2026 The lodgraph Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace lodgraph {

enum class ErrorCode {
  InvalidArgument,
  Io,
  Parse,
  Integrity,
  NotFound,
  Format,
  Acquire,
  Undefined,
  Network,
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

// Base of every exception thrown by the core. The C API maps the code onto
// lg_status and keeps the message for lg_last_error().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// A measure that has no value on the given input (empty graph, zero mean...).
class UndefinedMeasure : public Error {
 public:
  explicit UndefinedMeasure(const std::string& what)
      : Error(ErrorCode::Undefined, what) {}
};

// Failure while turning a source into an N-Triples stream. `stage` names the
// step that failed (download, decompress, extract, convert, scan).
class AcquireError : public Error {
 public:
  AcquireError(std::string stage, const std::string& what)
      : Error(ErrorCode::Acquire, stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace lodgraph
