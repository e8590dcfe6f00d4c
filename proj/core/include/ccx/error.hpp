// Copyright 2026 The ccxlab Authors
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

#ifndef CCX_ERROR_HPP
#define CCX_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ccx {

/// Coarse error buckets. The CLI maps them onto process exit codes.
enum class ErrorCategory {
    Usage,      // bad arguments or preconditions supplied by the caller
    Schema,     // malformed input files (calibration JSON, circuit text, datasets)
    Numerical,  // a linear-algebra or physical invariant failed
    Io,         // filesystem trouble
};

std::string_view category_name(ErrorCategory c) noexcept;

/// Base class for all library errors. `code` is a stable machine-readable
/// tag such as "DimensionMismatch" or "CoherenceViolation".
class Error : public std::runtime_error {
  public:
    Error(ErrorCategory category, std::string code, const std::string &message)
        : std::runtime_error(message), category_(category), code_(std::move(code)) {}

    ErrorCategory category() const noexcept { return category_; }
    const std::string &code() const noexcept { return code_; }

  private:
    ErrorCategory category_;
    std::string code_;
};

inline Error usage_error(std::string code, const std::string &msg) {
    return Error(ErrorCategory::Usage, std::move(code), msg);
}
inline Error schema_error(std::string code, const std::string &msg) {
    return Error(ErrorCategory::Schema, std::move(code), msg);
}
inline Error numerical_error(std::string code, const std::string &msg) {
    return Error(ErrorCategory::Numerical, std::move(code), msg);
}
inline Error io_error(const std::string &msg) {
    return Error(ErrorCategory::Io, "IoError", msg);
}

/// Parse failure in the circuit text format. `line` is 1-based.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string &reason)
        : Error(ErrorCategory::Schema, "ParseError",
                "line " + std::to_string(line) + ": " + reason),
          line_(line), reason_(reason) {}

    std::size_t line() const noexcept { return line_; }
    const std::string &reason() const noexcept { return reason_; }

  private:
    std::size_t line_;
    std::string reason_;
};

}  // namespace ccx

#endif  // CCX_ERROR_HPP
