/*
 * Copyright (c) 2026, the dvl project authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
*/

#ifndef DVL_DIAG_HPP_
#define DVL_DIAG_HPP_

#include <algorithm>
#include <string>
#include <vector>

namespace dvl {

enum class Severity { Error, Warning };

/// Source span, 1-based line/column.
struct Span {
  int line = 1;
  int column = 1;
  int length = 0;
};

/// One parser or well-formedness diagnostic. `code` is a stable
/// machine-readable identifier (e.g. UNDECLARED_CHANNEL).
struct Diagnostic {
  Severity severity = Severity::Error;
  Span span;
  std::string code;
  std::string message;

  static Diagnostic error(std::string code, Span span, std::string message) {
    return Diagnostic{Severity::Error, span, std::move(code), std::move(message)};
  }
  static Diagnostic warning(std::string code, Span span, std::string message) {
    return Diagnostic{Severity::Warning, span, std::move(code), std::move(message)};
  }
};

inline bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
    return d.severity == Severity::Error;
  });
}

inline const char* severity_name(Severity s) {
  return s == Severity::Error ? "error" : "warning";
}

}  // namespace dvl

#endif  // DVL_DIAG_HPP_
