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

#ifndef DVL_VALUE_HPP_
#define DVL_VALUE_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dvl {

/// Runtime values. Booleans are 0/1, enumeration members are their
/// declared index, integers are themselves.
using Value = std::int64_t;

enum class DomainKind { Bool, IntRange, Enum };

/// A finite value domain. Every declared variable and channel carries one;
/// finiteness is what lets the explorer enumerate states exhaustively.
struct Domain {
  DomainKind kind = DomainKind::Bool;
  Value lo = 0;  // IntRange only
  Value hi = 1;  // IntRange only
  std::vector<std::string> members;  // Enum only

  static Domain boolean() { return Domain{DomainKind::Bool, 0, 1, {}}; }

  static Domain int_range(Value lo, Value hi) {
    if (lo > hi) throw std::invalid_argument("empty integer range domain");
    return Domain{DomainKind::IntRange, lo, hi, {}};
  }

  static Domain enumeration(std::vector<std::string> members) {
    if (members.empty()) throw std::invalid_argument("empty enum domain");
    Domain d{DomainKind::Enum, 0, static_cast<Value>(members.size()) - 1, {}};
    d.members = std::move(members);
    return d;
  }

  std::size_t size() const {
    switch (kind) {
      case DomainKind::Bool: return 2;
      case DomainKind::IntRange: return static_cast<std::size_t>(hi - lo + 1);
      case DomainKind::Enum: return members.size();
    }
    return 0;
  }

  Value min() const { return kind == DomainKind::IntRange ? lo : 0; }
  Value max() const {
    switch (kind) {
      case DomainKind::Bool: return 1;
      case DomainKind::IntRange: return hi;
      case DomainKind::Enum: return static_cast<Value>(members.size()) - 1;
    }
    return 0;
  }

  bool contains(Value v) const { return v >= min() && v <= max(); }

  /// d covers e iff every value of e is a value of d. Used for the
  /// Dom(v) >= Dom(c) check on receive targets.
  bool covers(const Domain& other) const {
    return min() <= other.min() && max() >= other.max();
  }

  bool operator==(const Domain& other) const {
    return kind == other.kind && min() == other.min() && max() == other.max() &&
           members == other.members;
  }
};

}  // namespace dvl

#endif  // DVL_VALUE_HPP_
