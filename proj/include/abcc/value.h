// Copyright 2026 The Authors.
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

#ifndef ABCC_VALUE_H_
#define ABCC_VALUE_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace abcc {

// A database constant: either a signed 64-bit integer or a text string.
// Equality compares type and content, so Int(1) != Text("1").
class Value {
 public:
  Value() : data_(std::int64_t{0}) {}

  static Value Int(std::int64_t v) { return Value(Data(v)); }
  static Value Text(std::string v) { return Value(Data(std::move(v))); }

  bool is_int() const { return std::holds_alternative<std::int64_t>(data_); }
  bool is_text() const { return std::holds_alternative<std::string>(data_); }

  std::int64_t as_int() const { return std::get<std::int64_t>(data_); }
  const std::string& as_text() const { return std::get<std::string>(data_); }

  // Canonical total order: all ints (numerically) before all texts
  // (bytewise).
  friend std::strong_ordering operator<=>(const Value& a, const Value& b) {
    if (a.data_.index() != b.data_.index()) {
      return a.data_.index() <=> b.data_.index();
    }
    if (a.is_int()) return a.as_int() <=> b.as_int();
    const int c = a.as_text().compare(b.as_text());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }
  friend bool operator==(const Value& a, const Value& b) {
    return a.data_ == b.data_;
  }

  // Renders ints as decimal and texts verbatim.
  std::string ToString() const;
  // Renders in constraint-language syntax: ints bare, texts double-quoted
  // with `"` and `\` escaped.
  std::string ToLiteral() const;

  std::size_t Hash() const;

 private:
  using Data = std::variant<std::int64_t, std::string>;
  explicit Value(Data d) : data_(std::move(d)) {}
  Data data_;
};

using Tuple = std::vector<Value>;

struct ValueHash {
  std::size_t operator()(const Value& v) const { return v.Hash(); }
};

struct TupleHash {
  std::size_t operator()(const Tuple& t) const;
};

}  // namespace abcc

#endif  // ABCC_VALUE_H_
