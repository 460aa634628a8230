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

#include "abcc/value.h"

#include <string>

namespace abcc {

std::string Value::ToString() const {
  if (is_int()) return std::to_string(as_int());
  return as_text();
}

std::string Value::ToLiteral() const {
  if (is_int()) return std::to_string(as_int());
  std::string out = "\"";
  for (const char c : as_text()) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::size_t Value::Hash() const {
  if (is_int()) return std::hash<std::int64_t>()(as_int()) * 31 + 1;
  return std::hash<std::string>()(as_text()) * 31 + 2;
}

std::size_t TupleHash::operator()(const Tuple& t) const {
  std::size_t h = t.size();
  for (const Value& v : t) {
    h ^= v.Hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace abcc
