// Copyright 2026 The mwidth Authors
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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mwidth/mwidth.hpp"

namespace mwidth::cli {

using Json = nlohmann::ordered_json;

/// Exit statuses shared by every command.
enum ExitCode : int { kOk = 0, kFalsified = 1, kUsage = 2 };

/// Bad input detected by the command layer (unreadable file, bad flag
/// combination). Maps to kUsage.
class InputError : public Error {
 public:
  using Error::Error;
};

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  return in;
}

template <class Reader>
auto read_file(const std::string& path, Reader reader) {
  std::ifstream in = open_input(path);
  try {
    return reader(in);
  } catch (const ParseError& e) {
    const std::string where = e.line() ? ":" + std::to_string(e.line()) : "";
    throw ParseError(path + where + ": " + e.what(), e.line());
  }
}

inline Graph load_graph(const std::string& path) {
  return read_file(path, [](std::istream& in) { return dimacs::read_graph(in); });
}

inline Cnf load_cnf(const std::string& path) {
  return read_file(path, [](std::istream& in) { return dimacs::read_cnf(in); });
}

inline BranchingProgram load_program(const std::string& path) {
  return read_file(path, [](std::istream& in) { return bptext::read(in); });
}

inline pace::ParsedTd load_td(const std::string& path) {
  return read_file(path, [](std::istream& in) { return pace::read_td(in); });
}

/// Writes `text` to `path`, or to stdout when `path` is empty.
inline void emit_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out.flush()) throw InputError("write to '" + path + "' failed");
}

/// Parses a 1-based permutation given as comma- or space-separated ids.
inline Ordering parse_order(const std::string& text, std::size_t expected) {
  std::string spaced = text;
  for (char& ch : spaced) {
    if (ch == ',') ch = ' ';
  }
  std::istringstream in(spaced);
  std::vector<Vertex> seq;
  long id = 0;
  while (in >> id) {
    if (id < 1) throw InputError("order entries are 1-based, got " + std::to_string(id));
    seq.push_back(Vertex(id - 1));
  }
  if (!in.eof()) throw InputError("order must list integers");
  if (seq.size() != expected) {
    throw InputError("order lists " + std::to_string(seq.size()) + " entries, expected " +
                     std::to_string(expected));
  }
  return Ordering(std::move(seq));
}

inline Json one_based(const std::vector<Vertex>& ids) {
  Json out = Json::array();
  for (Vertex v : ids) out.push_back(v + 1);
  return out;
}

inline std::string join_one_based(const std::vector<Vertex>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(ids[i] + 1);
  }
  return s;
}

template <class Writer, class Value>
std::string render(Writer writer, const Value& value) {
  std::ostringstream out;
  writer(out, value);
  return out.str();
}

}  // namespace mwidth::cli
