// Copyright 2026 The snakebox Authors.
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

#include "snakebox/snake_file.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace snakebox {
namespace {

constexpr int kPerLine = 60;

[[noreturn]] void Fail(int line, const std::string& what) {
  throw SnakeFileError("line " + std::to_string(line) + ": " + what);
}

template <typename T>
T ParseNumber(std::string_view token, int line) {
  T value{};
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    Fail(line, "expected a number, got '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string> Tokens(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

std::string_view ValueOf(const std::string& token, std::string_view key, int line) {
  if (token.size() <= key.size() + 1 || token.compare(0, key.size(), key) != 0 ||
      token[key.size()] != '=') {
    Fail(line, "expected " + std::string(key) + "=<value>, got '" + token + "'");
  }
  return std::string_view(token).substr(key.size() + 1);
}

}  // namespace

void WriteSnakeFile(std::ostream& os, const Snake& snake) {
  os << "snake v1\n"
     << "n=" << snake.length << " construction=" << snake.construction << " size=" << snake.size()
     << '\n';
  for (int k = 1; k <= snake.initial.size(); ++k) os << (k > 1 ? " " : "") << snake.initial(k);
  os << '\n';
  for (std::size_t k = 0; k < snake.transitions.size(); ++k) {
    os << snake.transitions[k].index;
    os << ((k + 1) % kPerLine == 0 || k + 1 == snake.transitions.size() ? '\n' : ' ');
  }
}

std::string FormatSnakeFile(const Snake& snake) {
  std::ostringstream os;
  WriteSnakeFile(os, snake);
  return os.str();
}

SnakeFile ReadSnakeFile(std::istream& is) {
  std::string line;
  int number = 1;
  if (!std::getline(is, line) || line != "snake v1") Fail(number, "expected 'snake v1'");

  ++number;
  if (!std::getline(is, line)) Fail(number, "missing header");
  const auto header = Tokens(line);
  if (header.size() != 3) Fail(number, "expected n=, construction= and size=");
  SnakeFile file;
  file.snake.length = ParseNumber<int>(ValueOf(header[0], "n", number), number);
  file.snake.construction = std::string(ValueOf(header[1], "construction", number));
  file.declared_size = ParseNumber<std::uint64_t>(ValueOf(header[2], "size", number), number);

  ++number;
  if (!std::getline(is, line)) Fail(number, "missing initial permutation");
  std::vector<int> initial;
  for (const auto& t : Tokens(line)) initial.push_back(ParseNumber<int>(t, number));
  if (static_cast<int>(initial.size()) != file.snake.length) {
    Fail(number, "initial permutation has " + std::to_string(initial.size()) + " entries, header says " +
                     std::to_string(file.snake.length));
  }
  try {
    file.snake.initial = Permutation(initial);
  } catch (const std::exception& e) {
    Fail(number, e.what());
  }

  while (std::getline(is, line)) {
    ++number;
    for (const auto& t : Tokens(line)) file.snake.transitions.push_back({ParseNumber<int>(t, number)});
  }
  return file;
}

SnakeFile ParseSnakeFile(const std::string& text) {
  std::istringstream is(text);
  return ReadSnakeFile(is);
}

SnakeFile LoadSnakeFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SnakeFileError("cannot open " + path);
  return ReadSnakeFile(in);
}

void SaveSnakeFile(const std::string& path, const Snake& snake) {
  std::ofstream out(path);
  if (!out) throw SnakeFileError("cannot write " + path);
  WriteSnakeFile(out, snake);
  if (!out) throw SnakeFileError("failed writing " + path);
}

}  // namespace snakebox
