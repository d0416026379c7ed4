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

// Text snake files:
//
//   snake v1
//   n=<length> construction=<id> size=<M>
//   <initial permutation, space separated>
//   <transition indices, 60 per line, space separated>
//
// ASCII, newline-terminated.

#ifndef SNAKEBOX_SNAKE_FILE_HPP_
#define SNAKEBOX_SNAKE_FILE_HPP_

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "snakebox/snake.hpp"

namespace snakebox {

class SnakeFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SnakeFile {
  Snake snake;
  std::uint64_t declared_size = 0;  // may disagree with the transition count
};

void WriteSnakeFile(std::ostream& os, const Snake& snake);
std::string FormatSnakeFile(const Snake& snake);

// Throws SnakeFileError with a line number on malformed input.
SnakeFile ReadSnakeFile(std::istream& is);
SnakeFile ParseSnakeFile(const std::string& text);

SnakeFile LoadSnakeFile(const std::string& path);
void SaveSnakeFile(const std::string& path, const Snake& snake);

}  // namespace snakebox

#endif  // SNAKEBOX_SNAKE_FILE_HPP_
