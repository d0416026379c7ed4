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

#include "snakebox/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace snakebox {
namespace {

void CheckLabel(int n, ClassLabel label) {
  const int length = LengthFor(n);
  if (label.x == label.y || label.x < 1 || label.y < 1 || label.x > length || label.y > length) {
    throw std::invalid_argument("invalid class label " + label.ToString());
  }
}

}  // namespace

int ParameterFor(int length) {
  if (length < 5 || length % 2 == 0) {
    throw std::invalid_argument("snake constructions need odd length >= 5, got " +
                                std::to_string(length));
  }
  return (length - 1) / 2;
}

std::string ClassLabel::ToString() const {
  return "[" + std::to_string(x) + "," + std::to_string(y) + "]";
}

std::string FormatSequence(const std::vector<int>& values) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  os << ']';
  return os.str();
}

Necklace::Necklace(ClassLabel label, std::vector<int> front)
    : label_(label), name_(std::move(front)) {}

Permutation Necklace::Representative() const {
  std::vector<int> v = name_.elements();
  v.push_back(label_.x);
  v.push_back(label_.y);
  return Permutation(v);
}

Permutation Necklace::WithLast(int last) const {
  std::vector<int> v = name_.StartingFrom(last);
  std::rotate(v.begin(), v.begin() + 1, v.end());
  v.push_back(label_.x);
  v.push_back(label_.y);
  return Permutation(v);
}

std::vector<Permutation> Necklace::Codewords() const {
  const Transition rotate{length() - 2};
  std::vector<Permutation> out;
  out.reserve(name_.length());
  Permutation p = Representative();
  for (int i = 0; i < name_.length(); ++i) {
    out.push_back(p);
    p = ApplyTransition(p, rotate);
  }
  return out;
}

std::string Necklace::ToString() const {
  return FormatSequence(name_.elements()) + "-" + label_.ToString();
}

ClassLabel ClassOf(const Permutation& p) {
  ParameterFor(p.size());
  if (!IsEven(p)) throw std::invalid_argument("odd permutation " + p.ToString() + " has no class");
  return {p(p.size() - 1), p(p.size())};
}

Necklace NecklaceOf(const Permutation& p) {
  const ClassLabel label = ClassOf(p);
  std::vector<int> front = p.ToVector();
  front.resize(front.size() - 2);
  return Necklace(label, std::move(front));
}

std::vector<ClassLabel> AllClassLabels(int n) {
  const int length = LengthFor(n);
  std::vector<ClassLabel> out;
  for (int x = 1; x <= length; ++x) {
    for (int y = 1; y <= length; ++y) {
      if (x != y) out.push_back({x, y});
    }
  }
  return out;
}

std::vector<Necklace> EnumerateNecklaces(int n, ClassLabel label) {
  if (n < 2) throw std::invalid_argument("necklaces need n >= 2");
  CheckLabel(n, label);
  const int length = LengthFor(n);
  std::vector<int> rest;
  for (int v = 1; v <= length; ++v) {
    if (v != label.x && v != label.y) rest.push_back(v);
  }
  // The minimum stays in front; the others run through every order.
  const int head = rest.front();
  std::vector<int> tail(rest.begin() + 1, rest.end());
  std::vector<Necklace> out;
  do {
    std::vector<int> v{head};
    v.insert(v.end(), tail.begin(), tail.end());
    v.push_back(label.x);
    v.push_back(label.y);
    if (IsEven(Permutation(v))) {
      v.resize(v.size() - 2);
      out.emplace_back(label, std::move(v));
    }
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

}  // namespace snakebox
