// SPDX-License-Identifier: Apache-2.0
#include "k3q/groups/generators.hpp"

#include <cctype>

#include "k3q/error.hpp"

namespace k3q::groups {

using algebra::AlgebraicScalar;
using algebra::Rational;

namespace {

AlgebraicScalar half() { return AlgebraicScalar(Rational(1, 2)); }
AlgebraicScalar inv_sqrt2() { return algebra::constants::sqrt2() * half(); }

}  // namespace

Matrix4 left_factor(Quaternion p) {
  switch (p) {
    case Quaternion::q1:
      return Matrix4{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
    case Quaternion::q2:
      return Matrix4{{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}};
    case Quaternion::q3:
      return left_factor(Quaternion::q1) * left_factor(Quaternion::q2);
    case Quaternion::p3:
      return Matrix4({{1, -1, 1, -1}, {1, 1, -1, -1}, {-1, 1, 1, -1}, {1, 1, 1, 1}}, half());
    case Quaternion::p4:
      return Matrix4({{1, -1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}}, inv_sqrt2());
  }
  throw DomainError("unknown quaternion");
}

Matrix4 right_factor(Quaternion p) {
  switch (p) {
    case Quaternion::q1:
      return Matrix4{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
    case Quaternion::q2:
      return Matrix4{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}};
    case Quaternion::q3:
      return right_factor(Quaternion::q1) * right_factor(Quaternion::q2);
    case Quaternion::p3:
      return Matrix4({{1, 1, -1, 1}, {-1, 1, -1, -1}, {1, 1, 1, -1}, {-1, 1, 1, 1}}, half());
    case Quaternion::p4:
      return Matrix4({{1, 1, 0, 0}, {-1, 1, 0, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}}, inv_sqrt2());
  }
  throw DomainError("unknown quaternion");
}

Matrix4 swap_matrix() { return Matrix4{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}; }

namespace {

// Product of the images of a word, using `image` for each letter.
template <class Image>
Matrix4 word_image(std::string_view word, Image image) {
  Matrix4 out = Matrix4::identity();
  std::size_t i = 0;
  auto fail = [&](const std::string& why) { throw ParseError(0, "bad element word '" + std::string(word) + "': " + why); };
  if (word == "1") return out;
  if (word.empty()) fail("empty");
  while (i < word.size()) {
    if (i + 1 >= word.size()) fail("truncated letter");
    const std::string_view letter = word.substr(i, 2);
    Quaternion q;
    if (letter == "q1") q = Quaternion::q1;
    else if (letter == "q2") q = Quaternion::q2;
    else if (letter == "q3") q = Quaternion::q3;
    else if (letter == "p3") q = Quaternion::p3;
    else if (letter == "p4") q = Quaternion::p4;
    else fail("unknown letter '" + std::string(letter) + "'");
    i += 2;
    int exponent = 1;
    if (i < word.size() && word[i] == '^') {
      ++i;
      if (i >= word.size() || !std::isdigit(static_cast<unsigned char>(word[i]))) fail("missing exponent");
      exponent = 0;
      while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i]))) exponent = exponent * 10 + (word[i++] - '0');
    }
    out = out * image(q).pow(exponent);
  }
  return out;
}

}  // namespace

Matrix4 parse_element(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 5 || s.front() != '(' || s.back() != ')') throw ParseError(0, "element must look like (a,b): " + std::string(text));
  const auto comma = s.find(',');
  if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
    throw ParseError(0, "element must have exactly one comma: " + std::string(text));
  const std::string_view inner(s);
  const auto left = inner.substr(1, comma - 1);
  const auto right = inner.substr(comma + 1, inner.size() - comma - 2);
  return word_image(left, left_factor) * word_image(right, right_factor);
}

}  // namespace k3q::groups
