// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include "k3q/algebra/matrix.hpp"

namespace k3q::groups {

using algebra::Matrix4;

/// Unit quaternions with displayed SO(4) images. q3 is the product q1 q2.
enum class Quaternion { q1, q2, q3, p3, p4 };

/// Image of (p, 1): left multiplication x -> p x on R^4 = H.
Matrix4 left_factor(Quaternion p);
/// Image of (1, p): right multiplication x -> x conj(p).
Matrix4 right_factor(Quaternion p);

/// The matrix C = diag(1, -1, -1, -1) swapping the two factors under conjugation.
Matrix4 swap_matrix();

/// Parses an element written as "(a,b)" where a and b are words in q1, q2, q3,
/// p3, p4 with optional exponents ("p3^2", "p4q2") or "1", and returns the
/// product of the left image of a and the right image of b.
///
/// Throws ParseError (line 0) on malformed input.
Matrix4 parse_element(std::string_view text);

}  // namespace k3q::groups
