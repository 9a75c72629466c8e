#pragma once

#include <optional>
#include <vector>

#include "nichols/matrix.hpp"

namespace nichols {

using RatVec = std::vector<Rational>;

RatMat to_rational(const SmallMat& m);
RatMat to_rational(const IntMat& m);

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(RatMat& m);

size_t rank(RatMat m);
Rational determinant(RatMat m);
std::optional<RatMat> inverse(const RatMat& m);

// Basis of {x : m x = 0}.
std::vector<RatVec> nullspace(RatMat m);

// The unique x with m x = b, if m has full column rank and b is in the image.
std::optional<RatVec> solve(const RatMat& m, const RatVec& b);

// Integer multiple of v with coprime entries (v != 0).
std::vector<Integer> primitive(const RatVec& v);

}  // namespace nichols
