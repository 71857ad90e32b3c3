#pragma once

#include <vector>

#include "germtype/rational.hpp"

namespace germtype {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

Rat dot(const QVec& a, const QVec& b);

// Row rank over Q.
int qrank(QMat m);

// Kernel basis of the row space (solutions of m x = 0).
QMat qkernel(QMat m);

// Extreme rays of the pointed cone { x in Q^d : row . x >= 0 for every row }.
// Requires d linearly independent rows (callers arrange this; asserts
// otherwise). Classic double description with the combinatorial adjacency
// test; row count is limited to 64 so tight sets fit in a word.
QMat dd_extreme_rays(const QMat& rows);

// Scale a rational vector to a primitive integer vector (times the positive
// rational factor), returned as rationals with denominator one.
QVec primitive_integer(const QVec& v);

}  // namespace germtype
