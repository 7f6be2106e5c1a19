#pragma once

#include <optional>
#include <vector>

#include "spectre/rat.hpp"

namespace spectre {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;
using IVec = std::vector<long>;

QVec to_qvec(const IVec& v);
Rat dot(const QVec& a, const QVec& b);

// Row-reduces in place; returns pivot columns.
std::vector<size_t> rref(QMat& m, size_t ncols);
size_t rank(QMat m, size_t ncols);
// Basis of {x : m x = 0}.
QMat nullspace(QMat m, size_t ncols);

struct LinearSolution {
  enum Kind { None, Unique, Underdetermined } kind = None;
  QVec x;  // a particular solution when kind != None
};
// Solves a x = b with a of size rows x ncols.
LinearSolution solve(const QMat& a, const QVec& b, size_t ncols);

// Scales v to a primitive integer vector (same direction).
QVec primitive(const QVec& v);

// gcd of all maximal minors of an integer matrix with rows <= cols.
Int gcd_maximal_minors(const std::vector<IVec>& rows);

}  // namespace spectre
