#pragma once

#include <vector>

#include "spectre/linalg.hpp"

namespace spectre {

// a . x >= b
struct Halfspace {
  QVec a;
  Rat b;
};

// Facets of conv(points) + cone(rays), assumed full-dimensional in R^k.
// Normals are primitive integer vectors; rays may be empty.
std::vector<Halfspace> full_dim_facets(const std::vector<QVec>& points, const std::vector<QVec>& rays);

// H-representation of a possibly lower-dimensional polytope conv(points).
struct HRep {
  size_t ambient = 0;
  size_t dim = 0;
  QMat eq_a;  // eq_a[i] . x = eq_b[i]
  QVec eq_b;
  std::vector<Halfspace> ineq;  // valid on the affine hull
};

HRep hrep_of(const std::vector<QVec>& points);
bool hrep_contains(const HRep& h, const QVec& x);
// Relative interior membership (all inequalities strict).
bool hrep_relint(const HRep& h, const QVec& x);

size_t affine_dim(const std::vector<QVec>& points);

}  // namespace spectre
