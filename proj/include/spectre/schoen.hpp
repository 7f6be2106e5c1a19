#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spectre/cyclotomic.hpp"
#include "spectre/newton.hpp"

namespace spectre {

// Nodes of a degree-d hypersurface in P^{2m}, coordinates in Q(zeta_conductor).
struct NodalFamily {
  int m = 1;
  long degree = 1;
  long conductor = 1;
  std::vector<std::vector<QPoly>> nodes;

  long section_degree() const { return m * degree - 2 * m - 1; }
  void validate() const;  // throws DomainError
};

struct SchoenReport {
  long r = 0;
  long rk_N = 0;
  long dim_W = 0;
  long phantom = 0;
  long nodes = 0;
  long sections = 0;  // number of monomials of the section degree
  std::vector<std::pair<uint64_t, long>> prime_ranks;
  bool exact_used = false;
};

struct RankOptions {
  bool certify = false;          // always run the exact elimination
  uint64_t prime_start = 1u << 30;
};

// All exponent vectors of total degree deg in nvars variables, lexicographic.
std::vector<IVec> monomials_of_degree(int nvars, long deg);

// Throws DegenerateSection when md - 2m - 1 < 0.
SchoenReport evaluation_rank(const NodalFamily& fam, const RankOptions& opts = {});

// Number of nodes at which F and all its partials vanish exactly.
long verified_nodes(const NodalFamily& fam, const MonomialData& F);
// True iff there is at least one node and every node is verified.
bool node_verify(const NodalFamily& fam, const MonomialData& F);

// sum x_i^5 - 5 prod x_i on P^4 and its 125 nodes (1, zeta^a1, ..., zeta^a4), sum a_i = 0 mod 5.
MonomialData dwork_quintic();
NodalFamily dwork_quintic_nodes();

}  // namespace spectre
