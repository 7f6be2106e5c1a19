#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "spectre/hull.hpp"
#include "spectre/linalg.hpp"

namespace spectre {

struct MonomialData {
  int nvars = 0;
  std::vector<IVec> exponents;
  std::optional<std::vector<Rat>> coefficients;  // absent means generic

  void validate() const;  // throws DomainError
};

// Facet of the Newton polyhedron: a . x >= b. Compact ones are rescaled to b = 1.
struct NewtonFacet {
  QVec a;
  Rat b;
  bool compact = false;
  IVec ia;  // primitive integer normal: ia . x >= ib
  long ib = 0;
  std::vector<size_t> points;  // indices into NewtonData::points lying on the facet
  std::vector<size_t> rays;    // coordinate rays e_j parallel to the facet
};

struct Face {
  std::vector<size_t> points;    // support points on the face (sorted)
  std::vector<size_t> vertices;  // the 0-dimensional faces among them
  int dim = 0;                   // d_tau
  int k = 0;                     // k_tau
  int c = 0;                     // c_tau
  std::vector<size_t> facets;    // I(tau): indices into NewtonData::compact
  std::vector<size_t> all_facets;  // every facet of Delta containing tau (indices into NewtonData::facets)
  bool open_orthant = false;     // relint meets the open positive orthant
};

struct NewtonData {
  int nvars = 0;
  std::vector<IVec> points;          // support points lying on Gamma
  std::vector<NewtonFacet> facets;   // all facets of Delta
  std::vector<size_t> compact;       // indices of compact facets; l_i = facets[compact[i]].a
  std::vector<Face> faces;           // all nonempty faces of Gamma, sorted by (dim, points)
  bool convenient = false;

  const QVec& normal(size_t i) const { return facets[compact[i]].a; }
  int n() const { return nvars - 1; }
  // Index of the face Gamma_I, or nullopt when the intersection is empty.
  std::optional<size_t> stratum(const std::vector<size_t>& I) const;
  std::optional<size_t> find_face(const std::vector<size_t>& points) const;
  // All nonempty Gamma_I with |I| = size, one entry per index set I.
  std::vector<std::pair<std::vector<size_t>, size_t>> strata(size_t size) const;
  // Faces of Gamma contained in face f (including f).
  std::vector<size_t> subfaces(size_t f) const;
};

NewtonData build_newton(const MonomialData& m);

Rat h_value(const NewtonData& nd, const QVec& x);
Rat h_value(const NewtonData& nd, const IVec& x);

struct LatticeCount {
  long value = 0;
  std::optional<std::map<Rat, long>> by_residue;

  long at(const Rat& lambda) const;  // residue bucket (requires by_residue)
};

struct PolytopeSpec {
  size_t face = 0;
  long dilate = 1;
  bool hull = false;  // conv(0, tau) instead of tau
};

LatticeCount count_interior(const NewtonData& nd, const PolytopeSpec& spec, bool with_residues);
// Independent oracle: H-representation of the dilated polytope itself and a full box scan.
LatticeCount count_interior_bruteforce(const NewtonData& nd, const PolytopeSpec& spec, bool with_residues);

// While alive, records every count_interior call in the process (one audit at a time).
class CountAudit {
 public:
  struct Entry {
    std::shared_ptr<const NewtonData> newton;
    PolytopeSpec spec;
    LatticeCount count;
  };

  CountAudit();
  ~CountAudit();
  CountAudit(const CountAudit&) = delete;
  CountAudit& operator=(const CountAudit&) = delete;

  std::vector<Entry> entries() const;
  void record(const NewtonData& nd, const PolytopeSpec& spec, const LatticeCount& c);

 private:
  std::vector<Entry> entries_;
};

// Interior lattice points of an arbitrary lattice polytope conv(points), relative to its affine hull.
long count_relint_bruteforce(const std::vector<IVec>& points);

struct StructureFlags {
  bool simple = false;
  bool regular_simplicial = false;
};
StructureFlags structure_flags(const NewtonData& nd);

void require_convenient(const NewtonData& nd);
void require_simple(const NewtonData& nd);

}  // namespace spectre
