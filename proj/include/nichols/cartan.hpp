#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/groupoid.hpp"

namespace nichols {

struct ScaledRoot {
  RootVec root;
  int64_t order = 1;  // N_β
  RootVec underline;  // N_β β
};

struct CartanRootData {
  size_t theta = 0;
  std::vector<ScaledRoot> O_plus;
  std::vector<ScaledRoot> Pi;
  std::vector<ScaledRoot> Pi_tilde;  // Pi, then 𝙽η when η exists
  // coords[r][p]: coefficient of Pi[p] in O_plus[r].underline
  std::vector<std::vector<int64_t>> coords;
  std::optional<RootVec> eta;
  int64_t eta_order = 0;  // ord q(η, η); N_η itself is 𝙽
  int64_t Ntt = 1;        // lcm of N_β over Δ_+
  bool rank_deficient = false;

  bool has_eta() const { return eta.has_value(); }
};

// b is the symmetrized exponent form of a lift of q; without it η is not computed.
CartanRootData cartan_roots(const BraidingMatrix& q, const RootDatum& rd, const SmallMat* b = nullptr);

struct CentralityViolation {
  size_t i;
  RootVec beta;
  RootOfUnity value;  // q(α_i, β)^{N_β}
};

struct CentralityVerdict {
  bool pass = true;
  std::vector<CentralityViolation> violations;
};

// q(α_i, β)^{N_β} = 1 for all i and N_β β ∈ Π.
CentralityVerdict check_centrality(const BraidingMatrix& q, const CartanRootData& crd);
// The same over all of 𝔒_+.
CentralityVerdict check_centrality_full(const BraidingMatrix& q, const CartanRootData& crd);

// Replaces a default family split by the first (by |t|, then placement) that
// passes the centrality condition. Explicit exponents are left alone.
// Raises UnsupportedParameters when no split works. When the default split is
// kept and `kept` is given, its root system is moved there.
void make_central(FamilyInstance& inst, const Caps& caps, RootSystem* kept = nullptr);

// c_{βγ} = r − p from the maximal string γ − rβ, …, γ + pβ inside ±underline 𝔒 ∪ {0}.
// Raises NotARootSystem when the result is not a Cartan matrix or the set is
// not closed under its own simple reflections.
SmallMat cartan_matrix_of_g(const CartanRootData& crd);

// Π̃ version: η is central, so its row and column are zero off the diagonal.
SmallMat extended_cartan_matrix(const SmallMat& cm, const CartanRootData& crd);

struct TypeComponent {
  char letter = 'A';
  int rank = 0;
  std::vector<size_t> nodes;  // indices into Π
};

struct SemisimpleType {
  std::vector<TypeComponent> components;  // sorted by (letter, rank)
  SmallMat cartan;
  Integer weyl_order = 1;
  int64_t positive_roots = 0;
  std::vector<int64_t> length2;  // (β̲, β̲) with short roots of length 2

  int rank() const { return static_cast<int>(cartan.rows()); }
  std::string str() const;
};

SmallMat template_cartan(char letter, int rank);
Integer weyl_group_order(char letter, int rank);
int64_t positive_root_count(char letter, int rank);

// Raises NotFiniteType when a block is not of finite type.
SemisimpleType recognize_type(const SmallMat& cm);

// Canonical name: B1 = C1 = A1, C2 = B2, D2 = A1xA1, D3 = A3; components sorted.
std::string canonical_type(const std::string& type);

}  // namespace nichols
