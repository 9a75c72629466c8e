#pragma once

#include <map>
#include <vector>

#include "nichols/braiding.hpp"

namespace nichols {

struct Caps {
  size_t max_objects = 4096;
  size_t max_roots = 16384;
};

// Defaults, overridden by NP_CAPS="objects,roots" when set.
Caps default_caps();

// c_ij = −min{n >= 0 : (n+1)_{q_ii} = 0 or q_ii^n q_ij q_ji = 1}; c_ii = 2.
int64_t cartan_entry(const BraidingMatrix& q, size_t i, size_t j);
SmallMat generalized_cartan_matrix(const BraidingMatrix& q);

// s_i(β) = β − (Σ_j c_ij β_j) α_i.
RootVec reflect_root(const SmallMat& c, size_t i, const RootVec& beta);
BraidingMatrix rho(const BraidingMatrix& q, const SmallMat& c, size_t i);

struct Reflection {
  SmallMat s;  // column j is s_i(α_j)
  BraidingMatrix rho;
};

Reflection reflect(const BraidingMatrix& q, size_t i);

// q_ij q_ji = q_ii^{c_ij} for all j != i.
bool is_cartan_vertex(const BraidingMatrix& q, const SmallMat& c, size_t i);

struct Groupoid {
  std::vector<BraidingMatrix> objects;  // objects[0] is the input
  std::vector<SmallMat> cartan;
  std::vector<std::vector<size_t>> rho;  // rho[p][i]: index of ρ_i(objects[p])
};

Groupoid enumerate_groupoid(const BraidingMatrix& q, const Caps& caps);

struct PositiveRoot {
  RootVec v;
  int64_t order = 1;  // N_β = ord q(β, β)
  bool cartan = false;
  size_t source = 0;  // β = w(α_source) for some groupoid word w
};

struct RootDatum {
  size_t theta = 0;
  std::vector<PositiveRoot> roots;  // sorted by (height, v)

  const PositiveRoot* find(const RootVec& v) const;
};

struct RootSystem {
  Groupoid groupoid;
  std::vector<RootDatum> per_object;
  const RootDatum& base() const { return per_object.front(); }
};

// Fixpoint closure S(p) ∋ α_i, S(p) ∋ s_i(β) for β ∈ S(ρ_i p) ∖ {α_i};
// Cartan flags travel with the roots and must agree across derivations.
RootSystem positive_roots(const BraidingMatrix& q, const Caps& caps);

RootVec simple_root(size_t theta, size_t i);
int64_t height(const RootVec& v);
bool is_nonnegative(const RootVec& v);
RootVec scaled(const RootVec& v, int64_t k);
std::string to_string(const RootVec& v);

}  // namespace nichols
