#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nichols/cyclotomic.hpp"
#include "nichols/matrix.hpp"

namespace nichols {

// Unit Laurent monomial coeff·ν^exp.
struct Monomial {
  RootOfUnity coeff;
  int64_t exp = 0;

  Monomial operator*(const Monomial& o) const { return {coeff * o.coeff, checked_add(exp, o.exp)}; }
  Monomial pow(int64_t k) const { return {coeff.pow(k), checked_mul(exp, k)}; }
  Monomial inverse() const { return {coeff.inverse(), -exp}; }
  bool is_one() const { return coeff.is_one() && exp == 0; }
  RootOfUnity at(const RootOfUnity& xi) const { return coeff * xi.pow(exp); }
  std::string str() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

class BraidingMatrix {
 public:
  BraidingMatrix() = default;
  explicit BraidingMatrix(size_t theta) : theta_(theta), e_(theta * theta) {}
  static BraidingMatrix from_rows(const std::vector<std::vector<RootOfUnity>>& rows);

  size_t theta() const { return theta_; }
  RootOfUnity& operator()(size_t i, size_t j) { return e_[i * theta_ + j]; }
  const RootOfUnity& operator()(size_t i, size_t j) const { return e_[i * theta_ + j]; }
  RootOfUnity tilde(size_t i, size_t j) const { return (*this)(i, j) * (*this)(j, i); }
  bool is_symmetric() const;

  friend bool operator==(const BraidingMatrix&, const BraidingMatrix&) = default;
  friend auto operator<=>(const BraidingMatrix& a, const BraidingMatrix& b) { return a.e_ <=> b.e_; }

 private:
  size_t theta_ = 0;
  std::vector<RootOfUnity> e_;
};

// q(α, β) = ∏ q_ij^{α_i β_j}; raises DimensionError on length mismatch.
RootOfUnity bilinear(const BraidingMatrix& q, const RootVec& alpha, const RootVec& beta);

class ParamBraidingMatrix {
 public:
  ParamBraidingMatrix() = default;
  explicit ParamBraidingMatrix(size_t theta) : theta_(theta), e_(theta * theta) {}

  size_t theta() const { return theta_; }
  Monomial& operator()(size_t i, size_t j) { return e_[i * theta_ + j]; }
  const Monomial& operator()(size_t i, size_t j) const { return e_[i * theta_ + j]; }

  SmallMat exponents() const;
  // b_ij = t_ij + t_ji (so b_ii = 2 t_ii).
  SmallMat symmetrized() const;
  bool is_symmetric() const;

  Monomial bilinear(const RootVec& alpha, const RootVec& beta) const;
  // Exponent part of the bilinear form, t(α, β).
  int64_t t_form(const RootVec& alpha, const RootVec& beta) const;

  friend bool operator==(const ParamBraidingMatrix&, const ParamBraidingMatrix&) = default;

 private:
  size_t theta_ = 0;
  std::vector<Monomial> e_;
};

// Raises UnsupportedParameters unless ord ξ >= 2.
void check_specialization(const RootOfUnity& xi);

BraidingMatrix evaluate(const ParamBraidingMatrix& bq, const RootOfUnity& xi);

struct DiagramEdge {
  size_t i, j;
  RootOfUnity label;
};

struct DynkinDiagram {
  std::vector<RootOfUnity> vertices;
  std::vector<DiagramEdge> edges;  // i < j, only q̃_ij != 1
  bool symmetric = false;
  bool connected = false;
};

DynkinDiagram dynkin_diagram(const BraidingMatrix& q);

// Raises DimensionError when the diagram is disconnected.
void require_connected(const BraidingMatrix& q);

// ---- family catalog ----

struct ParamEdge {
  size_t i, j;  // i < j
  Monomial label;
};

// Generic diagram: vertex monomials q_ii and edge monomials q̃_ij.
struct ParamDiagram {
  std::vector<Monomial> vertices;
  std::vector<ParamEdge> edges;
};

// How the edge label q̃_ij is split: q_ij = upper_coeff·ν^{upper_exp}, q_ji = the rest.
struct EdgeSplit {
  RootOfUnity upper_coeff;
  int64_t upper_exp = 0;
};

ParamBraidingMatrix assemble(const ParamDiagram& d, const std::vector<EdgeSplit>& splits);

struct FamilyParams {
  std::string name;     // cartan, superA, superB, superD, D21, superF4, superG3, wk4, br2
  std::string letter;   // Cartan series letter (A..G) for name == "cartan"
  int theta = 0;
  int k = 0;
  int64_t N = 0;
  int64_t d1 = 1, d3 = 2;
  std::vector<int64_t> exponents;  // optional upper exponents t_ij, one per edge
};

struct FamilyInstance {
  FamilyParams params;
  ParamDiagram diagram;
  std::vector<EdgeSplit> splits;
  ParamBraidingMatrix bq;
  RootOfUnity xi;
  bool explicit_exponents = false;
  std::string label() const;
};

// Builds the diagram of the named row at ord ξ = N with the default split
// (upper exponent 0) or the explicit exponents; raises UnsupportedParameters
// outside the row's range.
FamilyInstance family(const FamilyParams& params);

std::vector<std::string> family_names();

}  // namespace nichols
