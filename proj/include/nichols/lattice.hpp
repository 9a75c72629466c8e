#pragma once

#include <vector>

#include "nichols/cartan.hpp"
#include "nichols/matrix.hpp"

namespace nichols {

using IntVec = std::vector<Integer>;

struct SmithForm {
  IntMat U, D, V;  // D = U M V
  // Nonzero diagonal entries of D, in order.
  std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntMat& m);

// Echelon basis of the row lattice: positive pivots, entries above each pivot
// reduced into [0, pivot). Unique for a given lattice.
IntMat hermite_normal_form(const IntMat& rows);

bool in_lattice(const IntMat& hnf, IntVec v);
bool same_lattice(const IntMat& a, const IntMat& b);

IntMat rows_of(const std::vector<RootVec>& vs);

struct LatticeQuotient {
  std::vector<Integer> invariant_factors;  // d_1 | d_2 | ..., ones omitted
  bool trivial() const { return invariant_factors.empty(); }
  Integer order() const;
};

// Invariant factors of ℤ^n / (row lattice of m); m must have full rank n.
LatticeQuotient quotient_of(const IntMat& m);

struct LatticeComparison {
  bool equal = true;
  // Each extra β gives the generators (𝙽β, 0) and (0, 𝙽β).
  std::vector<RootVec> extra;
};

// Λ' = ⟨(N_β β, 0), (0, N_β β) : β ∈ 𝔒_+⟩ and Λ = Λ' + ⟨(𝙽β, 0), (0, 𝙽β) : β ∈ Δ_+⟩.
// Both are products L ⊕ L, so the comparison runs on one factor; extra
// generators are chosen greedily in root order.
LatticeComparison zq_lattice_comparison(const CartanRootData& crd, const RootDatum& rd);

// (M L + L)/L for the lattice L spanned by the columns of coweights.
// Raises NonDegeneracyViolated when M is singular.
LatticeQuotient ctilde_invariants(const RatMat& m, const RatMat& coweights);

}  // namespace nichols
