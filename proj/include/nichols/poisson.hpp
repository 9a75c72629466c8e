#pragma once
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>
#include "nichols/braiding.hpp"
#include "nichols/cartan.hpp"
#include "nichols/formal.hpp"
#include "nichols/linalg.hpp"

namespace nichols {

// ℘(ξ) = coeff·ξ^{-1}.
struct PhiValue {
  Rational coeff;
  FormalScalar formal() const { return FormalScalar::xi_power(-1, coeff); }
  std::string str() const;
  friend bool operator==(const PhiValue&, const PhiValue&) = default;
};

// ℘_βγ(ξ) = −Q'(ξ) where Q = 𝐪(β, γ)^{N_β N_γ} = p·ν^m, i.e. −m·ξ^{-1}.
// Raises ConditionViolated unless Q(ξ) = 1.
PhiValue phi_value(const ParamBraidingMatrix& bq, const RootOfUnity& xi, const RootVec& beta,
                   const RootVec& gamma, int64_t n_beta, int64_t n_gamma);

struct PhiMatrix {
  ParamBraidingMatrix bq;  // the lift actually used
  RootOfUnity xi;
  bool relifted = false;
  std::vector<int64_t> shifts;  // h_ij for i < j, row-major
  size_t candidates = 0;
  std::vector<ScaledRoot> basis;  // Π̃
  size_t simple_count = 0;        // |Π|
  RatMat P;                       // 𝒫̃ as ξ^{-1}-coefficients
  SmallMat T;
  SmallMat TT;  // 𝒯 on Π: ℘_βγ = −ξ^{-1} N_β N_γ 𝒯_βγ
  bool nondegenerate = false;
  PhiValue at(size_t a, size_t b) const { return {P(a, b)}; }
};

PhiMatrix phi_matrix(const ParamBraidingMatrix& bq, const RootOfUnity& xi, const CartanRootData& crd);

// Lift through ν = ν'^2 with t'_ii = 2t_ii and t'_ij = t'_ji = b_ij.
// Requires a symmetric evaluated matrix (DimensionError otherwise).
std::pair<ParamBraidingMatrix, RootOfUnity> symmetric_relift(const ParamBraidingMatrix& bq,
                                                              const RootOfUnity& xi);

// Tries t_ij + h_ij N, t_ji − h_ij N by shells of max|h|, lexicographic in each
// shell, until det 𝒯 and det 𝒫̃ are nonzero. A lift whose evaluation is
// symmetric but whose exponents are not is first re-lifted symmetrically.
// Raises SearchFailed after budget candidates.
PhiMatrix build_T(const ParamBraidingMatrix& bq, const RootOfUnity& xi, const CartanRootData& crd,
                  size_t budget);

// c_βγ = (℘_βγ + ℘_γβ)/℘_ββ on Π. Raises RecoveryMismatch on a non-integer entry.
SmallMat cartan_recovery(const PhiMatrix& pm);

struct EtaIdentities {
  bool present = false;
  bool antisymmetric = true;  // ℘_βη + ℘_ηβ = 0 for β̲ ∈ Π
  Rational phi_eta_eta;       // ξ^{-1}-coefficient
  Rational closed_form_magnitude;   // 𝙽²(θ−k+(θ−k+1)²)
  bool magnitude_matches = false;
};

EtaIdentities eta_identities(const PhiMatrix& pm, const CartanRootData& crd, int theta, int k);

// ℘_ββ/(1 − q_ββ)^{N_β}, kept as its two exact parts.
struct SScalar {
  PhiValue phi;
  RootOfUnity q;
  int64_t n = 1;
  std::string str() const;
};

struct Scalars {
  std::vector<Rational> length2;  // (μ̲, μ̲) on Π̃
  std::vector<PhiValue> kappa;    // κ_μ = 2℘_μμ/(μ̲, μ̲)
  std::vector<SScalar> s;         // on Π
  bool kappa_constant_per_factor = true;
};

Scalars scalars(const PhiMatrix& pm, const SemisimpleType& st);

// ((μ̲, γ̲)) on Π̃ with short roots of length 2 and η̲ orthogonal of length 2.
RatMat normalized_gram(const SemisimpleType& st, size_t tilde_size);
// Matrix of 𝒫̃^{-1}𝒫̃^T on the μ̲ basis, 𝒫̃(μ̲) = Σ_γ ℘_μγ γ̲.
RatMat ctilde_matrix(const PhiMatrix& pm);

struct Denominator {
  size_t i = 0, j = 0;
  int64_t s = 0;
  Monomial value;                  // 𝐪_ii^s 𝐪_ij 𝐪_ji
  std::vector<RootOfUnity> zeros;  // ν with value(ν) = 1
  bool nonzero_at_xi = true;
};

struct LambdaReport {
  SmallMat generic_cartan;
  std::vector<std::vector<bool>> lambda_nonzero;
  std::vector<Denominator> denominators;
  std::vector<RootOfUnity> zero_set;  // sorted, unique
  bool specialization_valid = true;
};

// Cartan matrix of 𝐪 over ℂ(ν). Raises NotArithmetic when an entry is unbounded.
SmallMat generic_cartan_matrix(const ParamBraidingMatrix& bq);
LambdaReport lambda_and_denominators(const ParamBraidingMatrix& bq, const RootOfUnity& xi);

// (ρ_i 𝐪)_jk = 𝐪_jk 𝐪_ik^{−c_ij} 𝐪_ji^{−c_ik} 𝐪_ii^{c_ij c_ik}, with c the Cartan matrix of q.
ParamBraidingMatrix rho_param(const ParamBraidingMatrix& bq, const SmallMat& c, size_t i);

struct EquivarianceResult {
  size_t i = 0;
  bool cartan_vertex = false;
  bool evaluation_matches = false;  // ρ_i 𝐪 evaluates to the groupoid object ρ_i(q)
  bool basis_valid = false;         // s_i(Π̃) is a basis of the rescaled system of ρ_i(q)
  bool set_equal = false;           // s_i(Π) = Π^{ρ_i q}
  bool phi_equal = false;           // ℘^{ρ_i 𝐪}(s_iβ̲, s_iγ̲) = ℘^𝐪(β̲, γ̲) on Π̃
  bool pass() const { return evaluation_matches && basis_valid && phi_equal && (cartan_vertex || set_equal); }
};

EquivarianceResult phi_equivariance_check(const PhiMatrix& pm, const RootSystem& rs, const CartanRootData& crd,
                                          size_t i);

// ---- tangent Lie bialgebra m* ----

enum class GenKind { de, df, dK, dL };

struct BasisLabel {
  GenKind kind;
  size_t index;    // into 𝔒_+ for de/df, into Π̃ for dK/dL
  RootVec degree;  // ±N_β β, or 0
  std::string name;
};

using FormalVec = std::map<size_t, FormalScalar>;
using FormalWedge = std::map<std::pair<size_t, size_t>, FormalScalar>;

std::string to_string(const FormalVec& v, const std::vector<BasisLabel>& basis);
std::string to_string(const FormalWedge& w, const std::vector<BasisLabel>& basis);

struct TableEntry {
  std::string lhs;
  std::string value;  // "undetermined" when not fixed by the data
};

class LieBialgebra {
 public:
  LieBialgebra(const PhiMatrix& pm, const CartanRootData& crd);

  size_t dimension() const { return basis_.size(); }
  const std::vector<BasisLabel>& basis() const { return basis_; }
  size_t root_count() const { return roots_; }
  size_t cartan_count() const { return cartan_; }
  size_t de(size_t r) const { return r; }
  size_t df(size_t r) const { return roots_ + r; }
  size_t dK(size_t m) const { return 2 * roots_ + m; }
  size_t dL(size_t m) const { return 2 * roots_ + cartan_ + m; }
  // 𝔒_+ index of Π[p].
  size_t simple_root(size_t p) const { return simple_[p]; }
  const FormalScalar& D(size_t r) const { return d_[r]; }
  const PhiMatrix& phi() const { return pm_; }

  // nullopt when the bracket is not determined by the available data.
  std::optional<FormalVec> bracket(size_t a, size_t b) const;
  std::optional<FormalVec> bracket(const FormalVec& u, const FormalVec& v) const;
  // Defined on span{de_β, df_β : β̲ ∈ Π} ⊕ span{dK, dL}.
  std::optional<FormalWedge> cobracket(const FormalVec& u) const;
  std::optional<FormalWedge> ad(const FormalVec& a, const FormalWedge& w) const;

  std::vector<TableEntry> bracket_table() const;
  std::vector<TableEntry> cobracket_table() const;

 private:
  bool is_weight(const RootVec& d) const;
  PhiMatrix pm_;
  size_t roots_ = 0, cartan_ = 0;
  std::vector<BasisLabel> basis_;
  std::vector<size_t> simple_;
  std::vector<std::optional<size_t>> pi_of_root_;
  std::vector<FormalScalar> d_;
  std::vector<std::vector<FormalScalar>> phi_mu_r_, phi_r_mu_;
  std::vector<RootVec> weights_;  // sorted ±underline 𝔒_+
};

// Raises ConditionViolated when centrality over 𝔒_+ fails or 𝒫̃ is singular.
LieBialgebra mstar_structure(const PhiMatrix& pm, const CartanRootData& crd, const BraidingMatrix& q);

FormalVec unit(size_t idx, const FormalScalar& c = 1);
FormalVec operator+(const FormalVec& a, const FormalVec& b);
FormalVec operator-(const FormalVec& a, const FormalVec& b);
FormalVec operator*(const FormalScalar& c, const FormalVec& v);
FormalWedge wedge(const FormalVec& a, const FormalVec& b);
FormalWedge operator-(const FormalWedge& a, const FormalWedge& b);

struct EmbeddingReport {
  std::vector<FormalVec> x, y;  // on Π
  std::vector<FormalVec> h;     // on Π̃
  size_t relations_checked = 0;
  std::vector<std::string> failures;
  size_t jacobi_checked = 0, jacobi_skipped = 0, jacobi_failed = 0;
  size_t cocycle_checked = 0, cocycle_skipped = 0, cocycle_failed = 0;
  std::vector<RatVec> htilde_basis;  // (a, b) for Σ a_μ dK_μ + b_μ dL_μ
  bool htilde_complement = false;    // meets span{dK_μ + dL_μ} trivially
  bool ok(size_t tilde_size) const {
    return failures.empty() && jacobi_failed == 0 && cocycle_failed == 0 &&
           htilde_basis.size() == tilde_size && htilde_complement;
  }
};

// x̂_β = df_β, ŷ_β = ((q_ββ−1)^{N_β}/℘_ββ²) de_β, ĥ_μ = (dK_μ + dL_μ)/℘_μμ.
// cm_tilde is the extended root-string Cartan matrix on Π̃.
// Raises EmbeddingMismatch when a check fails unless no_throw is set.
EmbeddingReport chevalley_embedding(const LieBialgebra& lb, const SmallMat& cm_tilde, bool no_throw = false);

struct BorelReport {
  RatMat gram;  // [[0, 𝒫̃], [𝒫̃^T, 0]] on (dK, dL), ξ^{-1}-coefficients
  bool gram_nondegenerate = false;
  RatMat leq_map;                              // 𝒫̃^{-1}𝒫̃^T on (dK_μ + dL_μ)-coordinates
  std::vector<RatVec> geq_cartan, leq_cartan;  // (dK, dL)-coordinates
  bool geq_isotropic = false, leq_isotropic = false;
  bool geq_in_K = false, leq_in_L = false;
  bool complementary = false;
  bool ok() const {
    return gram_nondegenerate && geq_isotropic && leq_isotropic && geq_in_K && leq_in_L && complementary;
  }
};

// Raises ManinCheckFailed when a check fails unless no_throw is set.
BorelReport borel_and_form(const PhiMatrix& pm, bool no_throw = false);

}  // namespace nichols
