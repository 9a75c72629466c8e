#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>
#include "json.hpp"
#include "nichols/braiding.hpp"
#include "nichols/cartan.hpp"
#include "nichols/errors.hpp"
#include "nichols/geometry.hpp"
#include "nichols/groupoid.hpp"
#include "nichols/lattice.hpp"
#include "nichols/poisson.hpp"

namespace nichols {

inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr const char* kInputSchema = "braiding/v1";
inline constexpr const char* kReportSchema = "report/v1";

struct AnalysisInput {
  std::optional<FamilyParams> family;
  BraidingMatrix q;  // unset for families until analysis
  std::optional<ParamBraidingMatrix> lift;
  RootOfUnity xi;
  std::string label;
};

struct AnalysisOptions {
  Caps caps = default_caps();
  size_t t_budget = 4096;
};

// Parses a "braiding/v1" document. Errors carry a JSON pointer to the bad field.
AnalysisInput parse_input(const nlohmann::json& doc);
AnalysisInput parse_input_text(const std::string& text);
AnalysisInput family_input(const FamilyParams& p);

struct StageError {
  ErrorKind kind;
  std::string message;
  std::string stage;
};

struct Analysis {
  AnalysisInput input;
  std::optional<FamilyInstance> instance;
  BraidingMatrix q;
  std::optional<RootSystem> rs;
  std::optional<CartanRootData> crd;
  std::optional<CentralityVerdict> centrality, centrality_full;
  std::optional<SmallMat> cm;
  std::optional<SemisimpleType> st;
  std::optional<LatticeComparison> lattice;
  std::optional<LambdaReport> lambda;
  std::optional<PhiMatrix> pm;
  std::optional<SmallMat> recovery;
  std::optional<EtaIdentities> eta;
  std::optional<Scalars> scalars;
  std::vector<EquivarianceResult> equivariance;
  std::optional<LieBialgebra> lb;
  std::optional<EmbeddingReport> embedding;
  std::optional<BorelReport> borel;
  std::optional<LatticeQuotient> ctilde;
  std::optional<GeometryReport> geometry;
  std::optional<StageError> error;
  std::vector<std::pair<std::string, double>> timing;  // seconds per stage
  int exit_code() const { return error ? nichols::exit_code(error->kind) : 0; }
};

// Runs braiding → groupoid → cartan → poisson → lattice → geometry. Failures
// are recorded in the result, never thrown. Poisson stages need a lift.
Analysis analyze(const AnalysisInput& in, const AnalysisOptions& opt);

nlohmann::json to_json(const Analysis& a, bool with_timing = false);
std::string to_text(const Analysis& a);
std::string to_dot(const Analysis& a);
// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string dump(const nlohmann::json& j);

struct SweepRow {
  std::string label;
  std::string type;
  std::string weyl_order;
  std::string nondegenerate;
  std::string centrality;
  std::string status;
};

std::string sweep_header();
std::string to_string(const SweepRow& r);
SweepRow sweep_row(const Analysis& a);

}  // namespace nichols
