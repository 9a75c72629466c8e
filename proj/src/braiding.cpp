#include "nichols/braiding.hpp"

#include <numeric>

#include "nichols/errors.hpp"

namespace nichols {

std::string Monomial::str() const {
  std::string s = coeff.str();
  if (exp != 0) s += "*v^" + std::to_string(exp);
  return s;
}

BraidingMatrix BraidingMatrix::from_rows(const std::vector<std::vector<RootOfUnity>>& rows) {
  BraidingMatrix q(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) fail(ErrorKind::DimensionError, "braiding matrix is not square");
    for (size_t j = 0; j < rows.size(); ++j) q(i, j) = rows[i][j];
  }
  return q;
}

bool BraidingMatrix::is_symmetric() const {
  for (size_t i = 0; i < theta_; ++i)
    for (size_t j = i + 1; j < theta_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RootOfUnity bilinear(const BraidingMatrix& q, const RootVec& alpha, const RootVec& beta) {
  const size_t n = q.theta();
  if (alpha.size() != n || beta.size() != n) fail(ErrorKind::DimensionError, "vector length differs from rank");
  // One normalization at the end: sum the exponents over a common order.
  int64_t l = 1;
  for (size_t i = 0; i < n; ++i)
    if (alpha[i] != 0)
      for (size_t j = 0; j < n; ++j)
        if (beta[j] != 0) l = lcm64(l, q(i, j).order());
  __int128 sum = 0;
  for (size_t i = 0; i < n; ++i) {
    if (alpha[i] == 0) continue;
    for (size_t j = 0; j < n; ++j) {
      if (beta[j] == 0) continue;
      const RootOfUnity& e = q(i, j);
      __int128 term = static_cast<__int128>(e.numerator()) * (l / e.order()) % l;
      sum = (sum + term * (static_cast<__int128>(checked_mul(alpha[i], beta[j])) % l)) % l;
    }
  }
  return make_root(static_cast<int64_t>(sum), l);
}

SmallMat ParamBraidingMatrix::exponents() const {
  SmallMat t(theta_, theta_, 0);
  for (size_t i = 0; i < theta_; ++i)
    for (size_t j = 0; j < theta_; ++j) t(i, j) = (*this)(i, j).exp;
  return t;
}

SmallMat ParamBraidingMatrix::symmetrized() const {
  SmallMat b(theta_, theta_, 0);
  for (size_t i = 0; i < theta_; ++i)
    for (size_t j = 0; j < theta_; ++j) b(i, j) = (*this)(i, j).exp + (*this)(j, i).exp;
  return b;
}

bool ParamBraidingMatrix::is_symmetric() const {
  for (size_t i = 0; i < theta_; ++i)
    for (size_t j = i + 1; j < theta_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

Monomial ParamBraidingMatrix::bilinear(const RootVec& alpha, const RootVec& beta) const {
  if (alpha.size() != theta_ || beta.size() != theta_) fail(ErrorKind::DimensionError, "vector length differs from rank");
  Monomial r;
  for (size_t i = 0; i < theta_; ++i) {
    if (alpha[i] == 0) continue;
    for (size_t j = 0; j < theta_; ++j)
      if (beta[j] != 0) r = r * (*this)(i, j).pow(checked_mul(alpha[i], beta[j]));
  }
  return r;
}

int64_t ParamBraidingMatrix::t_form(const RootVec& alpha, const RootVec& beta) const {
  return bilinear(alpha, beta).exp;
}

void check_specialization(const RootOfUnity& xi) {
  if (xi.order() < 2) fail(ErrorKind::UnsupportedParameters, "specialization point must have order >= 2");
}

BraidingMatrix evaluate(const ParamBraidingMatrix& bq, const RootOfUnity& xi) {
  BraidingMatrix q(bq.theta());
  for (size_t i = 0; i < bq.theta(); ++i)
    for (size_t j = 0; j < bq.theta(); ++j) q(i, j) = bq(i, j).at(xi);
  return q;
}

DynkinDiagram dynkin_diagram(const BraidingMatrix& q) {
  DynkinDiagram d;
  const size_t n = q.theta();
  for (size_t i = 0; i < n; ++i) d.vertices.push_back(q(i, i));
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  size_t components = n;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      RootOfUnity t = q.tilde(i, j);
      if (t.is_one()) continue;
      d.edges.push_back({i, j, t});
      if (find(i) != find(j)) {
        parent[find(i)] = find(j);
        --components;
      }
    }
  d.symmetric = q.is_symmetric();
  d.connected = components <= 1;
  return d;
}

void require_connected(const BraidingMatrix& q) {
  if (!dynkin_diagram(q).connected) fail(ErrorKind::DimensionError, "Dynkin diagram is not connected");
}

ParamBraidingMatrix assemble(const ParamDiagram& d, const std::vector<EdgeSplit>& splits) {
  const size_t n = d.vertices.size();
  if (splits.size() != d.edges.size()) fail(ErrorKind::DimensionError, "one split per edge expected");
  ParamBraidingMatrix bq(n);
  for (size_t i = 0; i < n; ++i) bq(i, i) = d.vertices[i];
  for (size_t e = 0; e < d.edges.size(); ++e) {
    const auto& edge = d.edges[e];
    Monomial upper{splits[e].upper_coeff, splits[e].upper_exp};
    bq(edge.i, edge.j) = upper;
    bq(edge.j, edge.i) = edge.label * upper.inverse();
  }
  return bq;
}

namespace {

Monomial nu(int64_t e) { return {RootOfUnity{}, e}; }
Monomial minus_nu(int64_t e) { return {minus_one(), e}; }

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::UnsupportedParameters, what);
}

void chain(ParamDiagram& d, size_t from, size_t to, const Monomial& label) {
  for (size_t i = from; i + 1 <= to; ++i) d.edges.push_back({i, i + 1, label});
}

ParamDiagram cartan_diagram(const std::string& letter, int theta, int64_t N) {
  ParamDiagram d;
  const size_t n = static_cast<size_t>(theta);
  if (letter == "A") {
    require(theta >= 1, "A_theta needs theta >= 1");
    d.vertices.assign(n, nu(1));
    chain(d, 0, n - 1, nu(-1));
  } else if (letter == "B") {
    require(theta >= 2 && N > 2, "B_theta needs theta >= 2 and N > 2");
    d.vertices.assign(n, nu(2));
    d.vertices[n - 1] = nu(1);
    chain(d, 0, n - 1, nu(-2));
  } else if (letter == "C") {
    require(theta >= 3 && N > 2, "C_theta needs theta >= 3 and N > 2");
    d.vertices.assign(n, nu(1));
    d.vertices[n - 1] = nu(2);
    chain(d, 0, n - 2, nu(-1));
    d.edges.push_back({n - 2, n - 1, nu(-2)});
  } else if (letter == "D") {
    require(theta >= 4, "D_theta needs theta >= 4");
    d.vertices.assign(n, nu(1));
    chain(d, 0, n - 2, nu(-1));
    d.edges.push_back({n - 3, n - 1, nu(-1)});
  } else if (letter == "E") {
    require(theta >= 6 && theta <= 8, "E_theta needs 6 <= theta <= 8");
    // Bourbaki labelling: 1-3-4-5-...-θ with 2 attached to 4.
    d.vertices.assign(n, nu(1));
    d.edges.push_back({0, 2, nu(-1)});
    d.edges.push_back({1, 3, nu(-1)});
    chain(d, 2, n - 1, nu(-1));
  } else if (letter == "F") {
    require(theta == 4 && N > 2, "F4 needs theta = 4 and N > 2");
    d.vertices = {nu(1), nu(1), nu(2), nu(2)};
    d.edges = {{0, 1, nu(-1)}, {1, 2, nu(-2)}, {2, 3, nu(-2)}};
  } else if (letter == "G") {
    require(theta == 2 && N > 3, "G2 needs theta = 2 and N > 3");
    d.vertices = {nu(1), nu(3)};
    d.edges = {{0, 1, nu(-3)}};
  } else {
    fail(ErrorKind::UnsupportedParameters, "unknown Cartan series \"" + letter + "\"");
  }
  return d;
}

// Super rows share the shape: left block (i < k), odd vertex k, right block.
ParamDiagram super_chain(int theta, int k, int64_t left_vertex, int64_t left_edge, int64_t right_vertex,
                         int64_t right_edge) {
  ParamDiagram d;
  const size_t n = static_cast<size_t>(theta), kk = static_cast<size_t>(k - 1);
  for (size_t i = 0; i < n; ++i) {
    if (i < kk) d.vertices.push_back(nu(left_vertex));
    else if (i == kk) d.vertices.push_back(minus_nu(0));
    else d.vertices.push_back(nu(right_vertex));
  }
  for (size_t i = 0; i + 1 < n; ++i) d.edges.push_back({i, i + 1, nu(i + 1 <= kk ? left_edge : right_edge)});
  return d;
}

ParamDiagram row_diagram(const FamilyParams& p) {
  const int64_t N = p.N;
  const int theta = p.theta, k = p.k;
  if (p.name == "cartan") return cartan_diagram(p.letter, theta, N);
  if (p.name == "superA") {
    require(theta >= 2 && k >= 1 && k <= (theta + 1) / 2 && N > 2, "superA needs theta >= 2, 1 <= k <= (theta+1)/2, N > 2");
    return super_chain(theta, k, -1, 1, 1, -1);
  }
  if (p.name == "superB") {
    require(theta >= 2 && k >= 1 && k <= theta - 1 && N > 2 && N != 4, "superB needs theta >= 2, 1 <= k < theta, N != 2, 4");
    ParamDiagram d = super_chain(theta, k, -2, 2, 2, -2);
    d.vertices[theta - 1] = nu(1);
    return d;
  }
  if (p.name == "superD") {
    require(theta >= 3 && k >= 2 && k <= theta - 1 && N > 2, "superD needs theta >= 3, 2 <= k < theta, N > 2");
    ParamDiagram d = super_chain(theta, k, -1, 1, 1, -1);
    d.vertices[theta - 1] = nu(2);
    d.edges.back().label = nu(-2);
    return d;
  }
  if (p.name == "D21") {
    const int64_t d1 = p.d1, d3 = p.d3;
    require(d1 >= 1 && d3 >= 1 && N >= 2, "D21 needs d1, d3 >= 1");
    require(mod64(d1, N) != 0 && mod64(d3, N) != 0 && mod64(d1 + d3, N) != 0, "D21 needs r, s, rs != 1");
    require(std::gcd(std::gcd(d1, d3), N) == 1, "D21 needs xi to generate <r, s>");
    ParamDiagram d;
    d.vertices = {nu(d1), minus_nu(0), nu(d3)};
    d.edges = {{0, 1, nu(-d1)}, {1, 2, nu(-d3)}};
    return d;
  }
  if (p.name == "superF4") {
    require(N > 2, "superF4 needs N > 2");
    ParamDiagram d;
    d.vertices = {nu(2), nu(2), nu(1), minus_nu(0)};
    d.edges = {{0, 1, nu(-2)}, {1, 2, nu(-2)}, {2, 3, nu(-1)}};
    return d;
  }
  if (p.name == "superG3") {
    require(N > 3, "superG3 needs N > 3");
    ParamDiagram d;
    d.vertices = {minus_nu(0), nu(1), nu(3)};
    d.edges = {{0, 1, nu(-1)}, {1, 2, nu(-3)}};
    return d;
  }
  if (p.name == "wk4") {
    require(N > 2, "wk4 needs N > 2");
    ParamDiagram d;
    d.vertices = {nu(1), nu(1), minus_nu(0), minus_nu(-1)};
    d.edges = {{0, 1, nu(-1)}, {1, 2, nu(-1)}, {2, 3, minus_nu(1)}};
    return d;
  }
  if (p.name == "br2") {
    require(N >= 2 && N != 3, "br2 needs N != 3");
    ParamDiagram d;
    d.vertices = {{make_root(1, 3), 0}, nu(1)};
    d.edges = {{0, 1, nu(-1)}};
    return d;
  }
  fail(ErrorKind::UnsupportedParameters, "unknown family \"" + p.name + "\"");
}

FamilyParams normalized(FamilyParams p) {
  if (p.name == "D21") p.theta = 3;
  if (p.name == "superF4" || p.name == "wk4") p.theta = 4;
  if (p.name == "superG3") p.theta = 3;
  if (p.name == "br2") p.theta = 2;
  if (p.name == "cartan" && p.letter == "G") p.theta = 2;
  if (p.name == "cartan" && p.letter == "F") p.theta = 4;
  return p;
}

}  // namespace

FamilyInstance family(const FamilyParams& raw) {
  FamilyParams p = normalized(raw);
  if (p.N < 2) fail(ErrorKind::UnsupportedParameters, "N must be at least 2");
  FamilyInstance inst;
  inst.params = p;
  inst.diagram = row_diagram(p);
  inst.xi = make_root(1, p.N);
  inst.splits.assign(inst.diagram.edges.size(), EdgeSplit{});
  if (!p.exponents.empty()) {
    if (p.exponents.size() != inst.diagram.edges.size())
      fail(ErrorKind::UnsupportedParameters,
           "expected " + std::to_string(inst.diagram.edges.size()) + " exponents (one per edge)");
    for (size_t e = 0; e < p.exponents.size(); ++e) inst.splits[e].upper_exp = p.exponents[e];
    inst.explicit_exponents = true;
  }
  inst.bq = assemble(inst.diagram, inst.splits);
  return inst;
}

std::string FamilyInstance::label() const {
  const auto& p = params;
  std::string s = p.name;
  if (p.name == "cartan") s += "-" + p.letter + std::to_string(p.theta);
  else if (p.name == "superA" || p.name == "superB" || p.name == "superD")
    s += "-t" + std::to_string(p.theta) + "-k" + std::to_string(p.k);
  else if (p.name == "D21")
    s += "-d" + std::to_string(p.d1) + "-" + std::to_string(p.d3);
  s += "-N" + std::to_string(p.N);
  return s;
}

std::vector<std::string> family_names() {
  return {"cartan", "superA", "superB", "superD", "D21", "superF4", "superG3", "wk4", "br2"};
}

}  // namespace nichols
