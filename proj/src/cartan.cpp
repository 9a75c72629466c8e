#include "nichols/cartan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "nichols/errors.hpp"
#include "nichols/linalg.hpp"

namespace nichols {

namespace {

RootVec add(const RootVec& a, const RootVec& b, int64_t k = 1) {
  RootVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], checked_mul(k, b[i]));
  return r;
}

ScaledRoot make_scaled(const RootVec& v, int64_t order) { return {v, order, scaled(v, order)}; }

std::optional<RootVec> central_direction(const std::vector<ScaledRoot>& pi, const SmallMat& b, size_t theta) {
  RatMat a(pi.size(), theta, Rational(0));
  for (size_t r = 0; r < pi.size(); ++r)
    for (size_t j = 0; j < theta; ++j) {
      Rational s = 0;
      for (size_t i = 0; i < theta; ++i) s += Rational(static_cast<long>(pi[r].underline[i] * b(i, j)));
      a(r, j) = s;
    }
  auto null = nullspace(a);
  if (null.size() != 1) return std::nullopt;
  auto prim = primitive(null[0]);
  RootVec eta;
  for (const auto& x : prim) eta.push_back(x.get_si());
  auto first = std::find_if(eta.begin(), eta.end(), [](int64_t x) { return x != 0; });
  if (first != eta.end() && *first < 0)
    for (auto& x : eta) x = -x;
  return eta;
}

}  // namespace

CartanRootData cartan_roots(const BraidingMatrix& q, const RootDatum& rd, const SmallMat* b) {
  CartanRootData crd;
  crd.theta = rd.theta;
  for (const auto& r : rd.roots) {
    crd.Ntt = lcm64(crd.Ntt, r.order);
    if (r.cartan) crd.O_plus.push_back(make_scaled(r.v, r.order));
  }

  std::set<RootVec> U;
  for (const auto& s : crd.O_plus) U.insert(s.underline);
  for (const auto& s : crd.O_plus) {
    bool decomposable = false;
    for (const auto& v : U) {
      if (v == s.underline) continue;
      RootVec rest = add(s.underline, v, -1);
      if (U.count(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) crd.Pi.push_back(s);
  }

  if (!crd.Pi.empty()) {
    RatMat basis(crd.theta, crd.Pi.size());
    for (size_t p = 0; p < crd.Pi.size(); ++p)
      for (size_t i = 0; i < crd.theta; ++i) basis(i, p) = Rational(static_cast<long>(crd.Pi[p].underline[i]));
    for (const auto& s : crd.O_plus) {
      RatVec target;
      for (int64_t x : s.underline) target.emplace_back(static_cast<long>(x));
      auto x = solve(basis, target);
      if (!x) fail(ErrorKind::NotARootSystem, "indecomposable Cartan roots are not a basis of the rescaled roots");
      std::vector<int64_t> c;
      for (const auto& v : *x) {
        if (v.get_den() != 1 || v < 0)
          fail(ErrorKind::NotARootSystem,
               "rescaled root " + to_string(s.underline) + " is not a non-negative integer combination of Π");
        c.push_back(v.get_num().get_si());
      }
      crd.coords.push_back(std::move(c));
    }
  }

  crd.Pi_tilde = crd.Pi;
  crd.rank_deficient = crd.Pi.size() < crd.theta;
  if (crd.rank_deficient && b && crd.Pi.size() + 1 == crd.theta) {
    crd.eta = central_direction(crd.Pi, *b, crd.theta);
    if (crd.eta) {
      crd.eta_order = bilinear(q, *crd.eta, *crd.eta).order();
      crd.Pi_tilde.push_back(make_scaled(*crd.eta, crd.Ntt));
    }
  }
  return crd;
}

namespace {

CentralityVerdict centrality_over(const BraidingMatrix& q, const std::vector<ScaledRoot>& roots) {
  CentralityVerdict v;
  for (const auto& s : roots)
    for (size_t i = 0; i < q.theta(); ++i) {
      RootOfUnity value = bilinear(q, simple_root(q.theta(), i), s.root).pow(s.order);
      if (!value.is_one()) {
        v.pass = false;
        v.violations.push_back({i, s.root, value});
      }
    }
  return v;
}

}  // namespace

CentralityVerdict check_centrality(const BraidingMatrix& q, const CartanRootData& crd) {
  return centrality_over(q, crd.Pi);
}

CentralityVerdict check_centrality_full(const BraidingMatrix& q, const CartanRootData& crd) {
  return centrality_over(q, crd.O_plus);
}

void make_central(FamilyInstance& inst, const Caps& caps, RootSystem* kept) {
  if (inst.explicit_exponents) return;
  const BraidingMatrix q0 = evaluate(inst.bq, inst.xi);
  RootSystem rs = positive_roots(q0, caps);
  const CartanRootData crd = cartan_roots(q0, rs.base());
  if (check_centrality(q0, crd).pass) {
    if (kept) *kept = std::move(rs);
    return;
  }

  const ParamDiagram& d = inst.diagram;
  const size_t n = d.vertices.size(), edges = d.edges.size();
  std::vector<std::vector<int>> edge_of(n, std::vector<int>(n, -1));
  for (size_t e = 0; e < edges; ++e) edge_of[d.edges[e].i][d.edges[e].j] = edge_of[d.edges[e].j][d.edges[e].i] = int(e);

  std::vector<EdgeSplit> splits(edges);
  auto entry = [&](size_t i, size_t j) -> RootOfUnity {
    if (i == j) return d.vertices[i].at(inst.xi);
    int e = edge_of[i][j];
    if (e < 0) return RootOfUnity{};
    Monomial upper{splits[e].upper_coeff, splits[e].upper_exp};
    return i == d.edges[e].i ? upper.at(inst.xi) : (d.edges[e].label * upper.inverse()).at(inst.xi);
  };

  struct Condition {
    size_t i;
    const ScaledRoot* beta;
  };
  std::vector<std::vector<Condition>> due(edges + 1);  // due[e + 1]: checked once edge e is set
  for (const auto& s : crd.Pi)
    for (size_t i = 0; i < n; ++i) {
      int last = -1;
      for (size_t j = 0; j < n; ++j)
        if (s.root[j] != 0 && j != i) last = std::max(last, edge_of[i][j]);
      due[last + 1].push_back({i, &s});
    }
  auto holds = [&](const Condition& c) {
    RootOfUnity v;
    for (size_t j = 0; j < n; ++j) v *= entry(c.i, j).pow(checked_mul(c.beta->root[j], c.beta->order));
    return v.is_one();
  };
  for (const auto& c : due[0])
    if (!holds(c)) fail(ErrorKind::UnsupportedParameters, "no split of " + inst.label() + " satisfies centrality");

  std::vector<std::vector<EdgeSplit>> candidates(edges);
  const int64_t N = inst.params.N;
  for (size_t e = 0; e < edges; ++e) {
    const RootOfUnity c = d.edges[e].label.coeff;
    std::vector<RootOfUnity> placements;
    for (const auto& u : {RootOfUnity{}, c, minus_one(), c * minus_one()})
      if (std::find(placements.begin(), placements.end(), u) == placements.end()) placements.push_back(u);
    std::vector<int64_t> exps = {0};
    for (int64_t m = 1; m <= N; ++m) {
      exps.push_back(m);
      exps.push_back(-m);
    }
    for (int64_t t : exps)
      for (const auto& u : placements) candidates[e].push_back({u, t});
  }

  std::function<bool(size_t)> search = [&](size_t e) {
    if (e == edges) return true;
    for (const auto& cand : candidates[e]) {
      splits[e] = cand;
      if (std::all_of(due[e + 1].begin(), due[e + 1].end(), holds) && search(e + 1)) return true;
    }
    return false;
  };
  if (!search(0)) fail(ErrorKind::UnsupportedParameters, "no split of " + inst.label() + " satisfies centrality");
  inst.splits = splits;
  inst.bq = assemble(d, splits);
}

SmallMat cartan_matrix_of_g(const CartanRootData& crd) {
  const size_t n = crd.Pi.size();
  std::set<RootVec> U;
  U.insert(RootVec(crd.theta, 0));
  for (const auto& s : crd.O_plus) {
    U.insert(s.underline);
    U.insert(scaled(s.underline, -1));
  }
  SmallMat cm(n, n, 0);
  for (size_t b = 0; b < n; ++b)
    for (size_t g = 0; g < n; ++g) {
      const RootVec& beta = crd.Pi[b].underline;
      const RootVec& gamma = crd.Pi[g].underline;
      int64_t r = 0, p = 0;
      while (U.count(add(gamma, beta, -(r + 1)))) ++r;
      while (U.count(add(gamma, beta, p + 1))) ++p;
      cm(b, g) = r - p;
    }
  for (size_t b = 0; b < n; ++b)
    for (size_t g = 0; g < n; ++g) {
      bool ok = b == g ? cm(b, g) == 2 : (cm(b, g) <= 0 && (cm(b, g) == 0) == (cm(g, b) == 0));
      if (!ok) fail(ErrorKind::NotARootSystem, "root strings of the rescaled Cartan roots do not give a Cartan matrix");
    }

  // Closure of ±underline 𝔒 under its own simple reflections.
  for (size_t r = 0; r < crd.O_plus.size(); ++r)
    for (int sign : {1, -1})
      for (size_t b = 0; b < n; ++b) {
        int64_t pairing = 0;
        for (size_t g = 0; g < n; ++g) pairing = checked_add(pairing, checked_mul(sign * crd.coords[r][g], cm(b, g)));
        RootVec image = add(scaled(crd.O_plus[r].underline, sign), crd.Pi[b].underline, -pairing);
        if (!U.count(image))
          fail(ErrorKind::NotARootSystem, "rescaled Cartan roots are not closed under the reflection at " +
                                              to_string(crd.Pi[b].underline));
      }
  return cm;
}

SmallMat extended_cartan_matrix(const SmallMat& cm, const CartanRootData& crd) {
  const size_t n = crd.Pi_tilde.size();
  SmallMat ext(n, n, 0);
  for (size_t i = 0; i < n; ++i) ext(i, i) = 2;
  for (size_t i = 0; i < cm.rows(); ++i)
    for (size_t j = 0; j < cm.cols(); ++j) ext(i, j) = cm(i, j);
  return ext;
}

SmallMat template_cartan(char letter, int rank) {
  const size_t n = static_cast<size_t>(rank);
  SmallMat c = SmallMat::identity(n);
  for (size_t i = 0; i < n; ++i) c(i, i) = 2;
  auto link = [&](size_t i, size_t j, int64_t cij = -1, int64_t cji = -1) {
    c(i, j) = cij;
    c(j, i) = cji;
  };
  switch (letter) {
    case 'A':
      for (size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1, -1, -2);
      break;
    case 'C':
      for (size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1, -2, -1);
      break;
    case 'D':
      for (size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2, -2, -1);
      link(2, 3);
      break;
    case 'G':
      link(0, 1, -3, -1);
      break;
    default:
      fail(ErrorKind::NotFiniteType, std::string("unknown type letter ") + letter);
  }
  return c;
}

Integer weyl_group_order(char letter, int n) {
  Integer fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  switch (letter) {
    case 'A': return fact * (n + 1);
    case 'B':
    case 'C': return fact * (Integer(1) << n);
    case 'D': return fact * (Integer(1) << (n - 1));
    case 'E': return n == 6 ? Integer(51840) : n == 7 ? Integer(2903040) : Integer(696729600);
    case 'F': return 1152;
    case 'G': return 12;
  }
  fail(ErrorKind::NotFiniteType, std::string("unknown type letter ") + letter);
}

int64_t positive_root_count(char letter, int n) {
  switch (letter) {
    case 'A': return int64_t(n) * (n + 1) / 2;
    case 'B':
    case 'C': return int64_t(n) * n;
    case 'D': return int64_t(n) * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  fail(ErrorKind::NotFiniteType, std::string("unknown type letter ") + letter);
}

namespace {

bool isomorphic(const SmallMat& a, const SmallMat& t) {
  const size_t n = a.rows();
  std::vector<size_t> image(n);
  std::vector<bool> used(n, false);
  std::function<bool(size_t)> place = [&](size_t i) {
    if (i == n) return true;
    for (size_t x = 0; x < n; ++x) {
      if (used[x]) continue;
      bool ok = true;
      for (size_t j = 0; j < i && ok; ++j) ok = a(i, j) == t(x, image[j]) && a(j, i) == t(image[j], x);
      if (!ok) continue;
      image[i] = x;
      used[x] = true;
      if (place(i + 1)) return true;
      used[x] = false;
    }
    return false;
  };
  return place(0);
}

std::vector<std::pair<char, int>> candidates_of_rank(int n) {
  std::vector<std::pair<char, int>> c = {{'A', n}};
  if (n >= 2) c.push_back({'B', n});
  if (n >= 3) c.push_back({'C', n});
  if (n >= 4) c.push_back({'D', n});
  if (n >= 6 && n <= 8) c.push_back({'E', n});
  if (n == 4) c.push_back({'F', 4});
  if (n == 2) c.push_back({'G', 2});
  return c;
}

}  // namespace

SemisimpleType recognize_type(const SmallMat& cm) {
  const size_t n = cm.rows();
  SemisimpleType st;
  st.cartan = cm;
  st.length2.assign(n, 2);
  std::vector<bool> seen(n, false);
  for (size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    TypeComponent comp;
    std::map<size_t, Rational> d;  // (β̲, β̲)/2 up to a common factor
    std::vector<size_t> stack = {start};
    seen[start] = true;
    d[start] = 1;
    while (!stack.empty()) {
      size_t i = stack.back();
      stack.pop_back();
      comp.nodes.push_back(i);
      for (size_t j = 0; j < n; ++j) {
        if (j == i || cm(i, j) == 0) continue;
        Rational dj = d[i] * Rational(static_cast<long>(cm(i, j))) / Rational(static_cast<long>(cm(j, i)));
        if (!seen[j]) {
          seen[j] = true;
          d[j] = dj;
          stack.push_back(j);
        } else if (d[j] != dj) {
          fail(ErrorKind::NotFiniteType, "Cartan matrix is not symmetrizable");
        }
      }
    }
    std::sort(comp.nodes.begin(), comp.nodes.end());
    const size_t m = comp.nodes.size();
    SmallMat block(m, m, 0);
    for (size_t a = 0; a < m; ++a)
      for (size_t b = 0; b < m; ++b) block(a, b) = cm(comp.nodes[a], comp.nodes[b]);
    bool found = false;
    for (auto [letter, rank] : candidates_of_rank(static_cast<int>(m)))
      if (isomorphic(block, template_cartan(letter, rank))) {
        comp.letter = letter;
        comp.rank = rank;
        found = true;
        break;
      }
    if (!found) fail(ErrorKind::NotFiniteType, "a block of rank " + std::to_string(m) + " is not of finite type");
    Rational least = d[comp.nodes.front()];
    for (size_t i : comp.nodes) least = std::min(least, d[i]);
    for (size_t i : comp.nodes) {
      Rational len = 2 * d[i] / least;
      st.length2[i] = len.get_num().get_si();
    }
    st.weyl_order *= weyl_group_order(comp.letter, comp.rank);
    st.positive_roots += positive_root_count(comp.letter, comp.rank);
    st.components.push_back(std::move(comp));
  }
  std::stable_sort(st.components.begin(), st.components.end(), [](const TypeComponent& a, const TypeComponent& b) {
    return std::pair(a.letter, a.rank) < std::pair(b.letter, b.rank);
  });
  return st;
}

std::string SemisimpleType::str() const {
  if (components.empty()) return "0";
  std::string s;
  for (const auto& c : components) {
    if (!s.empty()) s += "x";
    s += c.letter + std::to_string(c.rank);
  }
  return s;
}

std::string canonical_type(const std::string& type) {
  std::vector<std::pair<char, int>> parts;
  std::stringstream ss(type);
  std::string item;
  while (std::getline(ss, item, 'x')) {
    if (item.size() < 2) continue;
    char letter = item[0];
    int rank = std::stoi(item.substr(1));
    if ((letter == 'B' || letter == 'C') && rank == 1) letter = 'A';
    if (letter == 'C' && rank == 2) letter = 'B';
    if (letter == 'D' && rank == 3) letter = 'A';
    if (letter == 'D' && rank == 2) {
      parts.push_back({'A', 1});
      parts.push_back({'A', 1});
      continue;
    }
    parts.push_back({letter, rank});
  }
  std::sort(parts.begin(), parts.end());
  if (parts.empty()) return "0";
  std::string s;
  for (auto [l, r] : parts) {
    if (!s.empty()) s += "x";
    s += l + std::to_string(r);
  }
  return s;
}

}  // namespace nichols
