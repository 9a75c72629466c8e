#include "nichols/groupoid.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <sstream>

#include "nichols/errors.hpp"

namespace nichols {

Caps default_caps() {
  Caps caps;
  if (const char* env = std::getenv("NP_CAPS")) {
    std::string s(env);
    auto comma = s.find(',');
    try {
      caps.max_objects = std::stoul(s.substr(0, comma));
      if (comma != std::string::npos) caps.max_roots = std::stoul(s.substr(comma + 1));
    } catch (const std::exception&) {
      fail(ErrorKind::ParseError, "NP_CAPS must look like \"objects,roots\"");
    }
  }
  return caps;
}

int64_t cartan_entry(const BraidingMatrix& q, size_t i, size_t j) {
  if (i == j) return 2;
  const RootOfUnity qii = q(i, i), qt = q.tilde(i, j);
  const int64_t bound = std::max(qii.order(), qt.order()) * 8 + 8;
  RootOfUnity power;  // q_ii^n
  for (int64_t n = 0; n <= bound; ++n) {
    if (q_number_is_zero(n + 1, qii) || (power * qt).is_one()) return -n;
    power *= qii;
  }
  fail(ErrorKind::NotArithmetic, "c_" + std::to_string(i + 1) + std::to_string(j + 1) + " is not finite (q_ii = " +
                                     qii.str() + ", q_ij q_ji = " + qt.str() + ")");
}

SmallMat generalized_cartan_matrix(const BraidingMatrix& q) {
  const size_t n = q.theta();
  SmallMat c(n, n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) c(i, j) = cartan_entry(q, i, j);
  return c;
}

RootVec reflect_root(const SmallMat& c, size_t i, const RootVec& beta) {
  int64_t pairing = 0;
  for (size_t j = 0; j < beta.size(); ++j) pairing = checked_add(pairing, checked_mul(c(i, j), beta[j]));
  RootVec r = beta;
  r[i] = checked_add(r[i], -pairing);
  return r;
}

BraidingMatrix rho(const BraidingMatrix& q, const SmallMat& c, size_t i) {
  const size_t n = q.theta();
  // Exponents over the common order l of all entries, normalized once per entry.
  int64_t l = 1;
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k) l = lcm64(l, q(j, k).order());
  auto e = [&](size_t j, size_t k) -> __int128 { return static_cast<__int128>(q(j, k).numerator()) * (l / q(j, k).order()); };
  BraidingMatrix r(n);
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k) {
      __int128 x = e(j, k) - c(i, j) * e(i, k) - c(i, k) * e(j, i) + c(i, j) * c(i, k) * e(i, i);
      r(j, k) = make_root(static_cast<int64_t>(x % l), l);
    }
  return r;
}

Reflection reflect(const BraidingMatrix& q, size_t i) {
  const SmallMat c = generalized_cartan_matrix(q);
  const size_t n = q.theta();
  Reflection r;
  r.s = SmallMat(n, n, 0);
  for (size_t j = 0; j < n; ++j) {
    RootVec img = reflect_root(c, i, simple_root(n, j));
    for (size_t k = 0; k < n; ++k) r.s(k, j) = img[k];
  }
  r.rho = rho(q, c, i);
  return r;
}

bool is_cartan_vertex(const BraidingMatrix& q, const SmallMat& c, size_t i) {
  for (size_t j = 0; j < q.theta(); ++j)
    if (j != i && q.tilde(i, j) != q(i, i).pow(c(i, j))) return false;
  return true;
}

Groupoid enumerate_groupoid(const BraidingMatrix& q, const Caps& caps) {
  Groupoid g;
  std::map<BraidingMatrix, size_t> index;
  auto add = [&](const BraidingMatrix& m) {
    auto [it, inserted] = index.emplace(m, g.objects.size());
    if (inserted) {
      if (g.objects.size() >= caps.max_objects)
        fail(ErrorKind::LikelyInfinite, "Weyl groupoid exceeds the object cap of " + std::to_string(caps.max_objects));
      g.objects.push_back(m);
      g.cartan.push_back(generalized_cartan_matrix(m));
      g.rho.emplace_back(m.theta(), 0);
    }
    return it->second;
  };
  add(q);
  for (size_t p = 0; p < g.objects.size(); ++p)
    for (size_t i = 0; i < q.theta(); ++i) {
      // copy: add() may reallocate
      BraidingMatrix r = rho(g.objects[p], g.cartan[p], i);
      size_t idx = add(r);
      g.rho[p][i] = idx;
    }
  return g;
}

const PositiveRoot* RootDatum::find(const RootVec& v) const {
  for (const auto& r : roots)
    if (r.v == v) return &r;
  return nullptr;
}

RootSystem positive_roots(const BraidingMatrix& q, const Caps& caps) {
  RootSystem rs;
  rs.groupoid = enumerate_groupoid(q, caps);
  const Groupoid& g = rs.groupoid;
  const size_t n = q.theta(), objects = g.objects.size();

  std::vector<std::map<RootVec, PositiveRoot>> sets(objects);
  std::deque<std::pair<size_t, RootVec>> work;

  auto insert = [&](size_t p, PositiveRoot root) {
    auto it = sets[p].find(root.v);
    if (it != sets[p].end()) {
      if (it->second.cartan != root.cartan)
        fail(ErrorKind::InternalInvariantViolation,
             "root " + to_string(root.v) + " at object " + std::to_string(p) + " has inconsistent Cartan flags");
      return;
    }
    if (sets[p].size() >= caps.max_roots)
      fail(ErrorKind::LikelyInfinite, "positive roots exceed the cap of " + std::to_string(caps.max_roots));
    work.emplace_back(p, root.v);
    sets[p].emplace(root.v, std::move(root));
  };

  for (size_t p = 0; p < objects; ++p)
    for (size_t j = 0; j < n; ++j) {
      PositiveRoot r;
      r.v = simple_root(n, j);
      r.cartan = is_cartan_vertex(g.objects[p], g.cartan[p], j);
      r.source = j;
      insert(p, std::move(r));
    }

  while (!work.empty()) {
    auto [r, v] = work.front();
    work.pop_front();
    const PositiveRoot& beta = sets[r].at(v);  // map nodes are stable under insertion
    for (size_t i = 0; i < n; ++i) {
      if (beta.v == simple_root(n, i)) continue;
      const size_t p = g.rho[r][i];
      PositiveRoot img;
      img.v = reflect_root(g.cartan[p], i, beta.v);
      if (!is_nonnegative(img.v)) continue;
      img.cartan = beta.cartan;
      img.source = beta.source;
      insert(p, std::move(img));
    }
  }

  rs.per_object.resize(objects);
  for (size_t p = 0; p < objects; ++p) {
    RootDatum& rd = rs.per_object[p];
    rd.theta = n;
    for (auto& [v, root] : sets[p]) {
      root.order = bilinear(g.objects[p], v, v).order();
      rd.roots.push_back(std::move(root));
    }
    std::sort(rd.roots.begin(), rd.roots.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
      int64_t ha = height(a.v), hb = height(b.v);
      if (ha != hb) return ha < hb;
      return a.v > b.v;
    });
  }
  return rs;
}

RootVec simple_root(size_t theta, size_t i) {
  RootVec v(theta, 0);
  v[i] = 1;
  return v;
}

int64_t height(const RootVec& v) {
  int64_t h = 0;
  for (int64_t x : v) h = checked_add(h, x);
  return h;
}

bool is_nonnegative(const RootVec& v) {
  return std::all_of(v.begin(), v.end(), [](int64_t x) { return x >= 0; });
}

RootVec scaled(const RootVec& v, int64_t k) {
  RootVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = checked_mul(v[i], k);
  return r;
}

std::string to_string(const RootVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace nichols
