#include "nichols/poisson.hpp"

#include <algorithm>
#include <set>

#include "nichols/errors.hpp"

namespace nichols {

namespace {

RootVec negated(const RootVec& v) { return scaled(v, -1); }

RootVec add(const RootVec& a, const RootVec& b, int64_t k = 1) {
  RootVec s(a.size());
  for (size_t i = 0; i < a.size(); ++i) s[i] = checked_add(a[i], checked_mul(k, b[i]));
  return s;
}

bool is_zero(const RootVec& v) {
  return std::all_of(v.begin(), v.end(), [](int64_t x) { return x == 0; });
}

bool is_zero(const FormalVec& v) { return v.empty(); }

void add_to(FormalVec& v, size_t idx, const FormalScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = v.emplace(idx, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) v.erase(it);
}

void add_to(FormalWedge& w, size_t i, size_t j, const FormalScalar& c) {
  if (i == j || c.is_zero()) return;
  FormalScalar v = c;
  if (i > j) {
    std::swap(i, j);
    v = -v;
  }
  auto [it, fresh] = w.emplace(std::pair{i, j}, v);
  if (fresh) return;
  it->second += v;
  if (it->second.is_zero()) w.erase(it);
}

Rational det_of(const SmallMat& m) { return determinant(to_rational(m)); }

void apply_shift(ParamBraidingMatrix& bq, size_t i, size_t j, int64_t delta) {
  bq(i, j).exp = checked_add(bq(i, j).exp, delta);
  bq(j, i).exp = checked_add(bq(j, i).exp, -delta);
}

// Odometer over [-s, s]^k, skipping vectors with max|h| < s.
class ShellCursor {
 public:
  explicit ShellCursor(size_t k) : h_(k, 0) {}
  const std::vector<int64_t>& current() const { return h_; }
  bool next() {
    if (h_.empty()) return false;
    while (true) {
      if (!step()) {
        ++s_;
        std::fill(h_.begin(), h_.end(), -s_);
      }
      int64_t m = 0;
      for (int64_t x : h_) m = std::max(m, x < 0 ? -x : x);
      if (m == s_) return true;
    }
  }

 private:
  bool step() {
    if (s_ == 0) return false;
    for (size_t p = h_.size(); p-- > 0;) {
      if (h_[p] < s_) {
        ++h_[p];
        return true;
      }
      h_[p] = -s_;
    }
    return false;
  }
  std::vector<int64_t> h_;
  int64_t s_ = 0;
};

}  // namespace

std::string PhiValue::str() const { return to_string(coeff) + "*xi^-1"; }

PhiValue phi_value(const ParamBraidingMatrix& bq, const RootOfUnity& xi, const RootVec& beta,
                   const RootVec& gamma, int64_t n_beta, int64_t n_gamma) {
  Monomial q = bq.bilinear(beta, gamma).pow(checked_mul(n_beta, n_gamma));
  if (!q.at(xi).is_one())
    fail(ErrorKind::ConditionViolated, "q(" + to_string(beta) + ", " + to_string(gamma) + ")^" +
                                           std::to_string(n_beta * n_gamma) + " = " + q.at(xi).str() +
                                           " at xi, expected 1");
  return {Rational(-q.exp)};
}

PhiMatrix phi_matrix(const ParamBraidingMatrix& bq, const RootOfUnity& xi, const CartanRootData& crd) {
  PhiMatrix pm;
  pm.bq = bq;
  pm.xi = xi;
  pm.basis = crd.Pi_tilde;
  pm.simple_count = crd.Pi.size();
  pm.T = bq.exponents();
  size_t n = pm.basis.size();
  pm.P = RatMat(n, n);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      const auto& x = pm.basis[a];
      const auto& y = pm.basis[b];
      pm.P(a, b) = phi_value(bq, xi, x.root, y.root, x.order, y.order).coeff;
    }
  size_t k = pm.simple_count;
  pm.TT = SmallMat(k, k);
  for (size_t a = 0; a < k; ++a)
    for (size_t b = 0; b < k; ++b) pm.TT(a, b) = bq.t_form(pm.basis[a].root, pm.basis[b].root);
  pm.nondegenerate = det_of(pm.TT) != 0 && determinant(pm.P) != 0;
  return pm;
}

std::pair<ParamBraidingMatrix, RootOfUnity> symmetric_relift(const ParamBraidingMatrix& bq,
                                                              const RootOfUnity& xi) {
  BraidingMatrix q = evaluate(bq, xi);
  if (!q.is_symmetric()) fail(ErrorKind::DimensionError, "symmetric re-lift of a non-symmetric matrix");
  RootOfUnity root = make_root(xi.numerator(), 2 * xi.order());
  SmallMat b = bq.symmetrized();
  size_t n = bq.theta();
  ParamBraidingMatrix out(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      int64_t e = b(i, j);
      out(i, j) = {q(i, j) * root.pow(-e), e};
    }
  return {out, root};
}

PhiMatrix build_T(const ParamBraidingMatrix& bq, const RootOfUnity& xi, const CartanRootData& crd,
                  size_t budget) {
  ParamBraidingMatrix base = bq;
  RootOfUnity x = xi;
  bool relifted = false;
  if (!bq.is_symmetric() && evaluate(bq, xi).is_symmetric()) {
    std::tie(base, x) = symmetric_relift(bq, xi);
    relifted = true;
  }
  size_t n = base.theta();
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  ShellCursor cursor(pairs.size());
  size_t tried = 0;
  do {
    if (tried == budget) break;
    ++tried;
    ParamBraidingMatrix cand = base;
    const auto& h = cursor.current();
    for (size_t p = 0; p < pairs.size(); ++p)
      if (h[p] != 0) apply_shift(cand, pairs[p].first, pairs[p].second, checked_mul(h[p], x.order()));
    PhiMatrix pm = phi_matrix(cand, x, crd);
    if (pm.nondegenerate) {
      pm.relifted = relifted;
      pm.shifts = h;
      pm.candidates = tried;
      return pm;
    }
  } while (cursor.next());
  fail(ErrorKind::SearchFailed, "no nondegenerate exponent matrix among " + std::to_string(tried) + " candidates");
}

SmallMat cartan_recovery(const PhiMatrix& pm) {
  size_t k = pm.simple_count;
  SmallMat c(k, k);
  for (size_t a = 0; a < k; ++a) {
    const Rational& d = pm.P(a, a);
    if (d == 0) fail(ErrorKind::RecoveryMismatch, "vanishing diagonal entry of the phi-matrix");
    for (size_t b = 0; b < k; ++b) {
      Rational r = (pm.P(a, b) + pm.P(b, a)) / d;
      if (r.get_den() != 1 || !r.get_num().fits_slong_p())
        fail(ErrorKind::RecoveryMismatch, "non-integer recovered entry " + to_string(r));
      c(a, b) = r.get_num().get_si();
    }
  }
  return c;
}

EtaIdentities eta_identities(const PhiMatrix& pm, const CartanRootData& crd, int theta, int k) {
  EtaIdentities e;
  if (!crd.has_eta()) return e;
  e.present = true;
  size_t h = pm.basis.size() - 1;
  for (size_t a = 0; a < pm.simple_count; ++a)
    if (pm.P(a, h) + pm.P(h, a) != 0) e.antisymmetric = false;
  e.phi_eta_eta = pm.P(h, h);
  Rational n = crd.Ntt;
  e.closed_form_magnitude = n * n * (theta - k + (theta - k + 1) * (theta - k + 1));
  e.magnitude_matches = abs(e.phi_eta_eta) == e.closed_form_magnitude;
  return e;
}

std::string SScalar::str() const { return phi.str() + "/(1-" + q.str() + ")^" + std::to_string(n); }

RatMat normalized_gram(const SemisimpleType& st, size_t tilde_size) {
  size_t k = st.cartan.rows();
  RatMat g(tilde_size, tilde_size, Rational(0));
  for (size_t a = 0; a < k; ++a)
    for (size_t b = 0; b < k; ++b) {
      g(a, b) = Rational(st.length2[a] * st.cartan(a, b), 2);
      g(a, b).canonicalize();
    }
  for (size_t a = k; a < tilde_size; ++a) g(a, a) = 2;
  return g;
}

Scalars scalars(const PhiMatrix& pm, const SemisimpleType& st) {
  Scalars out;
  size_t n = pm.basis.size();
  for (size_t a = 0; a < n; ++a) {
    Rational l2 = a < pm.simple_count ? Rational(st.length2[a]) : Rational(2);
    out.length2.push_back(l2);
    out.kappa.push_back({2 * pm.P(a, a) / l2});
  }
  BraidingMatrix q = evaluate(pm.bq, pm.xi);
  for (size_t a = 0; a < pm.simple_count; ++a) {
    const auto& b = pm.basis[a];
    out.s.push_back({pm.at(a, a), bilinear(q, b.root, b.root), b.order});
  }
  for (const auto& comp : st.components)
    for (size_t node : comp.nodes)
      if (out.kappa[node].coeff != out.kappa[comp.nodes.front()].coeff) out.kappa_constant_per_factor = false;
  return out;
}

RatMat ctilde_matrix(const PhiMatrix& pm) {
  auto inv = inverse(pm.P.transpose());
  if (!inv) fail(ErrorKind::NonDegeneracyViolated, "phi-matrix is singular");
  return *inv * pm.P;
}

SmallMat generic_cartan_matrix(const ParamBraidingMatrix& bq) {
  constexpr int64_t kLimit = 4096;
  size_t n = bq.theta();
  SmallMat c(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) {
        c(i, j) = 2;
        continue;
      }
      const Monomial& d = bq(i, i);
      Monomial tilde = bq(i, j) * bq(j, i);
      int64_t m = 0;
      for (;; ++m) {
        if (m == kLimit)
          fail(ErrorKind::NotArithmetic, "generic Cartan entry (" + std::to_string(i) + "," + std::to_string(j) +
                                             ") is unbounded");
        if (d.exp == 0 && q_number_is_zero(m + 1, d.coeff)) break;
        if ((d.pow(m) * tilde).is_one()) break;
      }
      c(i, j) = -m;
    }
  return c;
}

LambdaReport lambda_and_denominators(const ParamBraidingMatrix& bq, const RootOfUnity& xi) {
  LambdaReport out;
  out.generic_cartan = generic_cartan_matrix(bq);
  size_t n = bq.theta();
  out.lambda_nonzero.assign(n, std::vector<bool>(n, true));
  std::set<RootOfUnity> zeros;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      int64_t c = -out.generic_cartan(i, j);
      RootOfUnity qii = bq(i, i).at(xi);
      bool nonzero = true;
      for (int64_t k = 1; k <= c; ++k)
        if (q_number_is_zero(k, qii)) nonzero = false;
      for (int64_t s = 0; s < c; ++s) {
        Denominator d;
        d.i = i;
        d.j = j;
        d.s = s;
        d.value = bq(i, i).pow(s) * bq(i, j) * bq(j, i);
        d.nonzero_at_xi = !d.value.at(xi).is_one();
        if (d.value.exp != 0) {
          // ν^m = w with w = coeff^{-1} (m > 0) or coeff (m < 0).
          int64_t m = d.value.exp < 0 ? -d.value.exp : d.value.exp;
          RootOfUnity w = d.value.exp > 0 ? d.value.coeff.inverse() : d.value.coeff;
          for (int64_t k = 0; k < m; ++k)
            d.zeros.push_back(make_root(w.numerator() + k * w.order(), checked_mul(w.order(), m)));
          std::sort(d.zeros.begin(), d.zeros.end());
          zeros.insert(d.zeros.begin(), d.zeros.end());
        }
        nonzero = nonzero && d.nonzero_at_xi;
        out.specialization_valid = out.specialization_valid && d.nonzero_at_xi;
        out.denominators.push_back(std::move(d));
      }
      out.lambda_nonzero[i][j] = nonzero;
    }
  out.zero_set.assign(zeros.begin(), zeros.end());
  return out;
}

ParamBraidingMatrix rho_param(const ParamBraidingMatrix& bq, const SmallMat& c, size_t i) {
  size_t n = bq.theta();
  ParamBraidingMatrix r(n);
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k)
      r(j, k) = bq(j, k) * bq(i, k).pow(-c(i, j)) * bq(j, i).pow(-c(i, k)) * bq(i, i).pow(c(i, j) * c(i, k));
  return r;
}

EquivarianceResult phi_equivariance_check(const PhiMatrix& pm, const RootSystem& rs, const CartanRootData& crd,
                                          size_t i) {
  EquivarianceResult res;
  res.i = i;
  const Groupoid& g = rs.groupoid;
  const SmallMat& c = g.cartan[0];
  const BraidingMatrix& q = g.objects[0];
  res.cartan_vertex = is_cartan_vertex(q, c, i);
  size_t p = g.rho[0][i];
  ParamBraidingMatrix rq = rho_param(pm.bq, c, i);
  res.evaluation_matches = evaluate(rq, pm.xi) == g.objects[p];

  SmallMat b2 = rq.symmetrized();
  CartanRootData other = cartan_roots(g.objects[p], rs.per_object[p], &b2);

  std::vector<ScaledRoot> image;
  for (const auto& m : pm.basis) {
    RootVec v = reflect_root(c, i, m.root);
    image.push_back({v, m.order, scaled(v, m.order)});
  }

  // Every underline root of ρ_i(q) must have integer coordinates of one sign.
  size_t n = image.size();
  RatMat cols(crd.theta, n);
  for (size_t a = 0; a < n; ++a)
    for (size_t r = 0; r < crd.theta; ++r) cols(r, a) = image[a].underline[r];
  res.basis_valid = rank(cols) == n;
  for (const auto& beta : other.O_plus) {
    if (!res.basis_valid) break;
    RatVec target(beta.underline.begin(), beta.underline.end());
    auto x = solve(cols, target);
    if (!x) {
      res.basis_valid = false;
      break;
    }
    bool pos = true, neg = true;
    for (const auto& v : *x) {
      if (v.get_den() != 1) res.basis_valid = false;
      if (v < 0) pos = false;
      if (v > 0) neg = false;
    }
    if (!pos && !neg) res.basis_valid = false;
  }

  std::vector<RootVec> lhs, rhs;
  for (size_t a = 0; a < pm.simple_count; ++a) lhs.push_back(image[a].underline);
  for (const auto& s : other.Pi) rhs.push_back(s.underline);
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  res.set_equal = lhs == rhs;

  res.phi_equal = true;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      PhiValue v = phi_value(rq, pm.xi, image[a].root, image[b].root, image[a].order, image[b].order);
      if (v.coeff != pm.P(a, b)) res.phi_equal = false;
    }
  return res;
}

// ---- m* ----

FormalVec unit(size_t idx, const FormalScalar& c) {
  FormalVec v;
  add_to(v, idx, c);
  return v;
}

FormalVec operator+(const FormalVec& a, const FormalVec& b) {
  FormalVec s = a;
  for (const auto& [i, c] : b) add_to(s, i, c);
  return s;
}

FormalVec operator-(const FormalVec& a, const FormalVec& b) {
  FormalVec s = a;
  for (const auto& [i, c] : b) add_to(s, i, -c);
  return s;
}

FormalVec operator*(const FormalScalar& c, const FormalVec& v) {
  FormalVec s;
  for (const auto& [i, x] : v) add_to(s, i, c * x);
  return s;
}

FormalWedge wedge(const FormalVec& a, const FormalVec& b) {
  FormalWedge w;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) add_to(w, i, j, x * y);
  return w;
}

FormalWedge operator-(const FormalWedge& a, const FormalWedge& b) {
  FormalWedge s = a;
  for (const auto& [ij, c] : b) add_to(s, ij.first, ij.second, -c);
  return s;
}

std::string to_string(const FormalVec& v, const std::vector<BasisLabel>& basis) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : v) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")" + basis[i].name;
  }
  return out;
}

std::string to_string(const FormalWedge& w, const std::vector<BasisLabel>& basis) {
  if (w.empty()) return "0";
  std::string out;
  for (const auto& [ij, c] : w) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")" + basis[ij.first].name + "^" + basis[ij.second].name;
  }
  return out;
}

LieBialgebra::LieBialgebra(const PhiMatrix& pm, const CartanRootData& crd) : pm_(pm) {
  roots_ = crd.O_plus.size();
  cartan_ = pm.basis.size();
  size_t theta = crd.theta;
  for (size_t r = 0; r < roots_; ++r)
    basis_.push_back({GenKind::de, r, crd.O_plus[r].underline, "de[" + to_string(crd.O_plus[r].root) + "]"});
  for (size_t r = 0; r < roots_; ++r)
    basis_.push_back(
        {GenKind::df, r, negated(crd.O_plus[r].underline), "df[" + to_string(crd.O_plus[r].root) + "]"});
  for (size_t m = 0; m < cartan_; ++m)
    basis_.push_back({GenKind::dK, m, RootVec(theta, 0), "dK[" + to_string(pm.basis[m].root) + "]"});
  for (size_t m = 0; m < cartan_; ++m)
    basis_.push_back({GenKind::dL, m, RootVec(theta, 0), "dL[" + to_string(pm.basis[m].root) + "]"});

  pi_of_root_.assign(roots_, std::nullopt);
  for (size_t p = 0; p < pm.simple_count; ++p) {
    size_t r = 0;
    while (r < roots_ && crd.O_plus[r].underline != pm.basis[p].underline) ++r;
    if (r == roots_) fail(ErrorKind::InternalInvariantViolation, "simple root missing from O_plus");
    simple_.push_back(r);
    pi_of_root_[r] = p;
  }
  for (size_t r = 0; r < roots_; ++r) {
    d_.push_back(FormalScalar::symbol(r));
    weights_.push_back(crd.O_plus[r].underline);
    weights_.push_back(negated(crd.O_plus[r].underline));
  }
  std::sort(weights_.begin(), weights_.end());
  phi_mu_r_.assign(cartan_, std::vector<FormalScalar>(roots_));
  phi_r_mu_.assign(roots_, std::vector<FormalScalar>(cartan_));
  for (size_t m = 0; m < cartan_; ++m)
    for (size_t r = 0; r < roots_; ++r) {
      const auto& mu = pm.basis[m];
      const auto& beta = crd.O_plus[r];
      phi_mu_r_[m][r] = phi_value(pm.bq, pm.xi, mu.root, beta.root, mu.order, beta.order).formal();
      phi_r_mu_[r][m] = phi_value(pm.bq, pm.xi, beta.root, mu.root, beta.order, mu.order).formal();
    }
}

bool LieBialgebra::is_weight(const RootVec& d) const {
  return is_zero(d) || std::binary_search(weights_.begin(), weights_.end(), d);
}

std::optional<FormalVec> LieBialgebra::bracket(size_t a, size_t b) const {
  if (a == b) return FormalVec{};
  const BasisLabel& x = basis_[a];
  const BasisLabel& y = basis_[b];
  bool xc = x.kind == GenKind::dK || x.kind == GenKind::dL;
  bool yc = y.kind == GenKind::dK || y.kind == GenKind::dL;
  if (xc && yc) return FormalVec{};
  if (!xc && yc) {
    auto r = bracket(b, a);
    return FormalScalar(-1) * *r;
  }
  if (xc) {
    size_t m = x.index, r = y.index;
    const FormalScalar& phi = x.kind == GenKind::dK ? phi_mu_r_[m][r] : phi_r_mu_[r][m];
    return unit(b, y.kind == GenKind::de ? -phi : phi);
  }
  if (x.kind == GenKind::df && y.kind == GenKind::de) {
    auto r = bracket(b, a);
    if (!r) return std::nullopt;
    return FormalScalar(-1) * *r;
  }
  if (x.kind == GenKind::de && y.kind == GenKind::df && x.index == y.index) {
    auto p = pi_of_root_[x.index];
    if (!p) return std::nullopt;
    FormalScalar c = -pm_.at(*p, *p).formal() / d_[x.index];
    return unit(dK(*p), c) + unit(dL(*p), c);
  }
  RootVec deg = add(x.degree, y.degree);
  if (is_weight(deg)) return std::nullopt;
  return FormalVec{};
}

std::optional<FormalVec> LieBialgebra::bracket(const FormalVec& u, const FormalVec& v) const {
  FormalVec out;
  for (const auto& [i, a] : u)
    for (const auto& [j, b] : v) {
      auto r = bracket(i, j);
      if (!r) return std::nullopt;
      out = out + (a * b) * *r;
    }
  return out;
}

std::optional<FormalWedge> LieBialgebra::cobracket(const FormalVec& u) const {
  FormalWedge out;
  for (const auto& [i, c] : u) {
    const BasisLabel& x = basis_[i];
    if (x.kind == GenKind::dK || x.kind == GenKind::dL) continue;
    auto p = pi_of_root_[x.index];
    if (!p) return std::nullopt;
    size_t partner = x.kind == GenKind::de ? dK(*p) : dL(*p);
    add_to(out, partner, i, c);
  }
  return out;
}

std::optional<FormalWedge> LieBialgebra::ad(const FormalVec& a, const FormalWedge& w) const {
  FormalWedge out;
  for (const auto& [ij, c] : w) {
    auto l = bracket(a, unit(ij.first));
    auto r = bracket(a, unit(ij.second));
    if (!l || !r) return std::nullopt;
    for (const auto& [k, x] : *l) add_to(out, k, ij.second, c * x);
    for (const auto& [k, x] : *r) add_to(out, ij.first, k, c * x);
  }
  return out;
}

std::vector<TableEntry> LieBialgebra::bracket_table() const {
  std::vector<TableEntry> out;
  for (size_t m = 2 * roots_; m < basis_.size(); ++m)
    for (size_t r = 0; r < 2 * roots_; ++r)
      out.push_back({"[" + basis_[m].name + ", " + basis_[r].name + "]", to_string(*bracket(m, r), basis_)});
  for (size_t p : simple_)
    for (size_t s : simple_) {
      auto v = bracket(de(p), df(s));
      out.push_back({"[" + basis_[de(p)].name + ", " + basis_[df(s)].name + "]",
                     v ? to_string(*v, basis_) : "undetermined"});
    }
  return out;
}

std::vector<TableEntry> LieBialgebra::cobracket_table() const {
  std::vector<TableEntry> out;
  for (size_t r : simple_) {
    out.push_back({"delta(" + basis_[de(r)].name + ")", to_string(*cobracket(unit(de(r))), basis_)});
    out.push_back({"delta(" + basis_[df(r)].name + ")", to_string(*cobracket(unit(df(r))), basis_)});
  }
  for (size_t m = 2 * roots_; m < basis_.size(); ++m)
    out.push_back({"delta(" + basis_[m].name + ")", to_string(*cobracket(unit(m)), basis_)});
  return out;
}

LieBialgebra mstar_structure(const PhiMatrix& pm, const CartanRootData& crd, const BraidingMatrix& q) {
  auto verdict = check_centrality_full(q, crd);
  if (!verdict.pass)
    fail(ErrorKind::ConditionViolated, "centrality fails at root " + to_string(verdict.violations.front().beta));
  if (!pm.nondegenerate) fail(ErrorKind::ConditionViolated, "phi-matrix is singular");
  return LieBialgebra(pm, crd);
}

EmbeddingReport chevalley_embedding(const LieBialgebra& lb, const SmallMat& cm_tilde, bool no_throw) {
  EmbeddingReport rep;
  const PhiMatrix& pm = lb.phi();
  size_t k = pm.simple_count;
  size_t n = pm.basis.size();
  for (size_t p = 0; p < k; ++p) {
    size_t r = lb.simple_root(p);
    FormalScalar phi = pm.at(p, p).formal();
    rep.x.push_back(unit(lb.df(r)));
    rep.y.push_back(unit(lb.de(r), lb.D(r) / (phi * phi)));
  }
  for (size_t m = 0; m < n; ++m)
    if (pm.P(m, m) == 0) rep.failures.push_back("phi vanishes on the diagonal at " + to_string(pm.basis[m].root));
  if (!rep.failures.empty()) {
    if (!no_throw) fail(ErrorKind::EmbeddingMismatch, rep.failures.front());
    return rep;
  }
  for (size_t m = 0; m < n; ++m) {
    FormalScalar inv = pm.at(m, m).formal().inverse();
    rep.h.push_back(unit(lb.dK(m), inv) + unit(lb.dL(m), inv));
  }

  const auto& basis = lb.basis();
  auto expect = [&](const std::string& name, const std::optional<FormalVec>& got, const FormalVec& want) {
    ++rep.relations_checked;
    if (!got)
      rep.failures.push_back(name + ": undetermined");
    else if (!is_zero(*got - want))
      rep.failures.push_back(name + ": got " + to_string(*got, basis) + ", expected " + to_string(want, basis));
  };
  for (size_t b = 0; b < k; ++b) {
    std::string s = std::to_string(b);
    expect("[h" + s + ",x" + s + "]", lb.bracket(rep.h[b], rep.x[b]), FormalScalar(2) * rep.x[b]);
    expect("[h" + s + ",y" + s + "]", lb.bracket(rep.h[b], rep.y[b]), FormalScalar(-2) * rep.y[b]);
    expect("[x" + s + ",y" + s + "]", lb.bracket(rep.x[b], rep.y[b]), rep.h[b]);
  }
  for (size_t a = 0; a < n; ++a)
    for (size_t g = 0; g < k; ++g) {
      if (a == g) continue;
      std::string s = std::to_string(a) + "," + std::to_string(g);
      FormalScalar c = Rational(cm_tilde(a, g));
      expect("[h,x](" + s + ")", lb.bracket(rep.h[a], rep.x[g]), c * rep.x[g]);
      expect("[h,y](" + s + ")", lb.bracket(rep.h[a], rep.y[g]), -c * rep.y[g]);
      if (a < k) expect("[x,y](" + s + ")", lb.bracket(rep.x[a], rep.y[g]), FormalVec{});
    }
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b) expect("[h,h]", lb.bracket(rep.h[a], rep.h[b]), FormalVec{});

  std::vector<FormalVec> gens;
  for (size_t p = 0; p < k; ++p) gens.push_back(rep.x[p]), gens.push_back(rep.y[p]);
  for (size_t m = 0; m < n; ++m) gens.push_back(rep.h[m]);
  for (size_t m = 0; m < n; ++m) gens.push_back(unit(lb.dK(m))), gens.push_back(unit(lb.dL(m)));

  auto nested = [&](const FormalVec& a, const FormalVec& b, const FormalVec& c) -> std::optional<FormalVec> {
    auto inner = lb.bracket(b, c);
    if (!inner) return std::nullopt;
    return lb.bracket(a, *inner);
  };
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i; j < gens.size(); ++j)
      for (size_t l = j; l < gens.size(); ++l) {
        auto t1 = nested(gens[i], gens[j], gens[l]);
        auto t2 = nested(gens[j], gens[l], gens[i]);
        auto t3 = nested(gens[l], gens[i], gens[j]);
        if (!t1 || !t2 || !t3) {
          ++rep.jacobi_skipped;
          continue;
        }
        ++rep.jacobi_checked;
        if (!is_zero(*t1 + *t2 + *t3)) ++rep.jacobi_failed;
      }

  std::vector<FormalVec> cgens;
  for (size_t p = 0; p < k; ++p) cgens.push_back(rep.x[p]), cgens.push_back(rep.y[p]);
  for (size_t m = 0; m < n; ++m) cgens.push_back(unit(lb.dK(m))), cgens.push_back(unit(lb.dL(m)));
  for (size_t i = 0; i < cgens.size(); ++i)
    for (size_t j = i + 1; j < cgens.size(); ++j) {
      const auto& a = cgens[i];
      const auto& b = cgens[j];
      auto ab = lb.bracket(a, b);
      std::optional<FormalWedge> lhs = ab ? lb.cobracket(*ab) : std::nullopt;
      auto da = lb.cobracket(a);
      auto db = lb.cobracket(b);
      std::optional<FormalWedge> l = db ? lb.ad(a, *db) : std::nullopt;
      std::optional<FormalWedge> r = da ? lb.ad(b, *da) : std::nullopt;
      if (!lhs || !l || !r) {
        ++rep.cocycle_skipped;
        continue;
      }
      ++rep.cocycle_checked;
      if (!(*lhs - (*l - *r)).empty()) ++rep.cocycle_failed;
    }

  // h̃: Σ_μ ℘_μγ a_μ + ℘_γμ b_μ = 0 for every γ.
  RatMat sys(n, 2 * n);
  for (size_t g = 0; g < n; ++g)
    for (size_t m = 0; m < n; ++m) {
      sys(g, m) = pm.P(m, g);
      sys(g, n + m) = pm.P(g, m);
    }
  rep.htilde_basis = nullspace(sys);
  RatMat stacked(rep.htilde_basis.size() + n, 2 * n, Rational(0));
  for (size_t r = 0; r < rep.htilde_basis.size(); ++r)
    for (size_t c = 0; c < 2 * n; ++c) stacked(r, c) = rep.htilde_basis[r][c];
  for (size_t m = 0; m < n; ++m) {
    stacked(rep.htilde_basis.size() + m, m) = 1;
    stacked(rep.htilde_basis.size() + m, n + m) = 1;
  }
  rep.htilde_complement = rank(stacked) == rep.htilde_basis.size() + n;

  if (!no_throw && !rep.ok(n)) {
    std::string why = !rep.failures.empty() ? rep.failures.front()
                      : rep.jacobi_failed   ? "Jacobi identity fails"
                      : rep.cocycle_failed  ? "cocycle identity fails"
                                            : "h-tilde complement has the wrong dimension";
    fail(ErrorKind::EmbeddingMismatch, why);
  }
  return rep;
}

BorelReport borel_and_form(const PhiMatrix& pm, bool no_throw) {
  BorelReport rep;
  size_t n = pm.basis.size();
  const RatMat& P = pm.P;
  rep.gram = RatMat(2 * n, 2 * n, Rational(0));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      rep.gram(a, n + b) = P(a, b);
      rep.gram(n + b, a) = P(a, b);
    }
  rep.gram_nondegenerate = determinant(rep.gram) != 0;
  auto pinv = inverse(P);
  auto ptinv = inverse(P.transpose());
  if (!pinv || !ptinv) fail(ErrorKind::NonDegeneracyViolated, "phi-matrix is singular");
  rep.leq_map = *pinv * P.transpose();

  // An element (h, h') of g̃ ⊕ h̃ with h = Σ c_μ(dK_μ + dL_μ) and h' given by b
  // in the same coordinates is c ⊕ c plus the h̃ vector (a, b), a = −𝒫̃^{-T}𝒫̃ b.
  RatMat pt_inv_p = *ptinv * P;
  auto assemble = [&](const RatVec& c, const RatVec& b) {
    RatVec v(2 * n);
    for (size_t m = 0; m < n; ++m) {
      Rational a = 0;
      for (size_t g = 0; g < n; ++g) a -= pt_inv_p(m, g) * b[g];
      v[m] = c[m] + a;
      v[n + m] = c[m] + b[m];
    }
    return v;
  };
  for (size_t m = 0; m < n; ++m) {
    RatVec c(n, Rational(0));
    c[m] = 1;
    RatVec minus(n), mapped(n, Rational(0));
    for (size_t g = 0; g < n; ++g) {
      minus[g] = -c[g];
      for (size_t h = 0; h < n; ++h) mapped[g] += rep.leq_map(g, h) * c[h];
    }
    rep.geq_cartan.push_back(assemble(c, minus));
    rep.leq_cartan.push_back(assemble(c, mapped));
  }
  auto form = [&](const RatVec& u, const RatVec& v) {
    Rational s = 0;
    for (size_t i = 0; i < 2 * n; ++i)
      for (size_t j = 0; j < 2 * n; ++j)
        if (rep.gram(i, j) != 0) s += u[i] * rep.gram(i, j) * v[j];
    return s;
  };
  auto isotropic = [&](const std::vector<RatVec>& vs) {
    for (const auto& u : vs)
      for (const auto& v : vs)
        if (form(u, v) != 0) return false;
    return true;
  };
  rep.geq_isotropic = isotropic(rep.geq_cartan);
  rep.leq_isotropic = isotropic(rep.leq_cartan);
  auto inside = [&](const std::vector<RatVec>& vs, size_t zero_from) {
    for (const auto& v : vs)
      for (size_t i = zero_from; i < zero_from + n; ++i)
        if (v[i] != 0) return false;
    return true;
  };
  rep.geq_in_K = inside(rep.geq_cartan, n);
  rep.leq_in_L = inside(rep.leq_cartan, 0);
  RatMat all(2 * n, 2 * n);
  for (size_t m = 0; m < n; ++m)
    for (size_t i = 0; i < 2 * n; ++i) {
      all(m, i) = rep.geq_cartan[m][i];
      all(n + m, i) = rep.leq_cartan[m][i];
    }
  rep.complementary = rank(all) == 2 * n;
  if (!no_throw && !rep.ok()) fail(ErrorKind::ManinCheckFailed, "Borel Cartan parts are not complementary isotropic");
  return rep;
}

}  // namespace nichols
