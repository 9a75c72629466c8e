#include "nichols/report.hpp"

#include <chrono>
#include <sstream>

namespace nichols {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  fail(ErrorKind::ParseError, "at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

const json& field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) parse_fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where + "/" + key, "missing field");
  return *it;
}

int64_t as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) parse_fail(where, "expected an integer");
  return v.get<int64_t>();
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) parse_fail(where, "expected a string");
  return v.get<std::string>();
}

std::string strip_kind(const Error& e) {
  std::string w = e.what();
  std::string pre = std::string(to_string(e.kind())) + ": ";
  return w.rfind(pre, 0) == 0 ? w.substr(pre.size()) : w;
}

RootOfUnity as_root(const json& v, const std::string& where) {
  std::string s = as_string(v, where);
  try {
    return parse_root(s);
  } catch (const Error& e) {
    fail(e.kind(), "at " + where + ": " + strip_kind(e));
  }
}

template <class F>
auto square(const json& v, const std::string& where, F&& cell) {
  using T = decltype(cell(v, where));
  if (!v.is_array() || v.empty()) parse_fail(where, "expected a non-empty array of rows");
  size_t n = v.size();
  std::vector<std::vector<T>> rows;
  for (size_t i = 0; i < n; ++i) {
    std::string w = where + "/" + std::to_string(i);
    if (!v[i].is_array()) parse_fail(w, "expected a row");
    if (v[i].size() != n) fail(ErrorKind::DimensionError, "at " + w + ": row length differs from the row count");
    std::vector<T> row;
    for (size_t j = 0; j < n; ++j) row.push_back(cell(v[i][j], w + "/" + std::to_string(j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

FamilyParams parse_family(const json& f, const std::string& where) {
  FamilyParams p;
  p.name = as_string(field(f, "name", where), where + "/name");
  for (const auto& [key, val] : f.items()) {
    std::string w = where + "/" + key;
    if (key == "name") continue;
    if (key == "letter") p.letter = as_string(val, w);
    else if (key == "theta") p.theta = static_cast<int>(as_int(val, w));
    else if (key == "k") p.k = static_cast<int>(as_int(val, w));
    else if (key == "N") p.N = as_int(val, w);
    else if (key == "d1") p.d1 = as_int(val, w);
    else if (key == "d3") p.d3 = as_int(val, w);
    else if (key == "exponents") {
      if (!val.is_array()) parse_fail(w, "expected an array");
      for (size_t i = 0; i < val.size(); ++i) p.exponents.push_back(as_int(val[i], w + "/" + std::to_string(i)));
    } else {
      parse_fail(w, "unknown field");
    }
  }
  if (p.N == 0) parse_fail(where + "/N", "missing field");
  return p;
}

json j_int(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json j_rat(const Rational& r) { return to_string(r); }

json j_mat(const SmallMat& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json j_ratmat(const RatMat& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(j_rat(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json j_ratvecs(const std::vector<RatVec>& vs) {
  json out = json::array();
  for (const auto& v : vs) {
    json row = json::array();
    for (const auto& x : v) row.push_back(j_rat(x));
    out.push_back(row);
  }
  return out;
}

json j_scaled(const ScaledRoot& s) { return {{"root", s.root}, {"order", s.order}, {"underline", s.underline}}; }

json j_scaled_list(const std::vector<ScaledRoot>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(j_scaled(s));
  return out;
}

json j_quotient(const LatticeQuotient& q) {
  json out = json::array();
  for (const auto& d : q.invariant_factors) out.push_back(j_int(d));
  return out;
}

json j_braiding(const BraidingMatrix& q) {
  json rows = json::array();
  for (size_t i = 0; i < q.theta(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < q.theta(); ++j) row.push_back(q(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

json j_lift(const ParamBraidingMatrix& bq, const RootOfUnity& xi) {
  json coeffs = json::array(), exps = json::array();
  for (size_t i = 0; i < bq.theta(); ++i) {
    json c = json::array(), e = json::array();
    for (size_t j = 0; j < bq.theta(); ++j) {
      c.push_back(bq(i, j).coeff.str());
      e.push_back(bq(i, j).exp);
    }
    coeffs.push_back(c);
    exps.push_back(e);
  }
  return {{"xi", xi.str()}, {"coeffs", coeffs}, {"exponents", exps}};
}

json j_family(const FamilyParams& p) {
  json f = {{"name", p.name}, {"N", p.N}, {"theta", p.theta}};
  if (p.name == "cartan") f["letter"] = p.letter;
  if (p.name == "superA" || p.name == "superB" || p.name == "superD") f["k"] = p.k;
  if (p.name == "D21") {
    f["d1"] = p.d1;
    f["d3"] = p.d3;
  }
  if (!p.exponents.empty()) f["exponents"] = p.exponents;
  return f;
}

json j_centrality(const CentralityVerdict& v) {
  json viol = json::array();
  for (const auto& x : v.violations)
    viol.push_back({{"i", x.i}, {"beta", x.beta}, {"value", x.value.str()}});
  return {{"pass", v.pass}, {"violations", viol}};
}

json j_table(const std::vector<TableEntry>& t) {
  json out = json::array();
  for (const auto& e : t) out.push_back({{"lhs", e.lhs}, {"value", e.value}});
  return out;
}

std::string quotient_str(const LatticeQuotient& q) {
  if (q.trivial()) return "trivial";
  std::string s;
  for (const auto& d : q.invariant_factors) s += (s.empty() ? "Z/" : " x Z/") + d.get_str();
  return s;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

}  // namespace

AnalysisInput family_input(const FamilyParams& p) {
  AnalysisInput in;
  in.family = p;
  return in;
}

AnalysisInput parse_input(const json& doc) {
  if (!doc.is_object()) parse_fail("", "expected an object");
  std::string schema = as_string(field(doc, "schema", ""), "/schema");
  if (schema != kInputSchema) parse_fail("/schema", "unsupported schema \"" + schema + "\"");
  AnalysisInput in;
  for (const auto& [key, val] : doc.items())
    if (key != "schema" && key != "family" && key != "matrix" && key != "lift" && key != "label")
      parse_fail("/" + key, "unknown field");
  if (doc.contains("label")) in.label = as_string(doc["label"], "/label");
  bool has_family = doc.contains("family"), has_matrix = doc.contains("matrix");
  if (has_family == has_matrix) parse_fail("", "exactly one of \"family\" and \"matrix\" is required");
  if (has_family) {
    if (doc.contains("lift")) parse_fail("/lift", "families carry their own lift");
    in.family = parse_family(doc["family"], "/family");
    return in;
  }
  auto rows = square(doc["matrix"], "/matrix", as_root);
  in.q = BraidingMatrix::from_rows(rows);
  if (doc.contains("lift")) {
    const json& l = doc["lift"];
    in.xi = as_root(field(l, "xi", "/lift"), "/lift/xi");
    auto coeffs = square(field(l, "coeffs", "/lift"), "/lift/coeffs", as_root);
    auto exps = square(field(l, "exponents", "/lift"), "/lift/exponents", as_int);
    if (coeffs.size() != rows.size() || exps.size() != rows.size())
      fail(ErrorKind::DimensionError, "at /lift: size differs from the matrix");
    ParamBraidingMatrix bq(rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < rows.size(); ++j) bq(i, j) = {coeffs[i][j], exps[i][j]};
    in.lift = bq;
  }
  return in;
}

AnalysisInput parse_input_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ParseError, "at byte " + std::to_string(e.byte) + ": malformed JSON");
  }
  return parse_input(doc);
}

Analysis analyze(const AnalysisInput& in, const AnalysisOptions& opt) {
  Analysis a;
  a.input = in;
  std::string stage;
  auto timed = [&](const std::string& name, auto&& body) {
    stage = name;
    auto t0 = std::chrono::steady_clock::now();
    body();
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    a.timing.emplace_back(name, dt.count());
  };
  try {
    if (in.family && a.input.label.empty()) a.input.label = FamilyInstance{*in.family, {}, {}, {}, {}, false}.label();
    timed("braiding", [&] {
      if (in.family) {
        FamilyInstance inst = family(*in.family);
        RootSystem kept;
        make_central(inst, opt.caps, &kept);
        if (!kept.per_object.empty()) a.rs = std::move(kept);
        a.q = evaluate(inst.bq, inst.xi);
        a.input.q = a.q;
        a.input.lift = inst.bq;
        a.input.xi = inst.xi;
        if (in.label.empty()) a.input.label = inst.label();
        a.instance = inst;
      } else {
        a.q = in.q;
        if (in.lift) {
          check_specialization(in.xi);
          if (!(evaluate(*in.lift, in.xi) == in.q))
            fail(ErrorKind::UnsupportedParameters, "lift does not evaluate to the matrix");
        }
        if (a.input.label.empty()) a.input.label = "matrix-t" + std::to_string(in.q.theta());
      }
    });
    timed("groupoid", [&] {
      if (!a.rs) a.rs = positive_roots(a.q, opt.caps);
    });
    timed("cartan", [&] {
      SmallMat b;
      if (a.input.lift) b = a.input.lift->symmetrized();
      a.crd = cartan_roots(a.q, a.rs->base(), a.input.lift ? &b : nullptr);
      a.centrality = check_centrality(a.q, *a.crd);
      a.centrality_full = check_centrality_full(a.q, *a.crd);
      a.cm = cartan_matrix_of_g(*a.crd);
      a.st = recognize_type(*a.cm);
    });
    timed("lattice", [&] {
      a.lattice = zq_lattice_comparison(*a.crd, a.rs->base());
      a.geometry = geometry_report(*a.st, *a.crd, {});
    });
    if (a.input.lift) {
      const auto& bq = *a.input.lift;
      timed("poisson", [&] {
        a.lambda = lambda_and_denominators(bq, a.input.xi);
        a.pm = build_T(bq, a.input.xi, *a.crd, opt.t_budget);
        a.recovery = cartan_recovery(*a.pm);
        if (!(*a.recovery == *a.cm))
          fail(ErrorKind::RecoveryMismatch, "recovered Cartan matrix differs from the root-string matrix");
        if (a.crd->has_eta()) {
          const FamilyParams* f = a.instance ? &a.instance->params : nullptr;
          a.eta = eta_identities(*a.pm, *a.crd, f ? f->theta : static_cast<int>(a.q.theta()), f ? f->k : 0);
        }
        a.scalars = scalars(*a.pm, *a.st);
        for (size_t i = 0; i < a.q.theta(); ++i) a.equivariance.push_back(phi_equivariance_check(*a.pm, *a.rs, *a.crd, i));
      });
      timed("bialgebra", [&] {
        a.lb.emplace(mstar_structure(*a.pm, *a.crd, a.q));
        a.embedding = chevalley_embedding(*a.lb, extended_cartan_matrix(*a.cm, *a.crd), true);
        a.borel = borel_and_form(*a.pm, true);
        if (!a.embedding->ok(a.pm->basis.size())) {
          const auto& e = *a.embedding;
          fail(ErrorKind::EmbeddingMismatch, !e.failures.empty() ? e.failures.front()
                                             : e.jacobi_failed     ? "Jacobi identity fails"
                                             : e.cocycle_failed    ? "cocycle identity fails"
                                                                   : "h-tilde complement check fails");
        }
        if (!a.borel->ok()) fail(ErrorKind::ManinCheckFailed, "Borel Cartan parts are not complementary isotropic");
      });
      timed("ctilde", [&] {
        auto gram_inv = inverse(normalized_gram(*a.st, a.pm->basis.size()));
        if (!gram_inv) fail(ErrorKind::InternalInvariantViolation, "normalized Gram matrix is singular");
        a.ctilde = ctilde_invariants(ctilde_matrix(*a.pm), *gram_inv);
        a.geometry = geometry_report(*a.st, *a.crd, *a.ctilde);
      });
    }
  } catch (const Error& e) {
    a.error = StageError{e.kind(), strip_kind(e), stage};
  }
  return a;
}

json to_json(const Analysis& a, bool with_timing) {
  json r;
  r["schema"] = kReportSchema;
  r["engine_version"] = kEngineVersion;

  json input;
  input["label"] = a.input.label;
  input["family"] = a.input.family ? j_family(a.instance ? a.instance->params : *a.input.family) : json(nullptr);
  input["matrix"] = a.q.theta() ? j_braiding(a.q) : json(nullptr);
  input["lift"] = a.input.lift ? j_lift(*a.input.lift, a.input.xi) : json(nullptr);
  r["input"] = input;

  json status = {{"ok", !a.error}, {"exit_code", a.exit_code()}};
  status["error"] = a.error ? json{{"kind", to_string(a.error->kind)}, {"message", a.error->message},
                                   {"stage", a.error->stage}}
                            : json(nullptr);
  r["status"] = status;

  if (a.rs) {
    const auto& g = a.rs->groupoid;
    auto diagram = dynkin_diagram(a.q);
    json verts = json::array(), edges = json::array();
    for (const auto& v : diagram.vertices) verts.push_back(v.str());
    for (const auto& e : diagram.edges) edges.push_back({{"i", e.i}, {"j", e.j}, {"label", e.label.str()}});
    r["groupoid"] = {{"objects", g.objects.size()},
                     {"cartan_matrix", j_mat(g.cartan[0])},
                     {"diagram", {{"vertices", verts}, {"edges", edges}}}};
    json roots = json::array();
    for (const auto& p : a.rs->base().roots)
      roots.push_back({{"root", p.v}, {"order", p.order}, {"cartan", p.cartan}});
    r["roots"] = {{"count", a.rs->base().roots.size()}, {"positive", roots}};
  }
  if (a.crd) {
    const auto& c = *a.crd;
    json cd = {{"O_plus", j_scaled_list(c.O_plus)},
               {"Pi", j_scaled_list(c.Pi)},
               {"Pi_tilde", j_scaled_list(c.Pi_tilde)},
               {"Ntt", c.Ntt},
               {"rank_deficient", c.rank_deficient}};
    cd["eta"] = c.eta ? json(*c.eta) : json(nullptr);
    cd["eta_order"] = c.eta ? json(c.eta_order) : json(nullptr);
    if (a.cm) cd["g_cartan_matrix"] = j_mat(*a.cm);
    if (a.st) {
      cd["type"] = a.st->str();
      cd["weyl_order"] = j_int(a.st->weyl_order);
      cd["positive_roots_g"] = a.st->positive_roots;
    }
    r["cartan"] = cd;
  }
  if (a.centrality) {
    json cv = j_centrality(*a.centrality);
    cv["full"] = j_centrality(*a.centrality_full);
    r["centrality"] = cv;
  }
  if (a.pm || a.lambda) {
    json p;
    if (a.lambda) {
      const auto& l = *a.lambda;
      json dens = json::array();
      for (const auto& d : l.denominators) {
        json zeros = json::array();
        for (const auto& z : d.zeros) zeros.push_back(z.str());
        dens.push_back({{"i", d.i}, {"j", d.j}, {"s", d.s}, {"monomial", d.value.str()}, {"zeros", zeros},
                        {"nonzero_at_xi", d.nonzero_at_xi}});
      }
      json zs = json::array();
      for (const auto& z : l.zero_set) zs.push_back(z.str());
      p["lambda"] = {{"generic_cartan", j_mat(l.generic_cartan)},
                     {"lambda_nonzero", l.lambda_nonzero},
                     {"denominators", dens},
                     {"zero_set", zs},
                     {"specialization_valid", l.specialization_valid}};
    }
    if (a.pm) {
      const auto& pm = *a.pm;
      p["T"] = j_mat(pm.T);
      p["TT"] = j_mat(pm.TT);
      p["phi"] = j_ratmat(pm.P);
      p["phi_normalization"] = "coefficients of xi^-1";
      p["nondegenerate"] = pm.nondegenerate;
      p["relifted"] = pm.relifted;
      p["lift"] = j_lift(pm.bq, pm.xi);
      p["shifts"] = pm.shifts;
      p["candidates"] = pm.candidates;
    }
    if (a.recovery) p["recovery_matrix"] = j_mat(*a.recovery);
    if (a.eta) {
      const auto& e = *a.eta;
      json ej = {{"antisymmetric", e.antisymmetric}, {"phi_eta_eta", j_rat(e.phi_eta_eta)},
                 {"nonzero", e.phi_eta_eta != 0}};
      bool closed_form = a.instance && a.instance->params.name == "superA";
      ej["closed_form_magnitude"] = closed_form ? j_rat(e.closed_form_magnitude) : json(nullptr);
      ej["magnitude_matches"] = closed_form ? json(e.magnitude_matches) : json(nullptr);
      ej["xi_power_note"] = "computed value is a multiple of xi^-1; the closed form carries xi";
      p["eta"] = ej;
    }
    if (a.scalars) {
      const auto& s = *a.scalars;
      json kappa = json::array(), sb = json::array(), l2 = json::array();
      for (const auto& k : s.kappa) kappa.push_back(j_rat(k.coeff));
      for (const auto& x : s.length2) l2.push_back(j_rat(x));
      for (const auto& x : s.s) sb.push_back({{"phi", j_rat(x.phi.coeff)}, {"q", x.q.str()}, {"N", x.n}});
      p["kappa"] = kappa;
      p["length2"] = l2;
      p["kappa_constant_per_factor"] = s.kappa_constant_per_factor;
      p["s"] = sb;
    }
    if (!a.equivariance.empty()) {
      json eq = json::array();
      for (const auto& e : a.equivariance)
        eq.push_back({{"i", e.i},
                      {"cartan_vertex", e.cartan_vertex},
                      {"evaluation_matches", e.evaluation_matches},
                      {"basis_valid", e.basis_valid},
                      {"set_equal", e.set_equal},
                      {"phi_equal", e.phi_equal},
                      {"pass", e.pass()}});
      p["equivariance"] = eq;
    }
    r["poisson"] = p;
  } else {
    r["poisson"] = nullptr;
  }
  if (a.lb) {
    const auto& lb = *a.lb;
    json basis = json::array();
    for (const auto& b : lb.basis()) basis.push_back({{"name", b.name}, {"degree", b.degree}});
    json bj = {{"dimension", lb.dimension()},
               {"expected_dimension", 2 * lb.root_count() + 2 * lb.cartan_count()},
               {"basis", basis},
               {"brackets", j_table(lb.bracket_table())},
               {"cobrackets", j_table(lb.cobracket_table())}};
    if (a.embedding) {
      const auto& e = *a.embedding;
      json x = json::array(), y = json::array(), h = json::array();
      for (const auto& v : e.x) x.push_back(to_string(v, lb.basis()));
      for (const auto& v : e.y) y.push_back(to_string(v, lb.basis()));
      for (const auto& v : e.h) h.push_back(to_string(v, lb.basis()));
      bj["chevalley"] = {{"x", x},
                         {"y", y},
                         {"h", h},
                         {"relations_checked", e.relations_checked},
                         {"relation_failures", e.failures},
                         {"jacobi", {{"checked", e.jacobi_checked}, {"skipped", e.jacobi_skipped}, {"failed", e.jacobi_failed}}},
                         {"cocycle", {{"checked", e.cocycle_checked}, {"skipped", e.cocycle_skipped}, {"failed", e.cocycle_failed}}},
                         {"htilde_basis", j_ratvecs(e.htilde_basis)},
                         {"htilde_complement", e.htilde_complement}};
    }
    r["bialgebra"] = bj;
  }
  if (a.borel) {
    const auto& b = *a.borel;
    r["manin_checks"] = {{"cartan_gram", j_ratmat(b.gram)},
                         {"gram_nondegenerate", b.gram_nondegenerate},
                         {"leq_map", j_ratmat(b.leq_map)},
                         {"geq_cartan", j_ratvecs(b.geq_cartan)},
                         {"leq_cartan", j_ratvecs(b.leq_cartan)},
                         {"geq_isotropic", b.geq_isotropic},
                         {"leq_isotropic", b.leq_isotropic},
                         {"geq_in_dK_span", b.geq_in_K},
                         {"leq_in_dL_span", b.leq_in_L},
                         {"complementary", b.complementary},
                         {"nilradicals", "pair trivially by degree"}};
  }
  if (a.lattice) {
    json l = {{"lambda_equal", a.lattice->equal}, {"extra", a.lattice->extra}};
    l["ctilde"] = a.ctilde ? j_quotient(*a.ctilde) : json(nullptr);
    r["lattices"] = l;
  }
  if (a.geometry) {
    const auto& g = *a.geometry;
    r["geometry"] = {{"weyl_order", j_int(g.weyl_order)},
                     {"double_bruhat_cell_count", j_int(g.double_bruhat_cells)},
                     {"richardson_cell_count", j_int(g.richardson_cells)},
                     {"hz_isoclass_upper_bound", j_int(g.hz_isoclass_upper_bound)},
                     {"dim_M", g.dim_M},
                     {"dim_M_geq", g.dim_M_geq},
                     {"dim_M_plus", g.dim_M_plus},
                     {"borel_dimension", g.borel_dimension},
                     {"dimension_consistent", g.dimension_consistent},
                     {"ctilde", a.ctilde ? j_quotient(g.ctilde) : json(nullptr)},
                     {"leaves", a.ctilde ? json(g.leaves) : json(nullptr)}};
  }
  if (with_timing) {
    json t = json::object();
    for (const auto& [k, v] : a.timing) t[k] = v;
    r["timing"] = t;
  }
  return r;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string to_text(const Analysis& a) {
  std::ostringstream os;
  os << "label: " << a.input.label << "\n";
  if (a.q.theta()) os << "theta: " << a.q.theta() << "\n";
  if (a.rs) os << "groupoid objects: " << a.rs->groupoid.objects.size() << "\npositive roots: " << a.rs->base().roots.size() << "\n";
  if (a.crd) {
    os << "O_plus:";
    for (const auto& s : a.crd->O_plus) os << " " << to_string(s.root);
    os << "\nPi_tilde:";
    for (const auto& s : a.crd->Pi_tilde) os << " " << to_string(s.underline);
    os << "\n";
  }
  if (a.st) os << "type: " << a.st->str() << "\nweyl order: " << a.st->weyl_order.get_str() << "\n";
  if (a.centrality) os << "centrality: " << (a.centrality->pass ? "pass" : "fail") << "\n";
  if (a.pm) {
    os << "nondegenerate: " << yes(a.pm->nondegenerate) << " (candidates " << a.pm->candidates
       << (a.pm->relifted ? ", symmetric re-lift" : "") << ")\n";
    os << "phi (xi^-1 coefficients):\n";
    for (size_t i = 0; i < a.pm->P.rows(); ++i) {
      os << " ";
      for (size_t j = 0; j < a.pm->P.cols(); ++j) os << " " << to_string(a.pm->P(i, j));
      os << "\n";
    }
  }
  if (a.recovery) os << "recovery matches root strings: " << yes(*a.recovery == *a.cm) << "\n";
  if (!a.equivariance.empty()) {
    bool all = true;
    for (const auto& e : a.equivariance) all = all && e.pass();
    os << "equivariance: " << (all ? "pass" : "fail") << "\n";
  }
  if (a.lb) os << "dim m*: " << a.lb->dimension() << "\n";
  if (a.embedding)
    os << "jacobi: " << a.embedding->jacobi_checked << " checked, " << a.embedding->jacobi_skipped << " skipped, "
       << a.embedding->jacobi_failed << " failed\ncocycle: " << a.embedding->cocycle_checked << " checked, "
       << a.embedding->cocycle_skipped << " skipped, " << a.embedding->cocycle_failed << " failed\n";
  if (a.borel) os << "manin checks: " << (a.borel->ok() ? "pass" : "fail") << "\n";
  if (a.lattice) os << "lambda = lambda': " << yes(a.lattice->equal) << "\n";
  if (a.ctilde) os << "ctilde: " << quotient_str(*a.ctilde) << "\n";
  if (a.geometry)
    os << "cells: " << a.geometry->double_bruhat_cells.get_str() << "\ndim M_geq: " << a.geometry->dim_M_geq << "\n";
  if (a.error)
    os << "status: " << to_string(a.error->kind) << " in " << a.error->stage << ": " << a.error->message << "\n";
  else
    os << "status: ok\n";
  return os.str();
}

std::string to_dot(const Analysis& a) {
  std::ostringstream os;
  os << "graph dynkin {\n  node [shape=circle];\n";
  if (a.q.theta()) {
    auto d = dynkin_diagram(a.q);
    for (size_t i = 0; i < d.vertices.size(); ++i)
      os << "  v" << i << " [label=\"" << d.vertices[i].str() << "\"];\n";
    for (const auto& e : d.edges) os << "  v" << e.i << " -- v" << e.j << " [label=\"" << e.label.str() << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string sweep_header() { return "label\ttype\tweyl_order\tnondegenerate\tcentrality\tstatus\n"; }

std::string to_string(const SweepRow& r) {
  return r.label + "\t" + r.type + "\t" + r.weyl_order + "\t" + r.nondegenerate + "\t" + r.centrality + "\t" +
         r.status + "\n";
}

SweepRow sweep_row(const Analysis& a) {
  SweepRow r;
  r.label = a.input.label;
  r.type = a.st ? a.st->str() : "-";
  r.weyl_order = a.st ? a.st->weyl_order.get_str() : "-";
  r.nondegenerate = a.pm ? yes(a.pm->nondegenerate) : "-";
  r.centrality = a.centrality ? (a.centrality->pass ? "pass" : "fail") : "-";
  r.status = a.error ? to_string(a.error->kind) : "ok";
  return r;
}

}  // namespace nichols
