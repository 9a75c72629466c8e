#include "nichols/geometry.hpp"

namespace nichols {

GeometryReport geometry_report(const SemisimpleType& st, const CartanRootData& crd, const LatticeQuotient& ctilde) {
  GeometryReport g;
  g.weyl_order = st.weyl_order;
  g.double_bruhat_cells = st.weyl_order;
  g.richardson_cells = st.weyl_order;
  g.hz_isoclass_upper_bound = st.weyl_order;
  g.dim_M_plus = crd.O_plus.size();
  g.dim_M_geq = crd.O_plus.size() + crd.Pi_tilde.size();
  g.dim_M = 2 * g.dim_M_geq;
  g.borel_dimension = static_cast<size_t>(st.positive_roots) + static_cast<size_t>(st.rank()) + (crd.has_eta() ? 1 : 0);
  g.dimension_consistent = g.borel_dimension == g.dim_M_geq;
  g.ctilde = ctilde;
  std::string c = "1";
  if (!ctilde.trivial()) {
    c.clear();
    for (const auto& d : ctilde.invariant_factors) c += (c.empty() ? "Z/" : " x Z/") + d.get_str();
  }
  g.leaves = "symplectic leaves <-> conjugacy classes x T/C, C = " + c;
  return g;
}

}  // namespace nichols
