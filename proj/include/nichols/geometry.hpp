#pragma once
#include <string>
#include "nichols/cartan.hpp"
#include "nichols/lattice.hpp"

namespace nichols {

struct GeometryReport {
  Integer weyl_order;
  Integer double_bruhat_cells;  // per Borel side
  Integer richardson_cells;
  Integer hz_isoclass_upper_bound;
  size_t dim_M = 0, dim_M_geq = 0, dim_M_plus = 0;
  size_t borel_dimension = 0;  // positive roots of g plus rank of g̃
  bool dimension_consistent = false;
  LatticeQuotient ctilde;
  std::string leaves;
};

GeometryReport geometry_report(const SemisimpleType& st, const CartanRootData& crd, const LatticeQuotient& ctilde);

}  // namespace nichols
