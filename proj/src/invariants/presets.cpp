#include "invariants/invariants.hpp"

namespace cgr {

CrystalGenerators crystal_preset(const std::string& system) {
  auto rot = [](Axis ax, int num, int den) {
    return rotation_exact(ax, Rational(num, den));
  };
  if (system == "triclinic") return {system, {}};
  if (system == "monoclinic") return {system, {rot(Axis::Xm1, 1, 1)}};
  if (system == "rhombic" || system == "orthorhombic")
    return {"rhombic", {rot(Axis::Xm1, 1, 1), rot(Axis::X0, 1, 1)}};
  if (system == "tetragonal") return {system, {rot(Axis::Xm1, 1, 2)}};
  if (system == "trigonal") return {system, {rot(Axis::Xm1, 2, 3)}};
  if (system == "hexagonal") return {system, {rot(Axis::Xm1, 1, 3)}};
  if (system == "cubic") return {system, {rot(Axis::Xm1, 1, 2), rot(Axis::Xp1, 1, 2)}};
  // Two incommensurate-axis generators whose fixed spaces meet only in 0
  // for weights 2 and 4; the reduction then keeps the two scalars alone.
  if (system == "isotropic") return {system, {rot(Axis::Xm1, 1, 6), rot(Axis::Xp1, 1, 2)}};
  throw std::domain_error("unknown crystal system: " + system);
}

}  // namespace cgr
