#include "ttcf/structure.hpp"

namespace ttcf {

const char* to_string(StructureCase c) {
  switch (c) {
    case StructureCase::odd_regions:
      return "odd_regions";
    case StructureCase::even_non_orientable:
      return "even_non_orientable";
    case StructureCase::even_orientable:
      return "even_orientable";
  }
  return "unknown";
}

StructureReport verify_structure(const TrainTrack& tau) {
  StructureReport r;
  r.topology = regions(tau).report;
  const TopologyReport& top = r.topology;

  r.lattice_basis = weight_lattice_basis(tau);
  r.normal_form = skew_normal_form(theta_matrix(tau, r.lattice_basis));
  r.computed = {r.normal_form.invariants, r.normal_form.nullity};

  r.expected.invariants.assign(static_cast<std::size_t>(top.genus), Int(1));
  if (top.n_odd > 0) {
    r.structure_case = StructureCase::odd_regions;
    if (top.n_odd % 2 != 0) {
      r.message = "odd number of regions with an odd spike count";
      return r;
    }
    r.expected.invariants.insert(r.expected.invariants.end(), top.n_odd / 2 - 1, Int(2));
    r.expected.nullity = top.n_even;
  } else if (!top.orientable) {
    // One handle of U carries the non-trivial orientation cover, so only
    // h - 1 unit blocks survive; rank W = 2h + n_even - 2 here.
    r.structure_case = StructureCase::even_non_orientable;
    if (top.genus < 1) {
      r.message = "non-orientable track with genus 0";
      return r;
    }
    r.expected.invariants.assign(static_cast<std::size_t>(top.genus - 1), Int(1));
    r.expected.nullity = top.n_even;
  } else {
    r.structure_case = StructureCase::even_orientable;
    r.expected.nullity = top.n_even - 1;
  }
  r.pass = r.expected == r.computed;
  if (!r.pass) r.message = "block census differs from prediction";
  return r;
}

}  // namespace ttcf
