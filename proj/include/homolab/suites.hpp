#pragma once

#include "homolab/duality.hpp"
#include "homolab/flow.hpp"
#include "homolab/report.hpp"

#include <string>
#include <vector>

namespace homolab {

/// Series, parallel and monotonicity instances in dimensions 1 and 2.
FlowFormulaInstances standard_flow_instances();

/// Boundary of the tetrahedron with gamma = d of the chosen triangle (0..3).
EmbeddedDualData tetrahedron_dual(int triangle);
/// Octahedron boundary with the equator as gamma and the hemispheres as flows.
EmbeddedDualData octahedron_dual();
/// Planar 4-cycle 0-1-2-3 with gamma = t - s.
EmbeddedDualData four_cycle_dual(int s, int t);

/// Subcomplexes with the full (d-1)-skeleton in which gamma does not bound.
std::vector<SimplicialComplex> duality_subcomplexes(const EmbeddedDualData& data);

std::vector<std::string> suite_names();
/// Runs a named property suite; throws MalformedInputError on an unknown name.
VerificationReport run_suite(const std::string& name);

}  // namespace homolab
