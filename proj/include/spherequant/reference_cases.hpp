#pragma once

#include <string>
#include <vector>

namespace spherequant {

/// One check of the built-in reference suite: small configurations on the
/// sphere (antipodal pairs, equatorial triples, a regular tetrahedron, unit
/// axes, uniform circles and arcs) with independently known optima.
struct ReferenceRow {
    std::string name;
    double computed;
    double expected;
    double tol;
    bool relative;  // printed four-digit approximations are compared relatively
    bool pass;
    std::string note;
};

std::vector<ReferenceRow> run_reference_cases();

}  // namespace spherequant
