#pragma once

#include <filesystem>

#include "nakayama/hopf.hpp"
#include "nakayama/report.hpp"

namespace nakayama {

// Structure-constant JSON: {field, dim, basis, mult, unit, comult, counit,
// antipode, grouplike_flags}. mult[i][j] is the coefficient vector of b_i b_j,
// comult[k] lists [i, j, scalar] terms, antipode[j] is S(b_j). Scalars are
// strings in the literal grammar.
Json hopf_to_json(const HopfAlgebra& K);
// Throws InvalidArgument("malformed structure constants: ...") on shape or
// type errors; axioms are not checked here.
HopfAlgebra hopf_from_json(const Json& j, const Field& f);

void save_hopf(const HopfAlgebra& K, const std::filesystem::path& path);
HopfAlgebra load_hopf(const std::filesystem::path& path, const Field& f);

}  // namespace nakayama
