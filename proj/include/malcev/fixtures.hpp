#ifndef MALCEV_FIXTURES_HPP
#define MALCEV_FIXTURES_HPP

#include <string>
#include <vector>

#include "malcev/algebra.hpp"

namespace malcev {

/// Builtin algebras: h3, sl2, so3, P1, M7, FNM-2-3, FNM-3-3, FAC-3-4.
std::vector<std::string> fixture_names();
MalcevAlgebra make_fixture(const std::string& name);

}  // namespace malcev

#endif
