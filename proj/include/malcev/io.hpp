#ifndef MALCEV_IO_HPP
#define MALCEV_IO_HPP

#include <json.hpp>

#include <string>

#include "malcev/algebra.hpp"
#include "malcev/decomposition.hpp"
#include "malcev/extensions.hpp"

namespace malcev {

/// All emitted documents use insertion-ordered JSON so repeated runs are
/// byte-identical.
using Json = nlohmann::ordered_json;

/// Algebra file format: exact rationals as "p"/"p/q" strings, brackets listed
/// one-sided (left index before right in basis order), anticommutativity
/// completed on parse. Floats are rejected, never coerced.
MalcevAlgebra parse_algebra(const std::string& text, const std::string& source_name);
MalcevAlgebra parse_algebra_file(const std::string& path);
Json emit_algebra(const MalcevAlgebra& m);

/// Extension specification: n_tilde, ideal vectors, l, and the action as a
/// map from n_tilde basis labels to matrices over l (omitted labels act as
/// zero).
ExtensionSpec parse_extension_spec(const std::string& text, const std::string& source_name);

Json vec_json(const Vec& v, const std::vector<std::string>& labels);
Vec vec_from_json(const Json& j, const MalcevAlgebra& m);
Json subspace_json(const Subspace& s, const std::vector<std::string>& labels);
Json matrix_json(const Matrix& m);

Json identity_witness_json(const MalcevAlgebra& m, Check check, const Witness& w);

/// Re-runs the defect evaluator named in a witness document against the given
/// algebra; reports must reproduce their defects exactly.
Vec reevaluate_witness(const MalcevAlgebra& m, const std::string& check_name,
                       const std::vector<Vec>& tuple);

}  // namespace malcev

#endif
