#include "malcev/io.hpp"

#include <fstream>
#include <sstream>

#include "malcev/errors.hpp"

namespace malcev {

namespace {

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, source + ": " + e.what());
  }
}

const Json& require(const Json& j, const std::string& field, const std::string& source) {
  auto it = j.find(field);
  if (it == j.end()) throw Error(Errc::parse_error, source + ": missing field \"" + field + "\"");
  return *it;
}

Rat rational_field(const Json& j, const std::string& where) {
  if (!j.is_string())
    throw Error(Errc::bad_rational, where + ": rational values must be strings like \"p/q\"");
  return rat_from_string(j.get<std::string>());
}

}  // namespace

MalcevAlgebra parse_algebra(const std::string& text, const std::string& source) {
  Json j = parse_json(text, source);
  if (!j.is_object()) throw Error(Errc::parse_error, source + ": expected a JSON object");
  if (j.contains("format") && j["format"] != "malcev-algebra")
    throw Error(Errc::parse_error, source + ": not a malcev-algebra document");

  const Json& jdim = require(j, "dim", source);
  if (!jdim.is_number_integer() || jdim.get<long>() < 0)
    throw Error(Errc::parse_error, source + ": \"dim\" must be a nonnegative integer");
  const int dim = jdim.get<int>();

  const Json& jbasis = require(j, "basis", source);
  if (!jbasis.is_array() || static_cast<int>(jbasis.size()) != dim)
    throw Error(Errc::parse_error, source + ": \"basis\" must list exactly dim labels");
  std::vector<std::string> labels;
  for (const Json& l : jbasis) {
    if (!l.is_string()) throw Error(Errc::parse_error, source + ": basis labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  auto index_of = [&](const std::string& lab, const std::string& where) {
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == lab) return static_cast<int>(i);
    throw Error(Errc::parse_error, source + ": " + where + " names unknown label \"" + lab + "\"");
  };

  // Collect raw entries, then fold to one-sided storage.
  std::map<std::pair<int, int>, Vec> raw;
  if (j.contains("brackets")) {
    const Json& jb = j["brackets"];
    if (!jb.is_array()) throw Error(Errc::parse_error, source + ": \"brackets\" must be an array");
    int entry = 0;
    for (const Json& b : jb) {
      const std::string where = "brackets[" + std::to_string(entry++) + "]";
      const Json& jl = require(b, "left", source);
      const Json& jr = require(b, "right", source);
      if (!jl.is_string() || !jr.is_string())
        throw Error(Errc::parse_error, source + ": " + where + " left/right must be labels");
      int li = index_of(jl.get<std::string>(), where);
      int ri = index_of(jr.get<std::string>(), where);
      if (li == ri)
        throw Error(Errc::non_antisymmetric_pair,
                    source + ": " + where + " lists a diagonal bracket [" +
                        labels[li] + "," + labels[li] + "]");
      Vec value = zero_vec(dim);
      const Json& jv = require(b, "value", source);
      if (!jv.is_object())
        throw Error(Errc::parse_error, source + ": " + where + " value must be a label map");
      for (auto it = jv.begin(); it != jv.end(); ++it) {
        int vi = index_of(it.key(), where + ".value");
        value[vi] = rational_field(it.value(), source + ": " + where + ".value." + it.key());
      }
      if (!raw.emplace(std::make_pair(li, ri), value).second)
        throw Error(Errc::duplicate_bracket,
                    source + ": bracket [" + labels[li] + "," + labels[ri] + "] listed twice");
    }
  }
  std::vector<std::tuple<int, int, Vec>> brackets;
  for (const auto& [key, value] : raw) {
    auto [li, ri] = key;
    if (li > ri) continue;  // handled from the mirrored entry
    auto mirror = raw.find({ri, li});
    if (mirror != raw.end() && !(negate(mirror->second) == value))
      throw Error(Errc::non_antisymmetric_pair,
                  source + ": both [" + labels[li] + "," + labels[ri] + "] and its reverse are "
                  "listed but are not exact negatives");
    brackets.emplace_back(li, ri, value);
  }
  for (const auto& [key, value] : raw) {
    auto [li, ri] = key;
    if (li < ri) continue;
    if (raw.count({ri, li})) continue;  // mirrored pair already folded
    brackets.emplace_back(ri, li, negate(value));
  }

  std::vector<int> gens;
  if (j.contains("generators")) {
    const Json& jg = j["generators"];
    if (!jg.is_array())
      throw Error(Errc::parse_error, source + ": \"generators\" must be an array of labels");
    for (const Json& g : jg) {
      if (!g.is_string())
        throw Error(Errc::parse_error, source + ": generator markers must be labels");
      gens.push_back(index_of(g.get<std::string>(), "generators"));
    }
  }
  std::string name;
  if (j.contains("metadata") && j["metadata"].is_object() && j["metadata"].contains("name"))
    name = j["metadata"]["name"].get<std::string>();

  try {
    return MalcevAlgebra(labels, brackets, gens, name);
  } catch (const Error& e) {
    throw Error(e.code(), source + ": " + e.message());
  }
}

MalcevAlgebra parse_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open \"" + path + "\"");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str(), path);
}

Json emit_algebra(const MalcevAlgebra& m) {
  Json j;
  j["format"] = "malcev-algebra";
  j["version"] = 1;
  if (!m.name().empty()) j["metadata"] = Json{{"name", m.name()}};
  j["dim"] = m.dim();
  j["basis"] = m.labels();
  if (!m.generators().empty()) {
    Json g = Json::array();
    for (int idx : m.generators()) g.push_back(m.labels()[idx]);
    j["generators"] = g;
  }
  Json brackets = Json::array();
  for (int i = 0; i < m.dim(); ++i)
    for (int k = i + 1; k < m.dim(); ++k) {
      const SparseVec& row = m.bracket_basis(i, k);
      if (row.empty()) continue;
      Json value;
      for (const auto& [idx, c] : row.terms) value[m.labels()[idx]] = rat_to_string(c);
      brackets.push_back(Json{{"left", m.labels()[i]}, {"right", m.labels()[k]}, {"value", value}});
    }
  j["brackets"] = brackets;
  return j;
}

ExtensionSpec parse_extension_spec(const std::string& text, const std::string& source) {
  Json j = parse_json(text, source);
  if (j.contains("format") && j["format"] != "malcev-extension")
    throw Error(Errc::parse_error, source + ": not a malcev-extension document");
  ExtensionSpec spec{
      parse_algebra(require(j, "n_tilde", source).dump(), source + ":n_tilde"),
      Subspace(),
      parse_algebra(require(j, "l", source).dump(), source + ":l"),
      {},
  };
  std::vector<Vec> ideal_gens;
  if (j.contains("ideal")) {
    for (const Json& v : j["ideal"]) ideal_gens.push_back(vec_from_json(v, spec.n_tilde));
  }
  spec.ideal = Subspace::span(spec.n_tilde.dim(), ideal_gens);
  spec.action.assign(spec.n_tilde.dim(), Matrix(spec.lie_part.dim(), spec.lie_part.dim()));
  if (j.contains("action")) {
    const Json& ja = j["action"];
    if (!ja.is_object())
      throw Error(Errc::parse_error, source + ": \"action\" must map labels to matrices");
    for (auto it = ja.begin(); it != ja.end(); ++it) {
      int idx = spec.n_tilde.label_index(it.key());
      if (idx < 0)
        throw Error(Errc::parse_error, source + ": action names unknown label \"" + it.key() + "\"");
      const Json& rows = it.value();
      const int dl = spec.lie_part.dim();
      if (!rows.is_array() || static_cast<int>(rows.size()) != dl)
        throw Error(Errc::parse_error, source + ": action matrix for \"" + it.key() +
                                           "\" must have one row per l basis vector");
      Matrix mat(dl, dl);
      for (int r = 0; r < dl; ++r) {
        if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != dl)
          throw Error(Errc::parse_error, source + ": action matrix rows must have length dim(l)");
        for (int c = 0; c < dl; ++c)
          mat.at(r, c) = rational_field(rows[r][c], source + ": action." + it.key());
      }
      spec.action[idx] = std::move(mat);
    }
  }
  return spec;
}

Json vec_json(const Vec& v, const std::vector<std::string>& labels) {
  Json j = Json::object();
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) j[labels[i]] = rat_to_string(v[i]);
  return j;
}

Vec vec_from_json(const Json& j, const MalcevAlgebra& m) {
  if (!j.is_object()) throw Error(Errc::parse_error, "vector documents must be label maps");
  Vec v = zero_vec(m.dim());
  for (auto it = j.begin(); it != j.end(); ++it) {
    int idx = m.label_index(it.key());
    if (idx < 0) throw Error(Errc::parse_error, "vector names unknown label \"" + it.key() + "\"");
    v[idx] = rational_field(it.value(), "vector." + it.key());
  }
  return v;
}

Json subspace_json(const Subspace& s, const std::vector<std::string>& labels) {
  Json j;
  j["dim"] = s.dim();
  Json basis = Json::array();
  for (const Vec& row : s.basis()) basis.push_back(vec_json(row, labels));
  j["basis"] = basis;
  return j;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rat_to_string(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json identity_witness_json(const MalcevAlgebra& m, Check check, const Witness& w) {
  Json j;
  j["check"] = check_name(check);
  Json tuple_labels = Json::array();
  Json tuple = Json::array();
  for (int idx : w.tuple) {
    tuple_labels.push_back(m.labels()[idx]);
    tuple.push_back(vec_json(unit_vec(m.dim(), idx), m.labels()));
  }
  j["tuple_labels"] = tuple_labels;
  j["tuple"] = tuple;
  j["defect"] = vec_json(w.defect, m.labels());
  return j;
}

Vec reevaluate_witness(const MalcevAlgebra& m, const std::string& check_name,
                       const std::vector<Vec>& tuple) {
  if (check_name == "anticommutative") {
    if (tuple.size() != 2) throw Error(Errc::usage_error, "anticommutative witness needs 2 vectors");
    return add(m.bracket(tuple[0], tuple[1]), m.bracket(tuple[1], tuple[0]));
  }
  if (check_name == "jacobi") {
    if (tuple.size() != 3) throw Error(Errc::usage_error, "jacobi witness needs 3 vectors");
    return jacobi_defect(m, tuple[0], tuple[1], tuple[2]);
  }
  if (check_name == "malcev") {
    if (tuple.size() != 3) throw Error(Errc::usage_error, "malcev witness needs 3 vectors");
    return malcev_defect(m, tuple[0], tuple[1], tuple[2]);
  }
  if (check_name == "malcev_linearized") {
    if (tuple.size() != 4)
      throw Error(Errc::usage_error, "malcev_linearized witness needs 4 vectors");
    return malcev_linearized_defect(m, tuple[0], tuple[1], tuple[2], tuple[3]);
  }
  if (check_name == "nlk") {
    if (tuple.size() != 3) throw Error(Errc::usage_error, "nlk witness needs 3 vectors");
    return jacobi_defect(m, tuple[0], tuple[1], tuple[2]);
  }
  throw Error(Errc::usage_error, "unknown witness check \"" + check_name + "\"");
}

}  // namespace malcev
