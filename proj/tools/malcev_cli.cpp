// Workbench CLI: exact structure-constant algebras, their invariants, and the
// formal Moufang loops attached to the nilpotent ones. Every command prints a
// deterministic JSON report; exit 0 = all verdicts pass, 1 = a mathematical
// check failed or a typed mathematical error occurred, 2 = input/usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "malcev/algebra.hpp"
#include "malcev/decomposition.hpp"
#include "malcev/errors.hpp"
#include "malcev/extensions.hpp"
#include "malcev/fixtures.hpp"
#include "malcev/io.hpp"
#include "malcev/loop.hpp"
#include "malcev/upoly.hpp"

using namespace malcev;

namespace {

bool usage_errc(Errc c) {
  switch (c) {
    case Errc::parse_error:
    case Errc::duplicate_bracket:
    case Errc::non_antisymmetric_pair:
    case Errc::bad_rational:
    case Errc::usage_error:
    case Errc::bad_k:
    case Errc::bad_rank:
    case Errc::unsupported_class:
    case Errc::dimension_mismatch:
    case Errc::ambient_mismatch:
    case Errc::variable_mismatch:
      return true;
    default:
      return false;
  }
}

MalcevAlgebra load_algebra(const std::string& arg) {
  std::string name = arg;
  if (name.rfind("fixtures/", 0) == 0) name = name.substr(9);
  if (name.rfind("fixture:", 0) == 0) name = name.substr(8);
  for (const std::string& f : fixture_names())
    if (f == name) return make_fixture(f);
  return parse_algebra_file(arg);
}

void print_doc(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct Report {
  Json doc;
  bool all_pass = true;

  Report(const std::string& command, const std::string& input) {
    doc["format"] = "malcev-report";
    doc["version"] = 1;
    doc["command"] = command;
    doc["input"] = input;
    doc["checks"] = Json::array();
  }

  void add(const std::string& name, const std::string& anchor, bool pass,
           Json witness = Json()) {
    Json c;
    c["name"] = name;
    c["anchor"] = anchor;
    c["verdict"] = pass ? "pass" : "fail";
    if (!pass && !witness.is_null()) c["witness"] = witness;
    doc["checks"].push_back(c);
    all_pass = all_pass && pass;
  }

  void skip(const std::string& name, const std::string& anchor) {
    Json c;
    c["name"] = name;
    c["anchor"] = anchor;
    c["verdict"] = "skip";
    doc["checks"].push_back(c);
  }

  int finish() {
    print_doc(doc);
    return all_pass ? 0 : 1;
  }
};

Json identity_checks(const MalcevAlgebra& m, const IdentityReport& rep, Report& out) {
  const std::pair<Check, const char*> anchors[] = {
      {Check::anticommutative, "[x,x] = 0"},
      {Check::jacobi, "J(x,y,z) = 0"},
      {Check::malcev, "[J(x,y,z),x] = J(x,y,[x,z])"},
      {Check::malcev_linearized, "x-linearization of the defining identity"},
  };
  for (const auto& [check, anchor] : anchors) {
    Json w;
    if (!rep.passes(check)) w = identity_witness_json(m, check, rep.witnesses.at(check));
    out.add(check_name(check), anchor, rep.passes(check), w);
  }
  return Json();
}

int cmd_check(const std::string& file) {
  MalcevAlgebra m = load_algebra(file);
  Report rep("check", file);
  identity_checks(m, check_identities(m), rep);
  return rep.finish();
}

int cmd_series(const std::string& file) {
  MalcevAlgebra m = load_algebra(file);
  SeriesReport s = lower_central_series(m);
  Report rep("series", file);
  bool decreasing = true;
  for (size_t i = 0; i + 1 < s.terms.size(); ++i)
    decreasing = decreasing && s.terms[i].contains(s.terms[i + 1]);
  rep.add("series_decreasing", "M^{n+1} <= M^n", decreasing);
  bool products = true;
  const int len = static_cast<int>(s.terms.size());
  for (int i = 1; i <= len; ++i)
    for (int j = 1; j <= len && i + j <= len + 1; ++j)
      products = products && s.term(i + j).contains(subspace_bracket(m, s.term(i), s.term(j)));
  rep.add("series_products", "[M^i, M^j] <= M^{i+j}", products);

  Json terms = Json::array();
  for (const Subspace& t : s.terms) terms.push_back(subspace_json(t, m.labels()));
  Json data;
  data["terms"] = terms;
  data["omega"] = subspace_json(s.omega, m.labels());
  data["stabilized_at"] = s.stabilized_at;
  data["nilpotent"] = s.nilpotent;
  if (s.nilpotency_class) data["nilpotency_class"] = *s.nilpotency_class;
  Json derived = Json::array();
  for (const Subspace& t : s.derived) derived.push_back(subspace_json(t, m.labels()));
  data["derived"] = derived;
  data["solvable"] = s.solvable;
  rep.doc["data"] = data;
  return rep.finish();
}

int cmd_center(const std::string& file) {
  MalcevAlgebra m = load_algebra(file);
  Report rep("center", file);
  rep.doc["data"] = Json{{"lie_center", subspace_json(lie_center(m), m.labels())}};
  return rep.finish();
}

int cmd_jideal(const std::string& file) {
  MalcevAlgebra m = load_algebra(file);
  Report rep("jideal", file);
  Subspace jm = jacobian_ideal(m);
  rep.doc["data"] = Json{{"jacobian_ideal", subspace_json(jm, m.labels())}};
  if (check_identities(m).malcev_ok()) {
    rep.add("filippov", "[J(M), Lie(M)] = 0", subspace_bracket(m, jm, lie_center(m)).is_zero());
    if (nl_class(m))
      rep.add("j_omega", "[J(M), M^omega] = 0",
              subspace_bracket(m, jm, lower_central_series(m).omega).is_zero());
    else
      rep.skip("j_omega", "[J(M), M^omega] = 0");
  } else {
    rep.skip("filippov", "[J(M), Lie(M)] = 0");
    rep.skip("j_omega", "[J(M), M^omega] = 0");
  }
  return rep.finish();
}

int cmd_nlk(const std::string& file, int k) {
  MalcevAlgebra m = load_algebra(file);
  NlkResult res = nlk_test(m, k);
  Report rep("nlk", file);
  Json w;
  if (!res.pass) {
    w["check"] = "nlk";
    w["tuple"] = Json::array({vec_json(res.witness_w, m.labels()),
                              vec_json(unit_vec(m.dim(), res.witness_i), m.labels()),
                              vec_json(unit_vec(m.dim(), res.witness_j), m.labels())});
    w["tuple_labels"] =
        Json::array({vec_to_string(res.witness_w, m.labels()), m.labels()[res.witness_i],
                     m.labels()[res.witness_j]});
    w["defect"] = vec_json(res.defect, m.labels());
  }
  rep.add("nlk", "J([x1,...,xk], y, z) = 0 with k = " + std::to_string(k), res.pass, w);
  rep.doc["data"] = Json{{"k", k}};
  return rep.finish();
}

int cmd_weights(const std::string& file, const std::vector<std::string>& toral_labels,
                const std::vector<std::string>& target_labels) {
  MalcevAlgebra m = load_algebra(file);
  std::vector<Vec> toral;
  for (const std::string& l : toral_labels) {
    int idx = m.label_index(l);
    if (idx < 0) throw Error(Errc::usage_error, "unknown label \"" + l + "\"");
    toral.push_back(unit_vec(m.dim(), idx));
  }
  Subspace target = m.full_space();
  if (!target_labels.empty()) {
    std::vector<Vec> gens;
    for (const std::string& l : target_labels) {
      int idx = m.label_index(l);
      if (idx < 0) throw Error(Errc::usage_error, "unknown label \"" + l + "\"");
      gens.push_back(unit_vec(m.dim(), idx));
    }
    target = Subspace::span(m.dim(), gens);
  }
  WeightDecomposition wd = weight_spaces(m, toral, target);
  Report rep("weights", file);
  Json spaces = Json::array();
  for (const WeightSpace& ws : wd.spaces) {
    Json e;
    Json weight = Json::array();
    for (const Rat& a : ws.weight) weight.push_back(rat_to_string(a));
    e["weight"] = weight;
    e["space"] = subspace_json(ws.space, m.labels());
    spaces.push_back(e);
  }
  Json toral_json = Json::array();
  for (const Vec& t : wd.toral) toral_json.push_back(vec_json(t, m.labels()));
  rep.doc["data"] = Json{{"toral", toral_json}, {"spaces", spaces}};
  rep.add("weight_equations", "[x,t] = alpha(t) x", true);
  int idx = 0;
  for (const ContainmentCheck& c : wd.containments) {
    std::string name = "containment_" + std::to_string(idx++);
    if (!c.applicable) {
      rep.skip(name, c.rule);
      continue;
    }
    Json w;
    if (!c.pass) {
      Json alpha = Json::array(), beta = Json::array();
      for (const Rat& a : c.alpha) alpha.push_back(rat_to_string(a));
      for (const Rat& a : c.beta) beta.push_back(rat_to_string(a));
      w = Json{{"alpha", alpha}, {"beta", beta}};
    }
    rep.add(name, c.rule, c.pass, w);
  }
  return rep.finish();
}

int cmd_split(const std::string& file, const std::string& element) {
  MalcevAlgebra m = load_algebra(file);
  int idx = m.label_index(element);
  if (idx < 0) throw Error(Errc::usage_error, "unknown label \"" + element + "\"");
  SplitStep step = split_step(m, unit_vec(m.dim(), idx));
  const MalcevAlgebra& ext = step.extended;
  Report rep("split", file);

  rep.add("extension_malcev", "adjoined toral element yields a Malcev algebra",
          check_identities(ext).malcev_ok());
  Vec t = unit_vec(ext.dim(), ext.dim() - 1);
  rep.add("toral_diagonalizable", "R_t is diagonalizable",
          eigen_decompose(ext.right_mult(t)).diagonalizable);

  auto embed = [&](const Subspace& s) {
    std::vector<Vec> gens;
    for (const Vec& row : s.basis()) {
      Vec v = row;
      v.push_back(Rat(0));
      gens.push_back(std::move(v));
    }
    return Subspace::span(ext.dim(), gens);
  };
  SeriesReport base_series = lower_central_series(m);
  SeriesReport ext_series = lower_central_series(ext);
  rep.add("m2_preserved", "extended M^2 = M^2", embed(base_series.term(2)) == ext_series.term(2));
  bool ideals = true;
  for (const Subspace& term : base_series.terms) {
    Subspace e = embed(term);
    ideals = ideals && e.contains(subspace_bracket(ext, e, ext.full_space()));
  }
  rep.add("ideals_preserved", "ideals of M remain ideals of the extension", ideals);
  rep.add("lie_center_monotone", "Lie(M) <= Lie(extension)",
          lie_center(ext).contains(embed(lie_center(m))));

  Json data;
  data["toral_label"] = step.toral_label;
  data["semisimple_part"] = matrix_json(step.semisimple_op);
  data["nilpotent_part"] = matrix_json(step.nilpotent_op);
  data["polynomial"] = step.p.to_string();
  data["extended"] = emit_algebra(ext);
  rep.doc["data"] = data;
  return rep.finish();
}

Subspace labels_to_subspace(const MalcevAlgebra& m, const std::vector<std::string>& labels) {
  std::vector<Vec> gens;
  for (const std::string& l : labels) {
    int idx = m.label_index(l);
    if (idx < 0) throw Error(Errc::usage_error, "unknown label \"" + l + "\"");
    gens.push_back(unit_vec(m.dim(), idx));
  }
  return Subspace::span(m.dim(), gens);
}

int cmd_theorem1(const std::string& file, const std::vector<std::string>& s_labels,
                 const std::vector<std::string>& t_labels,
                 const std::vector<std::string>& n_labels) {
  MalcevAlgebra m = load_algebra(file);
  LeviData levi = make_levi_data(m, labels_to_subspace(m, s_labels),
                                 labels_to_subspace(m, t_labels), labels_to_subspace(m, n_labels));
  Theorem1Parts parts = theorem1_parts(m, levi);
  Report rep("theorem1", file);
  for (const NamedVerdict& v : parts.checks) {
    if (!v.applicable)
      rep.skip(v.name, v.anchor);
    else
      rep.add(v.name, v.anchor, v.pass);
  }
  Json data;
  data["n0"] = subspace_json(parts.n0, m.labels());
  data["n01"] = subspace_json(parts.n01, m.labels());
  data["n00"] = subspace_json(parts.n00, m.labels());
  data["m11"] = subspace_json(parts.m11, m.labels());
  data["m1"] = subspace_json(parts.m1, m.labels());
  if (parts.nl_k) data["nl_k"] = *parts.nl_k;
  rep.doc["data"] = data;
  return rep.finish();
}

int cmd_extend(const std::string& spec_file) {
  std::ifstream in(spec_file);
  if (!in) throw Error(Errc::parse_error, "cannot open \"" + spec_file + "\"");
  std::stringstream ss;
  ss << in.rdbuf();
  ExtensionSpec spec = parse_extension_spec(ss.str(), spec_file);
  MalcevAlgebra result = decomposable_extension(spec);
  Report rep("extend", spec_file);
  rep.add("result_malcev", "(a,l)(b,r) = ([a,b], l^b - r^a + [l,r]) yields a Malcev algebra",
          check_identities(result).malcev_ok());
  std::vector<Vec> lgens;
  for (int i = 0; i < spec.lie_part.dim(); ++i)
    lgens.push_back(unit_vec(result.dim(), spec.n_tilde.dim() + i));
  rep.add("l_in_lie_center", "L is an ideal contained in Lie(M)",
          lie_center(result).contains(Subspace::span(result.dim(), lgens)));
  rep.doc["data"] = Json{{"result", emit_algebra(result)}};
  return rep.finish();
}

int cmd_free_malcev(int rank, int cls) {
  print_doc(emit_algebra(free_nilpotent_malcev(rank, cls)));
  return 0;
}

int cmd_example(const std::string& which, int k) {
  if (which != "paper")
    throw Error(Errc::usage_error, "unknown example \"" + which + "\" (available: paper)");
  SeparationCertificate cert = separation_example(k);
  Report rep("example", which);
  rep.add("identities", "P is a Malcev algebra", cert.identities_pass);
  Json w2;
  if (cert.nlk2.pass)
    w2 = Json{{"note", "expected a failing witness for k=2"}};
  rep.add("p_not_in_nl2", "J(P^2, P, P) != 0", !cert.nlk2.pass, w2);
  rep.add("p_in_nl3", "J(P^3, P, P) = 0", cert.nlk3.pass);
  rep.add("p0_mod_z_in_nl2", "P0/Z lies in NL_2", cert.p0_mod_z_passes_nl2);
  rep.add("p1_in_lie_center", "image of P1 lies in Lie(P)", cert.p1_in_lie_center);
  rep.add("parts_span", "P = image(P0) + image(P1)", cert.parts_span);
  Json data;
  data["k"] = k;
  data["free_dim"] = cert.free_dim;
  data["w_dim"] = cert.w_dim;
  data["z"] = cert.z_description;
  if (!cert.nlk2.pass) {
    Json w;
    w["check"] = "nlk";
    w["tuple"] = Json::array({vec_json(cert.nlk2.witness_w, cert.p.labels()),
                              vec_json(unit_vec(cert.p.dim(), cert.nlk2.witness_i), cert.p.labels()),
                              vec_json(unit_vec(cert.p.dim(), cert.nlk2.witness_j), cert.p.labels())});
    w["defect"] = vec_json(cert.nlk2.defect, cert.p.labels());
    data["nl2_witness"] = w;
  }
  data["algebra"] = emit_algebra(cert.p);
  rep.doc["data"] = data;
  return rep.finish();
}

int cmd_loop(const std::string& file, const std::vector<std::string>& check) {
  MalcevAlgebra m = load_algebra(file);
  FormalLoop l(std::move(m));
  if (check.empty()) throw Error(Errc::usage_error, "--check requires an argument");
  const std::string& kind = check[0];
  Report rep("loop", file);

  if (kind == "moufang") {
    LoopIdentityReport lr = check_loop_identities(l);
    for (const LoopCheck& c : lr.checks) {
      if (c.name == "associativity") continue;  // informational; fails on proper Moufang loops
      rep.add(c.name, c.anchor, c.pass, c.pass ? Json() : Json{{"polynomial", c.witness}});
    }
  } else if (kind == "associator") {
    LoopIdentityReport lr = check_loop_identities(l);
    const LoopCheck* c = lr.find("associator_jacobian");
    rep.add(c->name, c->anchor, c->pass, c->pass ? Json() : Json{{"polynomial", c->witness}});
  } else if (kind == "commutator") {
    LoopIdentityReport lr = check_loop_identities(l);
    const LoopCheck* c = lr.find("commutator_leading_term");
    rep.add(c->name, c->anchor, c->pass, c->pass ? Json() : Json{{"polynomial", c->witness}});
  } else if (kind == "nucleus") {
    Subspace nuc = nucleus(l);
    rep.add("nucleus_equals_lie_center", "Nuc = {x : (x,a,b) = 0} matches Lie(M)",
            nuc == lie_center(l.algebra()));
    rep.doc["data"] = Json{{"nucleus", subspace_json(nuc, l.algebra().labels())}};
  } else if (kind == "gk" || kind == "subloop") {
    if (check.size() != 2) throw Error(Errc::usage_error, "--check " + kind + " needs K");
    int k = 0;
    try {
      k = std::stoi(check[1]);
    } catch (...) {
      throw Error(Errc::usage_error, "--check " + kind + " needs an integer K");
    }
    if (kind == "gk") {
      GkResult res = gk_test(l, k);
      Json w;
      if (!res.pass) w = Json{{"parenthesization", res.parenthesization}, {"polynomial", res.witness}};
      rep.add("gk", "([x1,...,xk], y, z) = 1 with k = " + std::to_string(k), res.pass, w);
    } else {
      Subspace span = commutator_subloop_span(l, k);
      rep.add("subloop_span", "loop commutator span = M^" + std::to_string(k), true);
      rep.doc["data"] = Json{{"span", subspace_json(span, l.algebra().labels())}};
    }
  } else {
    throw Error(Errc::usage_error, "unknown loop check \"" + kind + "\"");
  }
  return rep.finish();
}

int cmd_fixtures(const std::string& action, const std::string& name) {
  if (action == "list") {
    Json j;
    j["fixtures"] = fixture_names();
    print_doc(j);
    return 0;
  }
  if (action == "emit") {
    if (name.empty()) throw Error(Errc::usage_error, "fixtures emit needs a name");
    print_doc(emit_algebra(make_fixture(name)));
    return 0;
  }
  throw Error(Errc::usage_error, "fixtures supports: list, emit NAME");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic workbench for Malcev algebras and their formal Moufang loops"};
  app.require_subcommand(1);

  std::string file, element, spec_file, example_which = "paper", fixtures_action, fixtures_name;
  std::vector<std::string> toral, target, s_labels, t_labels, n_labels, loop_check;
  int k = 2, rank = 2, cls = 3;

  auto* c_check = app.add_subcommand("check", "verify the defining identities");
  c_check->add_option("file", file)->required();

  auto* c_series = app.add_subcommand("series", "lower central and derived series");
  c_series->add_option("file", file)->required();

  auto* c_center = app.add_subcommand("center", "Lie center {x : J(x,M,M) = 0}");
  c_center->add_option("file", file)->required();

  auto* c_jideal = app.add_subcommand("jideal", "ideal generated by Jacobian values");
  c_jideal->add_option("file", file)->required();

  auto* c_nlk = app.add_subcommand("nlk", "test J(M^k, M, M) = 0");
  c_nlk->add_option("file", file)->required();
  c_nlk->add_option("--k", k, "commutator length")->required();

  auto* c_weights = app.add_subcommand("weights", "weight space decomposition");
  c_weights->add_option("file", file)->required();
  c_weights->add_option("--toral", toral, "toral element labels")->required()->expected(-1);
  c_weights->add_option("--target", target, "target subspace labels")->expected(-1);

  auto* c_split = app.add_subcommand("split", "adjoin the semisimple part of R_x");
  c_split->add_option("file", file)->required();
  c_split->add_option("--element", element, "basis label of x")->required();

  auto* c_theorem1 = app.add_subcommand("theorem1", "structure parts for a Levi decomposition");
  c_theorem1->add_option("file", file)->required();
  c_theorem1->add_option("--s", s_labels, "Levi factor labels")->expected(-1);
  c_theorem1->add_option("--t", t_labels, "toral labels")->expected(-1);
  c_theorem1->add_option("--n", n_labels, "nilpotent ideal labels")->expected(-1);

  auto* c_extend = app.add_subcommand("extend", "decomposable extension from a spec file");
  c_extend->add_option("specfile", spec_file)->required();

  auto* c_free = app.add_subcommand("free-malcev", "emit a free nilpotent Malcev algebra");
  c_free->add_option("--rank", rank)->required();
  c_free->add_option("--class", cls)->required();

  auto* c_example = app.add_subcommand("example", "bundled constructions with certificates");
  c_example->add_option("which", example_which)->required();
  c_example->add_option("--k", k, "separation index");

  auto* c_loop = app.add_subcommand("loop", "formal Moufang loop checks");
  c_loop->add_option("file", file)->required();
  c_loop->add_option("--check", loop_check, "moufang|associator|commutator|nucleus|gk K|subloop K")
      ->required()
      ->expected(-1);

  auto* c_fixtures = app.add_subcommand("fixtures", "builtin algebras");
  c_fixtures->add_option("action", fixtures_action)->required();
  c_fixtures->add_option("name", fixtures_name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      app.exit(e);
      return 0;
    }
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    if (c_check->parsed()) return cmd_check(file);
    if (c_series->parsed()) return cmd_series(file);
    if (c_center->parsed()) return cmd_center(file);
    if (c_jideal->parsed()) return cmd_jideal(file);
    if (c_nlk->parsed()) return cmd_nlk(file, k);
    if (c_weights->parsed()) return cmd_weights(file, toral, target);
    if (c_split->parsed()) return cmd_split(file, element);
    if (c_theorem1->parsed()) return cmd_theorem1(file, s_labels, t_labels, n_labels);
    if (c_extend->parsed()) return cmd_extend(spec_file);
    if (c_free->parsed()) return cmd_free_malcev(rank, cls);
    if (c_example->parsed()) return cmd_example(example_which, k);
    if (c_loop->parsed()) return cmd_loop(file, loop_check);
    if (c_fixtures->parsed()) return cmd_fixtures(fixtures_action, fixtures_name);
  } catch (const Error& e) {
    if (usage_errc(e.code())) {
      std::cerr << errc_name(e.code()) << ": " << e.message() << "\n";
      return 2;
    }
    Json j;
    j["format"] = "malcev-report";
    j["version"] = 1;
    j["command"] = command;
    j["error"] = Json{{"kind", errc_name(e.code())}, {"message", e.message()}};
    if (const auto* nrs = dynamic_cast<const NonRationalSpectrumError*>(&e))
      j["error"]["factor"] = nrs->factor();
    j["checks"] = Json::array();
    print_doc(j);
    return 1;
  }
  std::cerr << "usage error: no command\n";
  return 2;
}
