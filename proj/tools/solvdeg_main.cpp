#include <CLI11.hpp>

#include <fstream>
#include <set>
#include <iostream>
#include <sstream>

#include "solvdeg/chain.hpp"
#include "solvdeg/errors.hpp"
#include "solvdeg/firstfall.hpp"
#include "solvdeg/fixtures.hpp"
#include "solvdeg/groebner.hpp"
#include "solvdeg/homogenize.hpp"
#include "solvdeg/invariants.hpp"
#include "solvdeg/json_io.hpp"
#include "solvdeg/macaulay.hpp"
#include "solvdeg/minrank.hpp"
#include "solvdeg/solver.hpp"
#include "solvdeg/system_file.hpp"

using namespace solvdeg;

namespace {

enum Exit { kOk = 0, kRelationFailed = 1, kPrecondition = 2, kDegreeCap = 3, kParse = 4 };

struct Options {
  std::string input = "-";
  std::string order = "drl";
  std::string mutants = "on";
  bool assert_generic = false;
  std::uint64_t seed = 1;
  bool json = false;
  int degree_cap = 30;
  // subcommand specific
  std::size_t t = 2;
  std::int64_t value = 0;
  std::string var;
  std::string kind = "generic-linear";
  std::size_t r = 2, s = 3, n = 3;
  std::uint32_t p = 101;
  bool full = false;
  bool generate = false;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError(ParseErrorKind::MissingHeader, 0, "cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

SystemFile load(const Options& o) { return parse_system_file(read_input(o.input)); }

Ideal load_ideal(const Options& o) {
  auto sf = load(o);
  if (sf.polynomials.empty()) throw ParseError(ParseErrorKind::EmptySystem, 0, "system has no polynomials");
  return sf.ideal();
}

TermOrder order_of(const Options& o) {
  if (o.order == "lex") return TermOrder::lex();
  if (o.order == "drl") return TermOrder::drl();
  throw PreconditionError("unknown order " + o.order);
}

XlOptions xl_of(const Options& o) { return XlOptions{o.mutants == "on", o.degree_cap}; }

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string lines(const std::vector<Polynomial>& polys) {
  std::string out;
  for (const auto& f : polys) out += f.to_string() + "\n";
  return out;
}

std::string point_string(const VarietyPoint& pt) {
  std::string out = "(";
  for (std::size_t i = 0; i < pt.size(); ++i) out += (i ? ", " : "") + std::to_string(pt[i]);
  return out + ")";
}

std::string matrix_file(const PolyMatrix& M) {
  std::ostringstream out;
  out << "field " << M.ring()->field.modulus() << "\nvars";
  for (const auto& v : M.ring()->vars) out << " " << v;
  out << "\n";
  for (std::size_t i = 0; i < M.rows(); ++i) {
    out << "row ";
    for (std::size_t j = 0; j < M.cols(); ++j) out << (j ? ", " : "") << M.at(i, j).to_string();
    out << "\n";
  }
  return out.str();
}

PolyMatrix load_matrix(const Options& o) {
  auto sf = load(o);
  if (sf.matrix.empty()) throw PreconditionError("input has no 'row' lines");
  PolyMatrix M(sf.ring, sf.matrix.size(), sf.matrix.front().size());
  for (std::size_t i = 0; i < sf.matrix.size(); ++i) {
    if (sf.matrix[i].size() != M.cols()) throw DimensionError("ragged matrix rows");
    for (std::size_t j = 0; j < M.cols(); ++j) M.at(i, j) = sf.matrix[i][j];
  }
  return M;
}

std::string solve_report_text(const SolveReport& r) {
  std::ostringstream out;
  out << "solving degree " << r.solving_degree << " (" << r.order.name() << ", mutants " << (r.mutants ? "on" : "off")
      << ")\n";
  for (const auto& s : r.trace)
    out << "  d=" << s.d << " rows=" << s.rows << " cols=" << s.cols << " rank=" << s.rank << " mutants=" << s.mutants
        << "\n";
  return out.str();
}

std::string betti_text(const BettiTable& B) {
  std::ostringstream out;
  for (const auto& [ij, v] : B.entries()) out << "beta_" << ij.first << "," << ij.second << " = " << v << "\n";
  if (!B.empty()) out << "pd " << B.pd() << "\nreg " << B.reg() << "\n";
  return out.str();
}

int run(const std::string& cmd, const Options& o) {
  if (cmd == "gb") {
    const auto G = buchberger(load_ideal(o), order_of(o));
    emit(o, to_json(G), lines(G.elements));
  } else if (cmd == "solvdeg") {
    const auto res = xl_groebner(load_ideal(o), order_of(o), xl_of(o));
    emit(o, to_json(res.report), solve_report_text(res.report));
  } else if (cmd == "homogenize") {
    const auto I = load_ideal(o);
    const Homogenization H(I.ring());
    const Ideal J = o.full ? H.homogenized(I) : H.tilde(I);
    emit(o, Json{{"vars", J.ring()->vars}, {"generators", to_json(J.gens())}}, print_system(J));
  } else if (cmd == "top") {
    const auto J = top_ideal(load_ideal(o));
    emit(o, Json{{"generators", to_json(J.gens())}}, print_system(J));
  } else if (cmd == "reg") {
    const auto rep = reg_via_initial(load_ideal(o), o.assert_generic);
    emit(o, to_json(rep), "reg " + std::to_string(rep.value) + " (" + rep.label() + ")\n");
  } else if (cmd == "betti") {
    const auto I = load_ideal(o);
    if (!I.is_homogeneous()) throw PreconditionError("betti needs a homogeneous ideal");
    bool monomial = true;
    for (const auto& g : I.gens()) monomial = monomial && g.size() == 1;
    const auto B = betti_table(initial_ideal(I, TermOrder::drl()), I.ring()->field.modulus());
    auto j = to_json(B);
    j["of"] = monomial ? "ideal" : "initial_ideal";
    emit(o, j, std::string(monomial ? "" : "# Betti numbers of in_DRL(I)\n") + betti_text(B));
  } else if (cmd == "hilbert") {
    const auto h = hilbert_series(load_ideal(o));
    std::ostringstream text;
    text << "h =";
    for (auto c : h.h) text << " " << c;
    text << "\nell = " << h.ell << "\nireg = " << h.ireg() << "\n";
    emit(o, to_json(h), text.str());
  } else if (cmd == "ireg") {
    const int v = index_of_regularity(load_ideal(o));
    emit(o, Json{{"ireg", v}}, "ireg " + std::to_string(v) + "\n");
  } else if (cmd == "dregf") {
    const int v = dreg_faugere(load_ideal(o));
    emit(o, Json{{"dregF", v}}, "dregF " + std::to_string(v) + "\n");
  } else if (cmd == "firstfall") {
    const auto rep = first_fall_degree(load_ideal(o));
    std::ostringstream text;
    for (const auto& d : rep.dims) text << "e=" << d.e << " syz=" << d.syz << " triv=" << d.triv << "\n";
    if (rep.first_fall_degree)
      text << "first fall degree " << *rep.first_fall_degree << "\n";
    else
      text << "no fall degree in B\n";
    emit(o, to_json(rep), text.str());
  } else if (cmd == "solve") {
    const auto pts = lex_solve(load_ideal(o));
    std::string text;
    for (const auto& p : pts) text += point_string(p) + "\n";
    emit(o, points_to_json(pts), text);
  } else if (cmd == "unique-solve") {
    const auto pt = unique_solve(load_ideal(o));
    emit(o, Json(pt), point_string(pt) + "\n");
  } else if (cmd == "interpolate") {
    const auto sf = load(o);
    const auto G = shape_interpolate(sf.ring, sf.points);
    emit(o, to_json(G), lines(G.elements));
  } else if (cmd == "specialize") {
    const auto I = load_ideal(o);
    std::optional<std::size_t> var;
    if (!o.var.empty()) {
      var = I.ring()->index_of(o.var);
      if (!var) throw PreconditionError("unknown variable " + o.var);
    }
    const auto G = buchberger(I, TermOrder::lex());
    const auto sp = specialize_gb(G, I.ring()->field.from_int(o.value), var);
    Json j{{"basis", to_json(sp.basis)}, {"generic", sp.generic}};
    emit(o, j, (sp.generic ? "" : "# substituted set was not a Groebner basis; recomputed\n") + lines(sp.basis));
  } else if (cmd == "minors") {
    const auto I = minors(load_matrix(o), o.t);
    emit(o, Json{{"t", o.t}, {"minors", to_json(I.gens())}}, print_system(I));
  } else if (cmd == "minrank-gen") {
    const auto M = gen_instance(kind_from_name(o.kind), o.r, o.s, o.n, o.p, o.seed);
    Json rows = Json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(M.at(i, j).to_string());
      rows.push_back(row);
    }
    emit(o, Json{{"kind", o.kind}, {"seed", o.seed}, {"rows", rows}}, matrix_file(M));
  } else if (cmd == "minrank-exp") {
    std::optional<std::uint64_t> seed;
    if (o.generate) seed = o.seed;
    const auto M = o.generate ? gen_instance(kind_from_name(o.kind), o.r, o.s, o.n, o.p, o.seed) : load_matrix(o);
    const auto rep = minrank_experiment(M, o.t, seed);
    std::ostringstream text;
    text << "r=" << rep.r << " s=" << rep.s << " t=" << rep.t << " solvdeg=" << rep.solvdeg << " bound="
         << (rep.bound ? std::to_string(*rep.bound) : "n/a") << " height=" << rep.height << " (expected "
         << rep.expected_height << ", " << (rep.height_ok ? "ok" : "hypothesis fails") << ")\n";
    emit(o, to_json(rep), text.str());
  } else if (cmd == "verify-chain") {
    const auto rep = verify_chain(load_ideal(o), xl_of(o), o.assert_generic);
    std::ostringstream text;
    const auto& v = rep.values;
    text << "maxGB(I~)=" << v.maxgb_tilde << " solvdeg(I~)=" << v.solvdeg_tilde << " solvdeg(I)=" << v.solvdeg
         << " maxGB(I)=" << v.maxgb << " maxGB(I^h)=" << v.maxgb_h << " solvdeg(I^h)=" << v.solvdeg_h << "\n";
    text << "I~ zero-dimensional: " << (rep.tilde_zero_dimensional ? "yes" : "no") << ", reg(I~) "
         << rep.reg_tilde.value << " (" << rep.reg_tilde.label() << ")\n";
    for (const auto& r : rep.relations)
      text << (r.licensed ? (r.holds ? "pass " : "FAIL ") : "skip ") << r.name << "\n";
    emit(o, to_json(rep), text.str());
    return rep.passed() ? kOk : kRelationFailed;
  } else if (cmd == "abc-fixture") {
    const auto I = abc_fixture();
    emit(o, Json{{"vars", I.ring()->vars}, {"generators", to_json(I.gens())}}, print_system(I));
  } else if (cmd == "add-field-eqs") {
    const auto J = add_field_equations(load_ideal(o));
    emit(o, Json{{"vars", J.ring()->vars}, {"generators", to_json(J.gens())}}, print_system(J));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solving degree, regularity and Groebner basis experiments over prime fields"};
  app.require_subcommand(1, 1);
  Options o;

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"gb", "reduced Groebner basis"},
      {"solvdeg", "solving degree with the Macaulay matrix trace"},
      {"homogenize", "homogenized generators (--full for the whole ideal)"},
      {"top", "top-degree parts of the generators"},
      {"reg", "Castelnuovo-Mumford regularity via the DRL initial ideal"},
      {"betti", "graded Betti numbers"},
      {"hilbert", "Hilbert series"},
      {"ireg", "index of regularity"},
      {"dregf", "degree of regularity of the top-degree ideal"},
      {"firstfall", "first fall degree in the truncated ring"},
      {"solve", "all rational solutions of a zero-dimensional system"},
      {"unique-solve", "the single solution of a unique-solution system"},
      {"interpolate", "shape-lemma basis through the 'point' lines"},
      {"specialize", "substitute a value into the LEX basis"},
      {"minors", "ideal of t-minors of the 'row' matrix"},
      {"minrank-gen", "generate a MinRank matrix"},
      {"minrank-exp", "run a MinRank solving-degree experiment"},
      {"verify-chain", "check the solving degree / maxGB chain"},
      {"abc-fixture", "print the toy ABC system"},
      {"add-field-eqs", "append the field equations"},
  };
  const std::set<std::string> no_input{"abc-fixture", "minrank-gen"};
  for (const auto& cmd : commands) {
    auto* sub = app.add_subcommand(cmd.name, cmd.help);
    const std::string name = cmd.name;
    if (!no_input.count(name)) {
      if (name == "minrank-exp")
        sub->add_option("input", o.input, "matrix file; omit to generate from --kind/--r/--s/--n/--p/--seed");
      else
        sub->add_option("input", o.input, "system file, '-' for stdin");
    }
    sub->add_option("--order", o.order, "term order")->check(CLI::IsMember({"lex", "drl"}));
    sub->add_option("--mutants", o.mutants, "mutant rows in the Macaulay loop")->check(CLI::IsMember({"on", "off"}));
    sub->add_flag("--assert-generic-coords", o.assert_generic, "treat the ideal as being in generic coordinates");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--degree-cap", o.degree_cap, "largest Macaulay degree to try");
    if (name == "minors" || name == "minrank-exp") sub->add_option("--t", o.t, "minor size");
    if (name == "specialize") {
      sub->add_option("--value", o.value, "substituted value")->required();
      sub->add_option("--var", o.var, "variable to substitute (default: smallest)");
    }
    if (name == "homogenize") sub->add_flag("--full", o.full, "homogenize the whole ideal instead of the generators");
    if (name == "minrank-gen" || name == "minrank-exp") {
      sub->add_option("--kind", o.kind, "generic-linear, row-graded or column-graded");
      sub->add_option("--r", o.r, "rows");
      sub->add_option("--s", o.s, "columns");
      sub->add_option("--n", o.n, "variables");
      sub->add_option("--p", o.p, "field size");
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kPrecondition;
  }

  auto* sub = app.get_subcommands().front();
  if (sub->get_name() == "minrank-exp") o.generate = sub->get_option("input")->count() == 0;

  try {
    return run(sub->get_name(), o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const DegreeCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDegreeCap;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kRelationFailed;
  }
}
