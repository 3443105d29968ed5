// ttcf: command-line driver.
//
// Exit codes: 0 pass, 1 a mathematical check failed, 2 input or usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ttcf/chebyshev.hpp"
#include "ttcf/errors.hpp"
#include "ttcf/json_io.hpp"
#include "ttcf/lattice.hpp"
#include "ttcf/representation.hpp"
#include "ttcf/structure.hpp"
#include "ttcf/train_track.hpp"
#include "ttcf/triangulation.hpp"

namespace {

using namespace ttcf;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct Common {
  std::string input;
  std::string out;
  std::uint64_t seed = 0;
  double tolerance = 0.0;  // 0: not given on the command line
};

double resolve_tolerance(const Common& c, double fallback) {
  double tol = fallback;
  if (const char* env = std::getenv("TTCF_TOLERANCE")) {
    try {
      std::size_t used = 0;
      tol = std::stod(env, &used);
      if (used != std::string(env).size()) throw InvalidInput("");
    } catch (const std::exception&) {
      throw InvalidInput(std::string("TTCF_TOLERANCE is not a number: ") + env);
    }
  }
  if (c.tolerance != 0.0) tol = c.tolerance;
  if (!(tol > 0.0)) throw InvalidInput("tolerance must be positive");
  return tol;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void emit(const Json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw InvalidInput("cannot write " + out);
  f << text;
}

std::complex<double> parse_complex(const std::string& text) {
  std::istringstream ss(text);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(ss >> re)) throw InvalidInput("not a complex number: " + text);
  if (ss >> comma) {
    if (comma != ',' || !(ss >> im)) throw InvalidInput("not a complex number: " + text);
  }
  std::string rest;
  if (ss >> rest) throw InvalidInput("not a complex number: " + text);
  return {re, im};
}

IdealTriangulation surface(int g, int s) { return standard_triangulation(g, s); }

int cmd_triangulate(int g, int s, const Common& c) {
  const IdealTriangulation t = surface(g, s);
  Json j = to_json(t);
  j["genus"] = t.genus();
  j["punctures"] = t.puncture_count();
  j["edges"] = t.edge_count();
  j["seed"] = c.seed;
  emit(j, c.out);
  return kPass;
}

int cmd_verify_structure(int g, int s, bool have_surface, const Common& c) {
  TrainTrack tau = [&] {
    if (have_surface) return from_triangulation(surface(g, s));
    const Json j = read_json(c.input);
    if (j.is_object() && j.contains("branches")) return track_from_json(j);
    return from_triangulation(IdealTriangulation::from_gluings(gluing_from_json(j)));
  }();
  const StructureReport r = verify_structure(tau);
  Json out = to_json(r);
  out["seed"] = c.seed;
  emit(out, c.out);
  return r.pass ? kPass : kFail;
}

int cmd_rep(RepInput in, const Common& c, bool seed_given) {
  const double tol = resolve_tolerance(c, 1e-9);
  if (seed_given || !in.seed) in.seed = c.seed;
  const IdealTriangulation t =
      in.triangulation ? IdealTriangulation::from_gluings(*in.triangulation) : surface(in.g, in.s);
  if (in.N < 1 || in.N % 2 == 0) throw InvalidInput("N must be an odd positive integer");
  const std::complex<double> omega = in.omega ? *in.omega : enumerate_omegas(in.N, 1).front();
  const AlgebraParams params = AlgebraParams::numeric(in.N, omega);

  RepresentationSpec spec;
  if (in.zeta) {
    std::vector<std::complex<double>> h;
    if (in.h) {
      h = *in.h;
    } else {
      const std::size_t s = t.puncture_count();
      if (in.zeta->size() >= s)
        for (std::size_t k = 0; k < s; ++k) h.push_back(principal_root((*in.zeta)[in.zeta->size() - s + k], in.N));
    }
    spec = make_spec(t, params, *in.zeta, h, tol);
  } else {
    if (in.h) throw InvalidInput("h given without zeta");
    spec = random_spec(t, params, *in.seed);
  }

  const Representation rep = Representation::build(t, spec);
  const VerificationReport v = verify(rep, tol);
  const VerificationReport f = frobenius_compat(rep, tol, *in.seed);

  Json zeta = Json::array(), h = Json::array();
  for (auto z : spec.zeta) zeta.push_back(to_json(z));
  for (auto z : spec.h) h.push_back(to_json(z));
  const bool pass = v.pass() && f.pass();
  Json out = {{"genus", t.genus()},
              {"punctures", t.puncture_count()},
              {"N", in.N},
              {"omega", to_json(omega)},
              {"epsilon", params.epsilon()},
              {"dimension", rep.dimension()},
              {"zeta", zeta},
              {"h", h},
              {"tolerance", tol},
              {"seed", *in.seed},
              {"verify", to_json(v)},
              {"frobenius", to_json(f)},
              {"pass", pass}};
  emit(out, c.out);
  return pass ? kPass : kFail;
}

int cmd_chebyshev(const std::string& y_text, int n, const Common& c) {
  const double tol = resolve_tolerance(c, 1e-9);
  if (n < 1) throw InvalidInput("N must be at least 1");
  const std::complex<double> y = parse_complex(y_text);
  Json sols = Json::array();
  bool pass = true;
  for (auto x : solve_chebyshev(y, n)) {
    const double residual = std::abs(chebyshev_eval(n, x) - y);
    pass = pass && residual <= tol * std::max(1.0, std::abs(y));
    sols.push_back({{"x", to_json(x)}, {"residual", residual}});
  }
  emit({{"y", to_json(y)}, {"N", n}, {"solutions", sols}, {"seed", c.seed}, {"pass", pass}}, c.out);
  return pass ? kPass : kFail;
}

int cmd_normal_form(const Common& c) {
  const SkewForm m(matrix_from_json(read_json(c.input)));
  const NormalForm nf = skew_normal_form(m);
  const bool congruent = nf.transform * m.matrix() * nf.transform.transpose() == nf.diagonal;
  const Int det = determinant(nf.transform);
  const bool unimodular = det == 1 || det == -1;
  Json out = {{"transform", to_json(nf.transform)},
              {"diagonal", to_json(nf.diagonal)},
              {"invariants", to_json(nf.invariants)},
              {"nullity", nf.nullity},
              {"congruent", congruent},
              {"unimodular", unimodular},
              {"seed", c.seed},
              {"pass", congruent && unimodular}};
  emit(out, c.out);
  return congruent && unimodular ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Train tracks, Thurston forms and balanced Chekhov-Fock representations"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out,-o", common.out, "Write JSON here instead of stdout");
    sub->add_option("--seed", common.seed, "Seed for randomized choices")->default_val(0);
  };

  int g = 0, s = 0, n = 1;
  std::string y_text;
  std::string omega_text;

  auto* tri = app.add_subcommand("triangulate", "Standard ideal triangulation of S_(g,s)");
  tri->add_option("--g", g, "Genus")->required();
  tri->add_option("--s", s, "Number of punctures")->required();
  add_common(tri);

  auto* vs = app.add_subcommand("verify-structure", "Block census of the Thurston form against the prediction");
  auto* vs_in = vs->add_option("--input,-i", common.input, "Triangulation or train-track JSON");
  auto* vs_g = vs->add_option("--g", g, "Genus of a standard triangulation");
  auto* vs_s = vs->add_option("--s", s, "Punctures of a standard triangulation");
  vs_g->needs(vs_s);
  vs_s->needs(vs_g);
  vs_in->excludes(vs_g);
  add_common(vs);

  auto* rep = app.add_subcommand("rep", "Build and verify an irreducible representation");
  auto* rep_in = rep->add_option("--input,-i", common.input, "Representation spec JSON");
  auto* rep_g = rep->add_option("--g", g, "Genus");
  auto* rep_s = rep->add_option("--s", s, "Punctures");
  auto* rep_n = rep->add_option("--N", n, "Odd root order");
  auto* rep_w = rep->add_option("--omega", omega_text, "omega as re,im");
  rep->add_option("--tolerance", common.tolerance, "Check tolerance (also TTCF_TOLERANCE)");
  rep_in->excludes(rep_g)->excludes(rep_s)->excludes(rep_n)->excludes(rep_w);
  add_common(rep);

  auto* cheb = app.add_subcommand("chebyshev", "Solve T_N(x) = y");
  cheb->add_option("--y", y_text, "y as re or re,im")->required();
  cheb->add_option("--N", n, "Degree")->required();
  cheb->add_option("--tolerance", common.tolerance, "Residual tolerance (also TTCF_TOLERANCE)");
  add_common(cheb);

  auto* nf = app.add_subcommand("normal-form", "Skew normal form of an integer antisymmetric matrix");
  nf->add_option("--input,-i", common.input, "Matrix JSON")->required();
  add_common(nf);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (tri->parsed()) return cmd_triangulate(g, s, common);
    if (vs->parsed()) {
      const bool have_surface = vs_g->count() > 0;
      if (!have_surface && common.input.empty()) throw InvalidInput("give --input or --g/--s");
      return cmd_verify_structure(g, s, have_surface, common);
    }
    if (rep->parsed()) {
      RepInput in;
      if (!common.input.empty()) {
        in = rep_input_from_json(read_json(common.input));
      } else {
        if (rep_g->count() == 0 || rep_s->count() == 0 || rep_n->count() == 0)
          throw InvalidInput("give --input or --g, --s and --N");
        in.g = g;
        in.s = s;
        in.N = n;
        if (!omega_text.empty()) in.omega = parse_complex(omega_text);
      }
      return cmd_rep(in, common, rep->get_option("--seed")->count() > 0);
    }
    if (cheb->parsed()) return cmd_chebyshev(y_text, n, common);
    if (nf->parsed()) return cmd_normal_form(common);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kFail;
  }
  return kInputError;
}
