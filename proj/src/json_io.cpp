#include "ttcf/json_io.hpp"

#include <limits>
#include <string>

#include "ttcf/errors.hpp"

namespace ttcf {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed ") + what + ": " + e.what());
  }
}

const Json& require(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string(what) + " is missing \"" + key + "\"");
  return j.at(key);
}

std::size_t non_negative(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw InvalidInput(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

Json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InvalidInput("matrix entry is not an integer");
}

Json germ_list(const std::vector<Germ>& side) {
  Json out = Json::array();
  for (const Germ& g : side) out.push_back({g.branch, g.end});
  return out;
}

std::vector<Germ> germs_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("switch side must be a list of [branch, end] pairs");
  std::vector<Germ> out;
  for (const Json& g : j) {
    if (!g.is_array() || g.size() != 2) throw InvalidInput("germ must be a [branch, end] pair");
    const auto end = non_negative(g[1], "germ end");
    if (end > 1) throw InvalidInput("germ end must be 0 or 1");
    out.push_back({non_negative(g[0], "germ branch"), static_cast<int>(end)});
  }
  return out;
}

WeightSystem weights_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("weights must be an integer list");
  WeightSystem w;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw InvalidInput("weights must be an integer list");
    w.push_back(v.get<std::int64_t>());
  }
  return w;
}

Json blocks_json(const BlockCensus& b) {
  return {{"invariants", to_json(b.invariants)}, {"nullity", b.nullity}};
}

}  // namespace

Json to_json(const IdealTriangulation& t) {
  const GluingData data = t.gluing_data();
  Json gl = Json::array();
  for (const auto& g : data.gluings) gl.push_back({{g[0].triangle, g[0].side}, {g[1].triangle, g[1].side}});
  return {{"triangles", data.triangles}, {"gluings", gl}};
}

GluingData gluing_from_json(const Json& j) {
  return guarded("triangulation", [&] {
    GluingData data;
    data.triangles = non_negative(require(j, "triangles", "triangulation"), "triangles");
    const Json& gl = require(j, "gluings", "triangulation");
    if (!gl.is_array()) throw InvalidInput("gluings must be a list");
    for (const Json& pair : gl) {
      if (!pair.is_array() || pair.size() != 2) throw InvalidInput("each gluing must pair two [triangle, side] slots");
      std::array<Slot, 2> g{};
      for (int k = 0; k < 2; ++k) {
        const Json& s = pair[static_cast<std::size_t>(k)];
        if (!s.is_array() || s.size() != 2) throw InvalidInput("slot must be a [triangle, side] pair");
        g[static_cast<std::size_t>(k)] = {non_negative(s[0], "triangle index"),
                                          static_cast<int>(non_negative(s[1], "side index"))};
      }
      data.gluings.push_back(g);
    }
    return data;
  });
}

Json to_json(const TrainTrack& tau) {
  Json sw = Json::array();
  for (const Switch& s : tau.switches()) sw.push_back({{"side0", germ_list(s.sides[0])}, {"side1", germ_list(s.sides[1])}});
  return {{"branches", tau.branch_count()}, {"switches", sw}};
}

TrainTrack track_from_json(const Json& j) {
  return guarded("train track", [&] {
    const std::size_t branches = non_negative(require(j, "branches", "train track"), "branches");
    const Json& sw = require(j, "switches", "train track");
    if (!sw.is_array()) throw InvalidInput("switches must be a list");
    std::vector<Switch> switches;
    for (const Json& s : sw) {
      Switch out;
      out.sides[0] = germs_from_json(require(s, "side0", "switch"));
      out.sides[1] = germs_from_json(require(s, "side1", "switch"));
      switches.push_back(std::move(out));
    }
    return TrainTrack::create(branches, std::move(switches));
  });
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const Int& x : v) out.push_back(int_to_json(x));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(int_to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    const Json& rows = j.is_object() ? require(j, "matrix", "matrix file") : j;
    if (!rows.is_array()) throw InvalidInput("matrix must be a list of rows");
    std::vector<IntVector> out;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (const Json& r : rows) {
      if (!r.is_array() || r.size() != cols) throw InvalidInput("matrix rows must be lists of equal length");
      IntVector v;
      for (const Json& e : r) v.push_back(int_from_json(e));
      out.push_back(std::move(v));
    }
    return IntMatrix::from_rows(out, cols);
  });
}

Json to_json(std::complex<double> z) { return {z.real(), z.imag()}; }

std::complex<double> complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw InvalidInput("complex number must be [re, im] or a number");
}

Json to_json(const ExactElement& x) {
  Json out = Json::array();
  for (const auto& [a, c] : x.terms()) {
    Json coeff = Json::array();
    for (int k = 0; k < c.modulus(); ++k)
      if (c[k] != 0) coeff.push_back({{"exponent", k}, {"value", c[k]}});
    out.push_back({{"weights", a}, {"coeff", coeff}});
  }
  return out;
}

Json to_json(const NumericElement& x) {
  Json out = Json::array();
  for (const auto& [a, c] : x.terms()) out.push_back({{"weights", a}, {"coeff", to_json(c)}});
  return out;
}

ExactElement exact_element_from_json(const Json& j, const AlgebraPtr& algebra) {
  return guarded("element", [&] {
    if (!j.is_array()) throw InvalidInput("element must be a list of terms");
    ExactElement x(algebra);
    const int modulus = algebra->params().modulus();
    for (const Json& term : j) {
      const WeightSystem a = weights_from_json(require(term, "weights", "term"));
      require_weight_system(algebra->track(), a);
      RootPolynomial c(modulus);
      for (const Json& part : require(term, "coeff", "term"))
        c += RootPolynomial::monomial(modulus, require(part, "exponent", "coefficient").get<std::int64_t>(),
                                      require(part, "value", "coefficient").get<std::int64_t>());
      x.add_term(a, c);
    }
    return x;
  });
}

NumericElement numeric_element_from_json(const Json& j, const AlgebraPtr& algebra) {
  return guarded("element", [&] {
    if (!j.is_array()) throw InvalidInput("element must be a list of terms");
    NumericElement x(algebra);
    for (const Json& term : j) {
      const WeightSystem a = weights_from_json(require(term, "weights", "term"));
      require_weight_system(algebra->track(), a);
      x.add_term(a, complex_from_json(require(term, "coeff", "term")));
    }
    return x;
  });
}

Json to_json(const StructureReport& r) {
  return {{"case", to_string(r.structure_case)},
          {"genus", r.topology.genus},
          {"n_even", r.topology.n_even},
          {"n_odd", r.topology.n_odd},
          {"orientable", r.topology.orientable},
          {"lattice_rank", r.lattice_basis.size()},
          {"expected_blocks", blocks_json(r.expected)},
          {"computed_blocks", blocks_json(r.computed)},
          {"pass", r.pass},
          {"message", r.message}};
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const CheckResult& c : r.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"max_deviation", c.max_deviation}, {"detail", c.detail}});
  Json out = {{"checks", checks}, {"pass", r.pass()}};
  if (r.commutant_dimension) out["commutant_dimension"] = *r.commutant_dimension;
  return out;
}

RepInput rep_input_from_json(const Json& j) {
  return guarded("representation spec", [&] {
    if (!j.is_object()) throw InvalidInput("representation spec must be an object");
    RepInput in;
    if (j.contains("triangulation")) {
      in.triangulation = gluing_from_json(j.at("triangulation"));
    } else {
      const Json& g = require(j, "g", "representation spec");
      const Json& s = require(j, "s", "representation spec");
      if (!g.is_number_integer() || !s.is_number_integer()) throw InvalidInput("g and s must be integers");
      in.g = g.get<int>();
      in.s = s.get<int>();
    }
    const Json& n = require(j, "N", "representation spec");
    if (!n.is_number_integer()) throw InvalidInput("N must be an integer");
    in.N = n.get<int>();
    if (j.contains("omega")) in.omega = complex_from_json(j.at("omega"));
    auto complex_list = [&](const char* key) {
      const Json& list = j.at(key);
      if (!list.is_array()) throw InvalidInput(std::string(key) + " must be a list of complex numbers");
      std::vector<std::complex<double>> out;
      for (const Json& z : list) out.push_back(complex_from_json(z));
      return out;
    };
    if (j.contains("zeta")) in.zeta = complex_list("zeta");
    if (j.contains("h")) in.h = complex_list("h");
    if (j.contains("seed")) {
      const Json& seed = j.at("seed");
      if (!seed.is_number_integer() || (!seed.is_number_unsigned() && seed.get<std::int64_t>() < 0))
        throw InvalidInput("seed must be a non-negative integer");
      in.seed = seed.get<std::uint64_t>();
    }
    return in;
  });
}

}  // namespace ttcf
