#pragma once

// JSON encodings. Every reader throws InvalidInput (or StructuralError from
// the object constructors) on malformed input.
//
//   triangulation : {"triangles": F, "gluings": [[[t, side], [t', side']], ...]}
//   train track   : {"branches": B, "switches": [{"side0": [[b, end], ...], "side1": [...]}, ...]}
//   matrix        : {"matrix": [[...], ...]} or a bare array of rows
//   complex       : [re, im] or a plain number
//   exact element : [{"weights": [...], "coeff": [{"exponent": e, "value": v}, ...]}, ...]
//   numeric element: [{"weights": [...], "coeff": [re, im]}, ...]

#include <complex>
#include <optional>
#include <vector>

#include <json.hpp>

#include "ttcf/algebra.hpp"
#include "ttcf/lattice.hpp"
#include "ttcf/representation.hpp"
#include "ttcf/structure.hpp"
#include "ttcf/train_track.hpp"
#include "ttcf/triangulation.hpp"

namespace ttcf {

using Json = nlohmann::json;

Json to_json(const IdealTriangulation& t);
GluingData gluing_from_json(const Json& j);

Json to_json(const TrainTrack& tau);
TrainTrack track_from_json(const Json& j);

/// Entries that do not fit in 64 bits are written as decimal strings.
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json to_json(std::complex<double> z);
std::complex<double> complex_from_json(const Json& j);

Json to_json(const ExactElement& x);
Json to_json(const NumericElement& x);
ExactElement exact_element_from_json(const Json& j, const AlgebraPtr& algebra);
NumericElement numeric_element_from_json(const Json& j, const AlgebraPtr& algebra);

Json to_json(const StructureReport& r);
Json to_json(const VerificationReport& r);

/// Input of the rep command: a surface given by (g, s) or an explicit
/// triangulation, N, and optionally omega, zeta and h. Missing zeta values
/// are drawn from `seed`; missing h values are principal roots.
struct RepInput {
  std::optional<GluingData> triangulation;
  int g = 0;
  int s = 0;
  int N = 1;
  std::optional<std::complex<double>> omega;
  std::optional<std::vector<std::complex<double>>> zeta;
  std::optional<std::vector<std::complex<double>>> h;
  std::optional<std::uint64_t> seed;
};

RepInput rep_input_from_json(const Json& j);

}  // namespace ttcf
