#pragma once

#include <iosfwd>
#include <string>

#include "elastica/types.hpp"

namespace elastica::io {

inline constexpr const char* kCurveHeader =
    "s,x1,x2,x3,xd1,xd2,xd3,xdd1,xdd2,xdd3,xddd1,xddd2,xddd3,kappa,tau";
inline constexpr const char* kCurvatureHeader = "s,kappa,kappa_dot,tau";

/// Curvature |xddot perpendicular to xdot| and torsion <xdot x xddot, xdddot>/kappa^2
/// (reported as 0 when kappa <= kKappaMin).
double column_kappa(const JetState& j);
double column_tau(const JetState& j);

/// Writes the trace with 17 significant digits so that reading it back is exact.
void write_curve_csv(std::ostream& os, const CurveTrace& trace);
void write_curve_csv(const std::string& path, const CurveTrace& trace);

/// Reads a curve CSV. The kappa and tau columns are derived data and ignored.
/// Throws InputError on a missing header, ragged rows, unparsable numbers or
/// an empty body.
CurveTrace read_curve_csv(std::istream& is);
CurveTrace read_curve_csv(const std::string& path);

void write_curvature_csv(std::ostream& os, const CurvatureTrace& trace);

/// Initial data parsed from a JSON configuration.
struct InitialData {
  JetState jet;
  bool projected = false;       // raw jet was moved onto the arclength conditions
  double input_residual = 0.0;  // arclength residual of the raw jet before projection
};

/// Accepts a raw jet {"x0","xdot0","xddot0","xdddot0"} or frame data
/// {"kappa0","kappa_dot0","tau0","x0","frame"}; "frame" is "standard" or
/// [[T],[N],[B]]. An optional "t0" sets the starting parameter.
InitialData parse_config(const std::string& json_text);
InitialData load_config(const std::string& path);

}  // namespace elastica::io
