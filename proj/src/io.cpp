#include "elastica/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "elastica/frenet.hpp"
#include "elastica/lagrangian.hpp"

namespace elastica::io {

namespace {

std::string format(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_number(const std::string& field, std::size_t line) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (field.empty() || end != field.c_str() + field.size() || errno == ERANGE || !std::isfinite(v)) {
    throw InputError("line " + std::to_string(line) + ": bad number '" + field + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

Vec3 vec_field(const nlohmann::json& cfg, const char* key) {
  if (!cfg.contains(key)) throw InputError(std::string("config: missing '") + key + "'");
  const auto& a = cfg.at(key);
  if (!a.is_array() || a.size() != 3) {
    throw InputError(std::string("config: '") + key + "' must be an array of 3 numbers");
  }
  for (const auto& e : a) {
    if (!e.is_number()) throw InputError(std::string("config: '") + key + "' must hold numbers");
  }
  try {
    return Vec3(a[0].get<double>(), a[1].get<double>(), a[2].get<double>());
  } catch (const DegenerateInput& e) {
    throw InputError(std::string("config: '") + key + "': " + e.what());
  }
}

double num_field(const nlohmann::json& cfg, const char* key, double fallback, bool required) {
  if (!cfg.contains(key)) {
    if (required) throw InputError(std::string("config: missing '") + key + "'");
    return fallback;
  }
  const auto& v = cfg.at(key);
  if (!v.is_number() || !std::isfinite(v.get<double>())) {
    throw InputError(std::string("config: '") + key + "' must be a finite number");
  }
  return v.get<double>();
}

}  // namespace

double column_kappa(const JetState& j) {
  if (norm(j.xdot) == 0.0) return 0.0;
  return norm(perpendicular_part(j.xddot, j.xdot));
}

double column_tau(const JetState& j) {
  const double k = column_kappa(j);
  if (!(k > kKappaMin)) return 0.0;
  return dot(cross(j.xdot, j.xddot), j.xdddot) / (k * k);
}

void write_curve_csv(std::ostream& os, const CurveTrace& trace) {
  os << kCurveHeader << '\n';
  for (const JetState& j : trace) {
    os << format(j.t);
    for (const Vec3* v : {&j.x, &j.xdot, &j.xddot, &j.xdddot}) {
      for (std::size_t i = 0; i < 3; ++i) os << ',' << format((*v)[i]);
    }
    os << ',' << format(column_kappa(j)) << ',' << format(column_tau(j)) << '\n';
  }
}

void write_curve_csv(const std::string& path, const CurveTrace& trace) {
  std::ofstream os(path);
  if (!os) throw InputError("cannot open '" + path + "' for writing");
  write_curve_csv(os, trace);
  if (!os) throw InputError("write to '" + path + "' failed");
}

CurveTrace read_curve_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || strip_cr(line) != kCurveHeader) {
    throw InputError("trace: missing or unexpected header");
  }
  std::vector<JetState> samples;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 15) {
      throw InputError("line " + std::to_string(lineno) + ": expected 15 fields, got " +
                       std::to_string(f.size()));
    }
    double v[13];
    for (std::size_t i = 0; i < 13; ++i) v[i] = parse_number(f[i], lineno);
    parse_number(f[13], lineno);
    parse_number(f[14], lineno);
    samples.emplace_back(v[0], Vec3(v[1], v[2], v[3]), Vec3(v[4], v[5], v[6]),
                         Vec3(v[7], v[8], v[9]), Vec3(v[10], v[11], v[12]));
  }
  if (samples.empty()) throw InputError("trace: no samples");
  const double step = samples.size() > 1 ? samples[1].t - samples[0].t : 1.0;
  try {
    return CurveTrace(step, std::move(samples), "arclength", "file");
  } catch (const SizeError& e) {
    throw InputError(std::string("trace: ") + e.what());
  }
}

CurveTrace read_curve_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw InputError("cannot open '" + path + "'");
  return read_curve_csv(is);
}

void write_curvature_csv(std::ostream& os, const CurvatureTrace& trace) {
  os << kCurvatureHeader << '\n';
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const double k = trace.kappa[i];
    const double tau = (trace.c == 0.0 || !(std::abs(k) > kKappaMin)) ? 0.0 : trace.c / (k * k);
    os << format(trace.s(i)) << ',' << format(k) << ',' << format(trace.kappa_dot[i]) << ','
       << format(tau) << '\n';
  }
}

InitialData parse_config(const std::string& json_text) {
  nlohmann::json cfg;
  try {
    cfg = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("config: malformed JSON: ") + e.what());
  }
  if (!cfg.is_object()) throw InputError("config: top level must be an object");
  const double t0 = num_field(cfg, "t0", 0.0, false);
  const Vec3 x0 = cfg.contains("x0") ? vec_field(cfg, "x0") : Vec3{};

  if (cfg.contains("frame") || cfg.contains("kappa0")) {
    const double kappa = num_field(cfg, "kappa0", 0.0, true);
    const double kappa_dot = num_field(cfg, "kappa_dot0", 0.0, false);
    const double tau = num_field(cfg, "tau0", 0.0, false);
    Vec3 T = kE1, N = kE2, B = kE3;
    if (cfg.contains("frame")) {
      const auto& fr = cfg.at("frame");
      if (fr.is_string()) {
        if (fr.get<std::string>() != "standard") {
          throw InputError("config: unknown frame '" + fr.get<std::string>() + "'");
        }
      } else if (fr.is_array() && fr.size() == 3) {
        nlohmann::json rows = {{"T", fr[0]}, {"N", fr[1]}, {"B", fr[2]}};
        T = vec_field(rows, "T");
        N = vec_field(rows, "N");
        B = vec_field(rows, "B");
      } else {
        throw InputError("config: 'frame' must be \"standard\" or [[T],[N],[B]]");
      }
    }
    try {
      const FrenetFrame f(T, N, B, kappa, tau);
      return {jet_from_frame(x0, f, kappa_dot, t0), false, 0.0};
    } catch (const DegenerateInput& e) {
      throw InputError(std::string("config: ") + e.what());
    }
  }

  JetState raw(t0, x0, vec_field(cfg, "xdot0"),
               cfg.contains("xddot0") ? vec_field(cfg, "xddot0") : Vec3{},
               cfg.contains("xdddot0") ? vec_field(cfg, "xdddot0") : Vec3{});
  if (norm(raw.xdot) == 0.0) throw InputError("config: xdot0 must be nonzero");
  const double residual = raw.arclength_residuals().max_abs();
  if (residual <= kRepresentationTolerance) return {raw, false, residual};
  return {project_arclength(raw), true, residual};
}

InitialData load_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw InputError("cannot open config '" + path + "'");
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_config(ss.str());
}

}  // namespace elastica::io
