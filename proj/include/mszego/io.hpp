#pragma once

// CSV, SVG and run-manifest writers.

#include <charconv>
#include <chrono>
#include <complex>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "curve.hpp"

namespace mszego {

inline constexpr const char* kToolVersion = "1.0.0";

/// Shortest representation that round-trips to the same double.
inline std::string fmt(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline std::string csv_row(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) s += ',';
    s += cells[i];
  }
  s += '\n';
  return s;
}

/// arc_id,j,k,re,im with points in orientation order.
inline std::string curve_csv(const CurveSet& cs) {
  std::string out = "arc_id,j,k,re,im\n";
  for (std::size_t id = 0; id < cs.arcs.size(); ++id) {
    const auto& arc = cs.arcs[id];
    for (const auto& z : arc.points)
      out += csv_row({std::to_string(id), std::to_string(arc.j), std::to_string(arc.k), fmt(z.real()), fmt(z.imag())});
  }
  return out;
}

/// Static SVG of the curve over [-1.2, 1.2]^2 with optional points drawn as dots.
inline std::string curve_svg(const CurveSet& cs, const std::vector<cplx>& singular,
                             const std::vector<cplx>& dots = {}) {
  const double size = 600.0, span = 1.2;
  auto X = [&](cplx z) { return fmt((z.real() + span) / (2 * span) * size); };
  auto Y = [&](cplx z) { return fmt((span - z.imag()) / (2 * span) * size); };
  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<circle cx=\"" << size / 2 << "\" cy=\"" << size / 2 << "\" r=\"" << fmt(size / (2 * span))
    << "\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";
  for (const auto& arc : cs.arcs) {
    s << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (const auto& z : arc.points) s << X(z) << ',' << Y(z) << ' ';
    s << "\"/>\n";
  }
  for (const auto& z : dots) s << "<circle cx=\"" << X(z) << "\" cy=\"" << Y(z) << "\" r=\"2\" fill=\"blue\"/>\n";
  for (const auto& z : singular) s << "<circle cx=\"" << X(z) << "\" cy=\"" << Y(z) << "\" r=\"3\" fill=\"red\"/>\n";
  s << "</svg>\n";
  return s.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

struct RunManifest {
  std::string config_path;
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<std::string> outputs;
  double wall_time = 0.0;

  nlohmann::json to_json() const {
    return {{"config", config_path},  {"command", command},     {"parameters", parameters},
            {"outputs", outputs},     {"tool_version", kToolVersion}, {"wall_time_s", wall_time}};
  }
};

}  // namespace mszego
