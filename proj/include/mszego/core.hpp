#pragma once

// Problem configuration for the weight exp(-N|z|^2) prod |z - a_j|^{2 c_j}
// and the error type shared by every module.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace mszego {

using cplx = std::complex<double>;

/// Region / singular-point label: 0 is the unbounded region, j >= 1 refers to a_j.
using Label = int;

inline constexpr double kPi = 3.14159265358979323846;

enum class ErrorKind {
  // configuration
  OriginSingularity,
  OutsideDisk,
  DuplicatePoint,
  CollinearTriple,
  BadExponent,
  BadDegree,
  BadScale,
  SizeMismatch,
  ParseError,
  // geometry
  NonGeneric,
  DegenerateArc,
  // branches / special functions
  OnCut,
  OnNegativeAxis,
  ContourThroughZero,
  // oracle
  NonIntegerExponent,
  QuadratureNotConverged,
  IllConditioned,
  NoConvergence,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::OriginSingularity: return "OriginSingularity";
    case ErrorKind::OutsideDisk: return "OutsideDisk";
    case ErrorKind::DuplicatePoint: return "DuplicatePoint";
    case ErrorKind::CollinearTriple: return "CollinearTriple";
    case ErrorKind::BadExponent: return "BadExponent";
    case ErrorKind::BadDegree: return "BadDegree";
    case ErrorKind::BadScale: return "BadScale";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonGeneric: return "NonGeneric";
    case ErrorKind::DegenerateArc: return "DegenerateArc";
    case ErrorKind::OnCut: return "OnCut";
    case ErrorKind::OnNegativeAxis: return "OnNegativeAxis";
    case ErrorKind::ContourThroughZero: return "ContourThroughZero";
    case ErrorKind::NonIntegerExponent: return "NonIntegerExponent";
    case ErrorKind::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::NoConvergence: return "NoConvergence";
  }
  return "Unknown";
}

/// Configuration errors map to exit code 2, NonGeneric to 3, everything numerical to 4.
inline bool is_config_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::OriginSingularity:
    case ErrorKind::OutsideDisk:
    case ErrorKind::DuplicatePoint:
    case ErrorKind::CollinearTriple:
    case ErrorKind::BadExponent:
    case ErrorKind::BadDegree:
    case ErrorKind::BadScale:
    case ErrorKind::SizeMismatch:
    case ErrorKind::ParseError:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct Configuration {
  std::vector<cplx> a;
  std::vector<double> c;
  int n = 0;
  std::optional<double> N;  ///< absent means N = n

  std::size_t nu() const { return a.size(); }
  double scale() const { return N ? *N : static_cast<double>(n); }
  double sum_c() const {
    double s = 0.0;
    for (double x : c) s += x;
    return s;
  }
  bool integer_exponents() const {
    return std::all_of(c.begin(), c.end(), [](double x) { return x == std::floor(x); });
  }

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

namespace detail {

inline double triangle_area(cplx p, cplx q, cplx r) {
  return 0.5 * std::abs(std::imag((q - p) * std::conj(r - p)));
}

}  // namespace detail

/// Relative tolerance of the collinearity test: area < tol * (max side)^2.
inline constexpr double kCollinearTol = 1e-10;
inline constexpr double kDuplicateTol = 1e-12;

/// Checks every invariant of a configuration and fills in N = n when absent.
inline Configuration validate_config(Configuration raw) {
  if (raw.a.size() != raw.c.size())
    throw Error(ErrorKind::SizeMismatch, "a and c must have the same length");
  if (raw.a.empty()) throw Error(ErrorKind::SizeMismatch, "at least one singular point is required");
  if (raw.n < 0) throw Error(ErrorKind::BadDegree, "degree n must be >= 0");
  if (raw.N && !(std::isfinite(*raw.N) && *raw.N > 0.0))
    throw Error(ErrorKind::BadScale, "N must be a finite positive number");
  if (!raw.N) {
    if (raw.n == 0) throw Error(ErrorKind::BadScale, "N defaults to n, which must then be positive");
    raw.N = static_cast<double>(raw.n);
  }

  for (std::size_t j = 0; j < raw.nu(); ++j) {
    const cplx aj = raw.a[j];
    if (!std::isfinite(aj.real()) || !std::isfinite(aj.imag()))
      throw Error(ErrorKind::OutsideDisk, "a_" + std::to_string(j + 1) + " is not finite");
    if (aj == cplx(0.0, 0.0))
      throw Error(ErrorKind::OriginSingularity, "a_" + std::to_string(j + 1) + " is at the origin");
    if (std::abs(aj) >= 1.0)
      throw Error(ErrorKind::OutsideDisk, "a_" + std::to_string(j + 1) + " is not inside the unit disk");
    const double cj = raw.c[j];
    if (!std::isfinite(cj) || cj <= -1.0 || cj == 0.0)
      throw Error(ErrorKind::BadExponent, "c_" + std::to_string(j + 1) + " must be nonzero and > -1");
  }

  for (std::size_t i = 0; i < raw.nu(); ++i)
    for (std::size_t j = i + 1; j < raw.nu(); ++j)
      if (std::abs(raw.a[i] - raw.a[j]) < kDuplicateTol)
        throw Error(ErrorKind::DuplicatePoint,
                    "a_" + std::to_string(i + 1) + " and a_" + std::to_string(j + 1) + " coincide");

  std::vector<cplx> pts;
  pts.reserve(raw.nu() + 1);
  pts.push_back(0.0);
  pts.insert(pts.end(), raw.a.begin(), raw.a.end());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        const double side = std::max({std::abs(pts[i] - pts[j]), std::abs(pts[j] - pts[k]),
                                      std::abs(pts[i] - pts[k])});
        if (detail::triangle_area(pts[i], pts[j], pts[k]) < kCollinearTol * side * side)
          throw Error(ErrorKind::CollinearTriple, "points " + std::to_string(i) + ", " +
                                                      std::to_string(j) + ", " + std::to_string(k) +
                                                      " of {0, a_1, ...} are collinear");
      }
  return raw;
}

// ---------------------------------------------------------------------------
// JSON: {"a": [[re, im], ...], "c": [...], "n": int, "N": number (optional)}

inline Configuration config_from_json(const nlohmann::json& j) {
  Configuration cfg;
  try {
    for (const auto& p : j.at("a")) {
      if (!p.is_array() || p.size() != 2) throw Error(ErrorKind::ParseError, "each a_j must be [re, im]");
      cfg.a.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    }
    cfg.c = j.at("c").get<std::vector<double>>();
    cfg.n = j.at("n").get<int>();
    if (j.contains("N") && !j.at("N").is_null()) cfg.N = j.at("N").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return cfg;
}

inline nlohmann::json config_to_json(const Configuration& cfg) {
  nlohmann::json j;
  j["a"] = nlohmann::json::array();
  for (const auto& z : cfg.a) j["a"].push_back({z.real(), z.imag()});
  j["c"] = cfg.c;
  j["n"] = cfg.n;
  if (cfg.N) j["N"] = *cfg.N;
  return j;
}

inline Configuration parse_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return config_from_json(j);
}

}  // namespace mszego
