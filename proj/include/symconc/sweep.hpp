#pragma once

// Parameter sweeps over the state families, rendered as CSV.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "symconc/collective.hpp"
#include "symconc/concurrence.hpp"
#include "symconc/epr.hpp"
#include "symconc/pair_reduction.hpp"
#include "symconc/states.hpp"
#include "symconc/thermal.hpp"

namespace symconc {

inline constexpr std::string_view kVersion = "1.0.0";

enum class Family { dicke, coherent, twist, thermal_iso, thermal_aniso, epr };

/// Invalid sweep input; `field()` names the offending flag.
class SpecError : public std::invalid_argument {
 public:
  SpecError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::dicke: return "dicke";
    case Family::coherent: return "coherent";
    case Family::twist: return "twist";
    case Family::thermal_iso: return "thermal-iso";
    case Family::thermal_aniso: return "thermal-aniso";
    case Family::epr: return "epr";
  }
  return "?";
}

inline Family parse_family(std::string_view s) {
  for (Family f : {Family::dicke, Family::coherent, Family::twist, Family::thermal_iso,
                   Family::thermal_aniso, Family::epr})
    if (family_name(f) == s) return f;
  throw SpecError("--family", "unknown family '" + std::string(s) + "'");
}

struct Grid {
  std::vector<double> values;
  std::string description;
};

namespace detail {

inline double parse_number(std::string_view text, const std::string& field) {
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v))
    throw SpecError(field, "'" + s + "' is not a finite number");
  return v;
}

inline std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace detail

/// "start:stop:steps" with steps >= 1 points, endpoints included.
inline Grid parse_grid(std::string_view text) {
  const std::string field = "--grid";
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos)
    throw SpecError(field, "expected start:stop:steps, got '" + std::string(text) + "'");
  const double start = detail::parse_number(text.substr(0, c1), field);
  const double stop = detail::parse_number(text.substr(c1 + 1, c2 - c1 - 1), field);
  const double steps_d = detail::parse_number(text.substr(c2 + 1), field);
  if (steps_d < 1.0 || steps_d != std::floor(steps_d) || steps_d > 1e6)
    throw SpecError(field, "steps must be a positive integer");
  const int steps = static_cast<int>(steps_d);
  Grid g;
  g.description = std::string(text);
  for (int i = 0; i < steps; ++i)
    g.values.push_back(steps == 1 ? start : start + (stop - start) * i / (steps - 1));
  return g;
}

/// Comma-separated list of numbers.
inline Grid parse_values(std::string_view text) {
  Grid g;
  g.description = std::string(text);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    g.values.push_back(detail::parse_number(item, "--values"));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return g;
}

struct SweepSpec {
  Family family = Family::dicke;
  std::vector<int> n_values;
  std::optional<Grid> grid;  // M, eta, mu or x depending on family
  std::optional<double> delta;
  std::optional<double> eta;
};

struct SweepRow {
  std::vector<double> params;
  double concurrence = 0.0;
  double eof = 0.0;
  SymmetricPairMatrix pair;
};

namespace detail {

inline std::vector<std::string> param_columns(Family f) {
  switch (f) {
    case Family::dicke: return {"n", "m"};
    case Family::coherent: return {"n", "eta"};
    case Family::twist: return {"n", "mu"};
    case Family::thermal_iso: return {"n", "x"};
    case Family::thermal_aniso: return {"n", "delta", "x"};
    case Family::epr: return {"n"};
  }
  return {};
}

struct Point {
  int n;
  double value;  // grid value; unused for epr
};

/// Validates the spec and expands it into grid points, in output order.
inline std::vector<Point> expand(const SweepSpec& spec) {
  if (spec.n_values.empty()) throw SpecError("--n", "at least one qubit count is required");
  const int n_min = spec.family == Family::epr ? 1 : 2;
  for (int n : spec.n_values)
    if (n < n_min || n > kMaxQubits)
      throw SpecError("--n", "value " + std::to_string(n) + " outside [" + std::to_string(n_min) + ", " +
                                 std::to_string(kMaxQubits) + "]");

  if (spec.family == Family::thermal_aniso && !spec.delta)
    throw SpecError("--delta", "required for family thermal-aniso");
  if (spec.delta && !std::isfinite(*spec.delta)) throw SpecError("--delta", "must be finite");

  std::vector<Point> points;
  for (int n : spec.n_values) {
    switch (spec.family) {
      case Family::epr:
        if (spec.grid) throw SpecError("--grid", "family epr takes no grid");
        points.push_back({n, 0.0});
        break;
      case Family::dicke:
        if (!spec.grid) {
          for (int t = -n; t <= n; t += 2) points.push_back({n, 0.5 * t});
        } else {
          for (double m : spec.grid->values) {
            HalfInteger h;
            try {
              h = HalfInteger::from_double(m);
            } catch (const std::invalid_argument&) {
              throw SpecError("--grid/--values", "M = " + format_number(m) + " is not a multiple of 1/2");
            }
            if (std::abs(h.twice) > n || (n - h.twice) % 2 != 0)
              throw SpecError("--grid/--values",
                              "M = " + format_number(m) + " is not valid for N = " + std::to_string(n));
            points.push_back({n, h.value()});
          }
        }
        break;
      case Family::coherent:
        if (spec.grid && spec.eta) throw SpecError("--eta", "give either --eta or a grid, not both");
        if (spec.eta) {
          points.push_back({n, *spec.eta});
        } else if (spec.grid) {
          for (double eta : spec.grid->values) points.push_back({n, eta});
        } else {
          throw SpecError("--eta", "family coherent needs --eta or a grid of eta values");
        }
        break;
      case Family::twist:
      case Family::thermal_iso:
      case Family::thermal_aniso:
        if (!spec.grid) throw SpecError("--grid", "family " + std::string(family_name(spec.family)) + " needs a grid");
        for (double v : spec.grid->values) points.push_back({n, v});
        break;
    }
  }
  if (points.empty()) throw SpecError("--grid", "grid is empty");
  return points;
}

inline SweepRow evaluate(const SweepSpec& spec, const Point& pt) {
  SweepRow row;
  row.params.push_back(pt.n);
  switch (spec.family) {
    case Family::dicke: {
      const auto m = HalfInteger::from_double(pt.value);
      row.params.push_back(pt.value);
      row.pair = pair_from_moments(moments_of_vector(dicke_state(pt.n, m)));
      row.concurrence = dicke_concurrence(pt.n, m);
      break;
    }
    case Family::coherent:
      row.params.push_back(pt.value);
      row.pair = pair_from_moments(moments_of_vector(spin_coherent(pt.n, {pt.value})));
      row.concurrence = wootters_general(row.pair).concurrence;
      break;
    case Family::twist:
      row.params.push_back(pt.value);
      row.pair = pair_from_moments(twist_moments({pt.value, pt.n}));
      row.concurrence = concurrence_xu_form(row.pair.v_plus, row.pair.v_minus, row.pair.w, row.pair.u);
      break;
    case Family::thermal_iso:
    case Family::thermal_aniso: {
      const double delta = spec.family == Family::thermal_iso ? 1.0 : *spec.delta;
      if (spec.family == Family::thermal_aniso) row.params.push_back(delta);
      row.params.push_back(pt.value);
      const auto model = ThermalModel::from_x(pt.n, delta, pt.value);
      row.pair = thermal_pair_matrix(model);
      row.concurrence = thermal_concurrence(model);
      break;
    }
    case Family::epr: {
      const auto p = epr_pair_matrix(pt.n);
      row.pair = to_symmetric_pair(p);
      row.concurrence = epr_concurrence(p);
      break;
    }
  }
  row.eof = entanglement_of_formation(row.concurrence);
  return row;
}

}  // namespace detail

/// Thread count from SYMCONC_THREADS (0 or unset = hardware concurrency).
inline unsigned sweep_threads_from_env() {
  unsigned threads = 0;
  if (const char* env = std::getenv("SYMCONC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0) throw SpecError("SYMCONC_THREADS", "must be a nonnegative integer");
    threads = static_cast<unsigned>(v);
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return threads;
}

/// Evaluates every grid point and returns the rows in grid order.
inline std::vector<SweepRow> evaluate_sweep(const SweepSpec& spec, unsigned threads = 1) {
  const auto points = detail::expand(spec);
  std::vector<SweepRow> rows(points.size());
  std::vector<std::string> errors(points.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        rows[i] = detail::evaluate(spec, points[i]);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  threads = std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(points.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (std::size_t i = 0; i < errors.size(); ++i)
    if (!errors[i].empty()) throw std::runtime_error("grid point " + std::to_string(i) + ": " + errors[i]);
  return rows;
}

/// Full CSV document: '#' metadata lines, a header row, one row per point.
inline std::string run_sweep(const SweepSpec& spec, unsigned threads = 1) {
  const auto rows = evaluate_sweep(spec, threads);

  std::ostringstream out;
  out << "# symconc " << kVersion << "\n";
  out << "# family=" << family_name(spec.family) << "\n";
  out << "# n=";
  for (std::size_t i = 0; i < spec.n_values.size(); ++i) out << (i ? "," : "") << spec.n_values[i];
  out << "\n";
  if (spec.grid) out << "# grid=" << spec.grid->description << "\n";
  if (spec.delta) out << "# delta=" << detail::format_number(*spec.delta) << "\n";
  if (spec.eta) out << "# eta=" << detail::format_number(*spec.eta) << "\n";

  const auto params = detail::param_columns(spec.family);
  for (const auto& p : params) out << p << ",";
  out << "concurrence,eof,v_plus,v_minus,w,y,re_u,im_u\n";

  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.params.size(); ++i)
      out << (i == 0 ? std::to_string(static_cast<int>(row.params[i])) : detail::format_number(row.params[i])) << ",";
    const double fields[] = {row.concurrence, row.eof, row.pair.v_plus, row.pair.v_minus,
                             row.pair.w, row.pair.y.real(), row.pair.u.real(), row.pair.u.imag()};
    for (std::size_t i = 0; i < std::size(fields); ++i)
      out << (i ? "," : "") << detail::format_number(fields[i]);
    out << "\n";
  }
  return out.str();
}

}  // namespace symconc
