#ifndef YMH_CONFIG_HPP
#define YMH_CONFIG_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ymh {

enum class RunMode { Simulate, VerifyHopf, VerifyAlgebra };
enum class AlgebraKind { Abelian, Su2 };

/// One cosine mode of a plain field component: amplitude cos(2pi k.x/L + phase).
struct FieldMode {
  int component = 0;
  std::array<int, 3> k{0, 0, 0};
  double amplitude = 0.0;
  double phase = 0.0;
  bool operator==(const FieldMode&) const = default;
};

/// One cosine mode of a gauge-potential coefficient A_axis^lie.
struct PotentialMode {
  int axis = 0;
  int lie_index = 0;
  std::array<int, 3> k{0, 0, 0};
  double amplitude = 0.0;
  double phase = 0.0;
  bool operator==(const PotentialMode&) const = default;
};

/// One cosine mode of a charge-field basis coefficient f^lie.
struct ChargeMode {
  int lie_index = 0;
  std::array<int, 3> k{0, 0, 0};
  double amplitude = 0.0;
  double phase = 0.0;
  bool operator==(const ChargeMode&) const = default;
};

/// Fully validated run description. The textual grammar is line-based:
/// `key = value` pairs inside `[section]` headers, `#` comments, numeric
/// lists whitespace-separated; unknown sections or keys are errors.
struct SimConfig {
  RunMode mode = RunMode::Simulate;

  // [grid]
  int dim = 2;
  int resolution = 32;
  double length = 6.283185307179586476925287;

  // [algebra]
  AlgebraKind algebra = AlgebraKind::Abelian;
  std::vector<double> h_matrix; // empty = identity

  // [gauge] (mode lists; A and B are mutually exclusive)
  std::vector<PotentialMode> potential_modes;
  std::vector<FieldMode> magnetic_modes;

  // [weight]
  double weight_constant = 1.0;
  std::vector<FieldMode> weight_modes;

  // [initial]
  std::vector<FieldMode> velocity_modes;
  std::vector<ChargeMode> charge_modes;

  // [time]
  double dt = 1e-3;
  long steps = 0;
  long diag_every = 1;
  long snap_every = 0;

  // [output]
  std::string output_dir = ".";

  // [solver]
  double solver_tolerance = 1e-12;
  int solver_max_iterations = 500;

  // [rng]
  uint64_t seed = 0;

  // [verify]
  long hopf_samples = 1'000'000;
  int verify_resolution = 32;

  bool operator==(const SimConfig&) const = default;
};

/// Parses and validates; throws ConfigError with a line number on parse
/// failures and with the offending field named on validation failures.
SimConfig parse_config_file(const std::string& path);
SimConfig parse_config_text(const std::string& text);

/// Canonical serialization; parse_config_text(emit_config(c)) == c.
std::string emit_config(const SimConfig& c);

/// Field-level validation (also run by the parsers).
void validate_config(const SimConfig& c);

/// Shipped templates: "taylor-green", "abelian-charged", "su2-charged".
SimConfig config_template(const std::string& name);
std::vector<std::string> config_template_names();

} // namespace ymh

#endif
