#include "ymh/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ymh/errors.hpp"

namespace ymh {
namespace {

struct RawLine {
  int number = 0;
  std::string section;
  std::string key;
  std::vector<std::string> tokens;
};

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

long parse_long(const RawLine& ln, const std::string& tok) {
  try {
    size_t pos = 0;
    long v = std::stol(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("expected an integer, got '" + tok + "'", ln.number);
  }
}

double parse_double(const RawLine& ln, const std::string& tok) {
  try {
    size_t pos = 0;
    double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("expected a number, got '" + tok + "'", ln.number);
  }
}

void expect_tokens(const RawLine& ln, size_t count) {
  if (ln.tokens.size() != count)
    throw ConfigError("key '" + ln.key + "' expects " + std::to_string(count) + " values, got " +
                          std::to_string(ln.tokens.size()),
                      ln.number);
}

std::array<int, 3> parse_wavevector(const RawLine& ln, int dim, size_t offset) {
  std::array<int, 3> k{0, 0, 0};
  for (int i = 0; i < dim; ++i) k[i] = static_cast<int>(parse_long(ln, ln.tokens[offset + i]));
  return k;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace

void validate_config(const SimConfig& c) {
  if (c.dim != 2 && c.dim != 3) throw ConfigError("grid.dim must be 2 or 3");
  if (c.resolution < 8 || (c.resolution & (c.resolution - 1)) != 0)
    throw ConfigError("grid.n: resolution must be a power of two >= 8");
  if (!(c.length > 0.0)) throw ConfigError("grid.length must be positive");
  if (!(c.dt > 0.0)) throw ConfigError("dt must be positive");
  if (c.steps < 0) throw ConfigError("time.steps must be >= 0");
  if (c.diag_every < 1) throw ConfigError("time.diag_every must be >= 1");
  if (c.snap_every < 0) throw ConfigError("time.snap_every must be >= 0");
  if (!(c.solver_tolerance >= 1e-14)) throw ConfigError("solver.tolerance must be >= 1e-14");
  if (c.solver_max_iterations < 1) throw ConfigError("solver.max_iterations must be >= 1");
  if (c.hopf_samples < 1000) throw ConfigError("verify.hopf_samples must be >= 1000");
  if (c.verify_resolution < 8 || (c.verify_resolution & (c.verify_resolution - 1)) != 0)
    throw ConfigError("verify.resolution must be a power of two >= 8");

  const int m = c.algebra == AlgebraKind::Su2 ? 3 : 1;
  if (!c.h_matrix.empty() && c.h_matrix.size() != static_cast<size_t>(m) * m)
    throw ConfigError("algebra.h must list " + std::to_string(m * m) + " entries");
  if (!c.magnetic_modes.empty()) {
    if (c.dim != 3) throw ConfigError("gauge.B requires a 3D grid");
    if (c.algebra != AlgebraKind::Abelian) throw ConfigError("gauge.B requires the abelian algebra");
    if (!c.potential_modes.empty())
      throw ConfigError("gauge.A and gauge.B are mutually exclusive");
  }
  auto check_comp = [&](int comp, int limit, const std::string& field) {
    if (comp < 0 || comp >= limit) throw ConfigError(field + ": component index out of range");
  };
  auto check_k = [&](const std::array<int, 3>& k, const std::string& field) {
    for (int i = 0; i < c.dim; ++i)
      if (std::abs(k[i]) > c.resolution / 2)
        throw ConfigError(field + ": wavevector outside the resolved band");
  };
  for (const auto& mo : c.velocity_modes) {
    check_comp(mo.component, c.dim, "initial.X");
    check_k(mo.k, "initial.X");
  }
  for (const auto& mo : c.charge_modes) {
    check_comp(mo.lie_index, m, "initial.f");
    check_k(mo.k, "initial.f");
  }
  for (const auto& mo : c.magnetic_modes) {
    check_comp(mo.component, 3, "gauge.B");
    check_k(mo.k, "gauge.B");
  }
  for (const auto& mo : c.potential_modes) {
    check_comp(mo.axis, c.dim, "gauge.A");
    check_comp(mo.lie_index, m, "gauge.A");
    check_k(mo.k, "gauge.A");
  }
  for (const auto& mo : c.weight_modes) check_k(mo.k, "weight.mode");
  if (!(c.weight_constant > 0.0) && c.weight_modes.empty())
    throw ConfigError("weight.constant must be positive");
}

SimConfig parse_config_text(const std::string& text) {
  SimConfig c;
  std::vector<RawLine> lines;
  {
    std::istringstream in(text);
    std::string line;
    int number = 0;
    std::string section;
    while (std::getline(in, line)) {
      ++number;
      size_t hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']') throw ConfigError("unterminated section header", number);
        section = trim(line.substr(1, line.size() - 2));
        static const char* known[] = {"grid", "algebra", "gauge",  "weight", "initial",
                                      "time", "output",  "solver", "rng",    "verify"};
        bool ok = false;
        for (const char* k : known) ok = ok || section == k;
        if (!ok) throw ConfigError("unknown section '" + section + "'", number);
        continue;
      }
      size_t eq = line.find('=');
      if (eq == std::string::npos) throw ConfigError("expected 'key = value'", number);
      RawLine rl;
      rl.number = number;
      rl.section = section;
      rl.key = trim(line.substr(0, eq));
      rl.tokens = split_tokens(line.substr(eq + 1));
      if (rl.key.empty()) throw ConfigError("missing key before '='", number);
      if (rl.tokens.empty()) throw ConfigError("missing value for key '" + rl.key + "'", number);
      lines.push_back(std::move(rl));
    }
  }

  // Grid and algebra first: mode entries depend on dim and the algebra.
  for (const auto& ln : lines) {
    if (ln.section == "grid") {
      if (ln.key == "dim") {
        expect_tokens(ln, 1);
        c.dim = static_cast<int>(parse_long(ln, ln.tokens[0]));
      } else if (ln.key == "n") {
        expect_tokens(ln, 1);
        c.resolution = static_cast<int>(parse_long(ln, ln.tokens[0]));
      } else if (ln.key == "length") {
        expect_tokens(ln, 1);
        c.length = parse_double(ln, ln.tokens[0]);
      } else {
        throw ConfigError("unknown key 'grid." + ln.key + "'", ln.number);
      }
    } else if (ln.section == "algebra") {
      if (ln.key == "type") {
        expect_tokens(ln, 1);
        if (ln.tokens[0] == "abelian")
          c.algebra = AlgebraKind::Abelian;
        else if (ln.tokens[0] == "su2")
          c.algebra = AlgebraKind::Su2;
        else
          throw ConfigError("algebra.type must be 'abelian' or 'su2'", ln.number);
      } else if (ln.key == "h") {
        c.h_matrix.clear();
        for (const auto& t : ln.tokens) c.h_matrix.push_back(parse_double(ln, t));
      } else {
        throw ConfigError("unknown key 'algebra." + ln.key + "'", ln.number);
      }
    }
  }
  if (c.dim != 2 && c.dim != 3) throw ConfigError("grid.dim must be 2 or 3");

  for (const auto& ln : lines) {
    const size_t kd = static_cast<size_t>(c.dim);
    if (ln.section == "grid" || ln.section == "algebra") continue;
    if (ln.section.empty()) {
      if (ln.key == "mode") {
        expect_tokens(ln, 1);
        if (ln.tokens[0] == "simulate")
          c.mode = RunMode::Simulate;
        else if (ln.tokens[0] == "verify-hopf")
          c.mode = RunMode::VerifyHopf;
        else if (ln.tokens[0] == "verify-algebra")
          c.mode = RunMode::VerifyAlgebra;
        else
          throw ConfigError("mode must be simulate, verify-hopf or verify-algebra", ln.number);
      } else {
        throw ConfigError("unknown top-level key '" + ln.key + "'", ln.number);
      }
    } else if (ln.section == "gauge") {
      if (ln.key == "A") {
        expect_tokens(ln, kd + 4);
        PotentialMode mo;
        mo.axis = static_cast<int>(parse_long(ln, ln.tokens[0]));
        mo.lie_index = static_cast<int>(parse_long(ln, ln.tokens[1]));
        mo.k = parse_wavevector(ln, c.dim, 2);
        mo.amplitude = parse_double(ln, ln.tokens[kd + 2]);
        mo.phase = parse_double(ln, ln.tokens[kd + 3]);
        c.potential_modes.push_back(mo);
      } else if (ln.key == "B") {
        expect_tokens(ln, kd + 3);
        FieldMode mo;
        mo.component = static_cast<int>(parse_long(ln, ln.tokens[0]));
        mo.k = parse_wavevector(ln, c.dim, 1);
        mo.amplitude = parse_double(ln, ln.tokens[kd + 1]);
        mo.phase = parse_double(ln, ln.tokens[kd + 2]);
        c.magnetic_modes.push_back(mo);
      } else {
        throw ConfigError("unknown key 'gauge." + ln.key + "'", ln.number);
      }
    } else if (ln.section == "weight") {
      if (ln.key == "constant") {
        expect_tokens(ln, 1);
        c.weight_constant = parse_double(ln, ln.tokens[0]);
      } else if (ln.key == "mode") {
        expect_tokens(ln, kd + 2);
        FieldMode mo;
        mo.component = 0;
        mo.k = parse_wavevector(ln, c.dim, 0);
        mo.amplitude = parse_double(ln, ln.tokens[kd]);
        mo.phase = parse_double(ln, ln.tokens[kd + 1]);
        c.weight_modes.push_back(mo);
      } else {
        throw ConfigError("unknown key 'weight." + ln.key + "'", ln.number);
      }
    } else if (ln.section == "initial") {
      if (ln.key == "X") {
        expect_tokens(ln, kd + 3);
        FieldMode mo;
        mo.component = static_cast<int>(parse_long(ln, ln.tokens[0]));
        mo.k = parse_wavevector(ln, c.dim, 1);
        mo.amplitude = parse_double(ln, ln.tokens[kd + 1]);
        mo.phase = parse_double(ln, ln.tokens[kd + 2]);
        c.velocity_modes.push_back(mo);
      } else if (ln.key == "f") {
        expect_tokens(ln, kd + 3);
        ChargeMode mo;
        mo.lie_index = static_cast<int>(parse_long(ln, ln.tokens[0]));
        mo.k = parse_wavevector(ln, c.dim, 1);
        mo.amplitude = parse_double(ln, ln.tokens[kd + 1]);
        mo.phase = parse_double(ln, ln.tokens[kd + 2]);
        c.charge_modes.push_back(mo);
      } else {
        throw ConfigError("unknown key 'initial." + ln.key + "'", ln.number);
      }
    } else if (ln.section == "time") {
      expect_tokens(ln, 1);
      if (ln.key == "dt")
        c.dt = parse_double(ln, ln.tokens[0]);
      else if (ln.key == "steps")
        c.steps = parse_long(ln, ln.tokens[0]);
      else if (ln.key == "diag_every")
        c.diag_every = parse_long(ln, ln.tokens[0]);
      else if (ln.key == "snap_every")
        c.snap_every = parse_long(ln, ln.tokens[0]);
      else
        throw ConfigError("unknown key 'time." + ln.key + "'", ln.number);
    } else if (ln.section == "output") {
      if (ln.key == "dir") {
        expect_tokens(ln, 1);
        c.output_dir = ln.tokens[0];
      } else {
        throw ConfigError("unknown key 'output." + ln.key + "'", ln.number);
      }
    } else if (ln.section == "solver") {
      expect_tokens(ln, 1);
      if (ln.key == "tolerance")
        c.solver_tolerance = parse_double(ln, ln.tokens[0]);
      else if (ln.key == "max_iterations")
        c.solver_max_iterations = static_cast<int>(parse_long(ln, ln.tokens[0]));
      else
        throw ConfigError("unknown key 'solver." + ln.key + "'", ln.number);
    } else if (ln.section == "rng") {
      if (ln.key == "seed") {
        expect_tokens(ln, 1);
        c.seed = static_cast<uint64_t>(parse_long(ln, ln.tokens[0]));
      } else {
        throw ConfigError("unknown key 'rng." + ln.key + "'", ln.number);
      }
    } else if (ln.section == "verify") {
      expect_tokens(ln, 1);
      if (ln.key == "hopf_samples")
        c.hopf_samples = parse_long(ln, ln.tokens[0]);
      else if (ln.key == "resolution")
        c.verify_resolution = static_cast<int>(parse_long(ln, ln.tokens[0]));
      else
        throw ConfigError("unknown key 'verify." + ln.key + "'", ln.number);
    }
  }

  validate_config(c);
  return c;
}

SimConfig parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::string emit_config(const SimConfig& c) {
  std::ostringstream out;
  out << "mode = "
      << (c.mode == RunMode::Simulate
              ? "simulate"
              : c.mode == RunMode::VerifyHopf ? "verify-hopf" : "verify-algebra")
      << "\n\n";
  out << "[grid]\n";
  out << "dim = " << c.dim << "\n";
  out << "n = " << c.resolution << "\n";
  out << "length = " << fmt(c.length) << "\n\n";

  out << "[algebra]\n";
  out << "type = " << (c.algebra == AlgebraKind::Su2 ? "su2" : "abelian") << "\n";
  if (!c.h_matrix.empty()) {
    out << "h =";
    for (double v : c.h_matrix) out << " " << fmt(v);
    out << "\n";
  }
  out << "\n[gauge]\n";
  for (const auto& mo : c.potential_modes) {
    out << "A = " << mo.axis << " " << mo.lie_index;
    for (int i = 0; i < c.dim; ++i) out << " " << mo.k[i];
    out << " " << fmt(mo.amplitude) << " " << fmt(mo.phase) << "\n";
  }
  for (const auto& mo : c.magnetic_modes) {
    out << "B = " << mo.component;
    for (int i = 0; i < c.dim; ++i) out << " " << mo.k[i];
    out << " " << fmt(mo.amplitude) << " " << fmt(mo.phase) << "\n";
  }
  out << "\n[weight]\n";
  out << "constant = " << fmt(c.weight_constant) << "\n";
  for (const auto& mo : c.weight_modes) {
    out << "mode =";
    for (int i = 0; i < c.dim; ++i) out << " " << mo.k[i];
    out << " " << fmt(mo.amplitude) << " " << fmt(mo.phase) << "\n";
  }
  out << "\n[initial]\n";
  for (const auto& mo : c.velocity_modes) {
    out << "X = " << mo.component;
    for (int i = 0; i < c.dim; ++i) out << " " << mo.k[i];
    out << " " << fmt(mo.amplitude) << " " << fmt(mo.phase) << "\n";
  }
  for (const auto& mo : c.charge_modes) {
    out << "f = " << mo.lie_index;
    for (int i = 0; i < c.dim; ++i) out << " " << mo.k[i];
    out << " " << fmt(mo.amplitude) << " " << fmt(mo.phase) << "\n";
  }
  out << "\n[time]\n";
  out << "dt = " << fmt(c.dt) << "\n";
  out << "steps = " << c.steps << "\n";
  out << "diag_every = " << c.diag_every << "\n";
  out << "snap_every = " << c.snap_every << "\n";
  out << "\n[output]\n";
  out << "dir = " << c.output_dir << "\n";
  out << "\n[solver]\n";
  out << "tolerance = " << fmt(c.solver_tolerance) << "\n";
  out << "max_iterations = " << c.solver_max_iterations << "\n";
  out << "\n[rng]\n";
  out << "seed = " << c.seed << "\n";
  out << "\n[verify]\n";
  out << "hopf_samples = " << c.hopf_samples << "\n";
  out << "resolution = " << c.verify_resolution << "\n";
  return out.str();
}

SimConfig config_template(const std::string& name) {
  SimConfig c;
  if (name == "taylor-green") {
    c.dim = 2;
    c.resolution = 32;
    c.algebra = AlgebraKind::Abelian;
    // X = (sin x cos y, -cos x sin y): four cosine modes.
    // sin x cos y = 1/2 [cos(x - y - pi/2) + cos(x + y - pi/2)]
    c.velocity_modes = {
        {0, {1, -1, 0}, 0.5, -1.5707963267948966},
        {0, {1, 1, 0}, 0.5, -1.5707963267948966},
        {1, {1, -1, 0}, 0.5, -1.5707963267948966},
        {1, {1, 1, 0}, -0.5, -1.5707963267948966},
    };
    c.dt = 1e-3;
    c.steps = 1000;
    c.diag_every = 10;
  } else if (name == "abelian-charged") {
    c.dim = 3;
    c.resolution = 32;
    c.algebra = AlgebraKind::Abelian;
    c.magnetic_modes = {{2, {1, 0, 0}, 1.0, 0.0}}; // B = (0, 0, cos x)
    c.velocity_modes = {
        {0, {0, 1, 0}, 0.3, 0.0},   // X0 = 0.3 cos y
        {1, {0, 0, 1}, 0.25, 0.0},  // X1 = 0.25 cos z
        {2, {1, 0, 0}, 0.2, 0.5},   // X2 = 0.2 cos(x + 0.5)
    };
    c.charge_modes = {
        {0, {1, 0, 0}, 0.4, 0.0},
        {0, {0, 1, 1}, 0.2, 1.0},
    };
    c.dt = 1e-3;
    c.steps = 1000;
    c.diag_every = 10;
  } else if (name == "su2-charged") {
    c.dim = 2;
    c.resolution = 32;
    c.algebra = AlgebraKind::Su2;
    // Constant potential with non-commuting directions.
    c.potential_modes = {
        {0, 0, {0, 0, 0}, 0.4, 0.0},
        {1, 1, {0, 0, 0}, 0.3, 0.0},
    };
    c.velocity_modes = {
        {0, {1, -1, 0}, 0.25, -1.5707963267948966},
        {0, {1, 1, 0}, 0.25, -1.5707963267948966},
        {1, {1, -1, 0}, 0.25, -1.5707963267948966},
        {1, {1, 1, 0}, -0.25, -1.5707963267948966},
        {0, {0, 2, 0}, 0.1, 0.3},
        {1, {2, 0, 0}, 0.1, -0.2},
    };
    c.charge_modes = {
        {0, {1, 0, 0}, 0.3, 0.0},
        {1, {0, 1, 0}, 0.2, 0.7},
        {2, {1, 1, 0}, 0.15, -0.4},
    };
    c.dt = 1e-3;
    c.steps = 1000;
    c.diag_every = 10;
  } else {
    throw ConfigError("unknown template '" + name + "'");
  }
  validate_config(c);
  return c;
}

std::vector<std::string> config_template_names() {
  return {"taylor-green", "abelian-charged", "su2-charged"};
}

} // namespace ymh
