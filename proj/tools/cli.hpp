// Copyright 2026 The superchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// superchan command line.
//
//   superchan validate <file.json>
//   superchan experiment <name> [--seed N] [--restarts N] [--ensemble-size N]
//                               [--tol X] [--out PATH] [--format json|csv]
//   superchan holevo <channel.json> [same flags]
//
// Exit codes: 0 pass, 1 invalid object, 2 usage or parse error, 3 target
// missed.

#ifndef SUPERCHAN_TOOLS_CLI_HPP
#define SUPERCHAN_TOOLS_CLI_HPP

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "experiments.hpp"
#include "superchan/superchan.hpp"

namespace superchan::cli {

enum ExitCode : int { kPass = 0, kInvalid = 1, kUsage = 2, kMiss = 3 };

struct CommonFlags {
  std::optional<std::uint64_t> seed;
  std::size_t restarts = 32;
  std::size_t ensemble_size = 0;
  double tol = 1e-6;
  std::string out;
  std::string format = "json";

  std::uint64_t resolved_seed() const {
    if (seed) return *seed;
    if (const char* env = std::getenv("SUPERCHAN_SEED")) {
      try {
        return std::stoull(env);
      } catch (const std::exception&) {
        throw CLI::ValidationError("SUPERCHAN_SEED", "not an unsigned integer: " +
                                                         std::string(env));
      }
    }
    return 1;
  }

  OptimizerConfig optimizer() const {
    OptimizerConfig c;
    c.restarts = restarts;
    c.ensemble_size = ensemble_size;
    c.tol = tol;
    c.seed = resolved_seed();
    return c;
  }
};

namespace detail {

inline void add_common(CLI::App* app, CommonFlags& f) {
  app->add_option("--seed", f.seed, "RNG seed (falls back to SUPERCHAN_SEED, then 1)");
  app->add_option("--restarts", f.restarts, "optimizer restarts")->check(CLI::PositiveNumber);
  app->add_option("--ensemble-size", f.ensemble_size, "ensemble size (0: dim_in^2)");
  app->add_option("--tol", f.tol, "optimizer tolerance")->check(CLI::PositiveNumber);
  app->add_option("--out", f.out, "write the report here; the trace goes to <stem>.csv");
  app->add_option("--format", f.format, "stdout format")
      ->check(CLI::IsMember({"json", "csv"}));
}

inline std::string trace_csv(const std::vector<TracePoint>& trace) {
  std::string s = "restart,iteration,chi\n";
  char buf[96];
  for (const auto& t : trace) {
    std::snprintf(buf, sizeof buf, "%zu,%zu,%.12g\n", t.restart, t.iteration, t.chi);
    s += buf;
  }
  return s;
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw Error("cannot write " + p.string());
  f << text;
}

inline void emit(const CommonFlags& f, const nlohmann::json& report,
                 const std::vector<TracePoint>& trace, std::ostream& out) {
  const std::string js = report.dump(2) + "\n";
  const std::string csv = trace_csv(trace);
  if (!f.out.empty()) {
    std::filesystem::path p(f.out);
    write_file(p, js);
    write_file(std::filesystem::path(p).replace_extension(".csv"), csv);
  }
  out << (f.format == "csv" ? csv : js);
}

// 1-based line and column of a byte offset.
inline std::pair<std::size_t, std::size_t> line_column(const std::string& text,
                                                       std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

struct Parsed {
  nlohmann::json value;
  int code = kPass;
};

inline Parsed read_json(const std::string& path, std::ostream& err) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot open " << path << "\n";
    return {{}, kUsage};
  }
  std::stringstream ss;
  ss << f.rdbuf();
  const std::string text = ss.str();
  try {
    return {nlohmann::json::parse(text), kPass};
  } catch (const nlohmann::json::parse_error& e) {
    // byte points one past the offending character
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    err << "parse error at line " << line << ", column " << col << ": " << e.what() << "\n";
    return {{}, kUsage};
  }
}

// Detects the object kind and validates it; returns a one-line summary.
inline std::string validate_object(const nlohmann::json& j) {
  if (j.is_object() && j.contains("kind")) {
    const auto d = superchan::json::descriptor_from_json(j);
    return "valid descriptor " + std::string(to_string(d.kind())) + " (arity " +
           std::to_string(d.arity()) + ")";
  }
  if (j.is_object() && j.contains("parties")) {
    const auto p = superchan::json::poset_from_json(j);
    if (j.contains("assignments")) {
      for (const auto& a : j.at("assignments")) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_string() || !a[1].is_string())
          throw superchan::json::FormatError("assignments must be [from, to] pairs");
        if (!p.leq(a[0].get<std::string>(), a[1].get<std::string>()))
          throw ValidationError("placement from " + a[0].get<std::string>() + " to " +
                                a[1].get<std::string>() + " violates the causal order");
      }
    }
    return "valid poset (" + std::to_string(p.parties().size()) + " parties)";
  }
  if (j.is_object() && j.contains("amplitudes")) {
    const auto v = superchan::json::extension_from_json(j);
    return "valid vacuum extension (d = " + std::to_string(v.dim()) + ", ||F|| = " +
           std::to_string(operator_norm(interference_operator(v))) + ")";
  }
  if (j.is_object() && j.contains("steps")) {
    const auto mp = superchan::json::comb_from_json(j);
    if (!comb_check(mp))
      throw ValidationError("channel violates the comb causality conditions for " +
                            std::to_string(mp.size()) + " steps");
    return "valid " + std::to_string(mp.size()) + "-comb";
  }
  const auto ch = superchan::json::channel_from_json(j);
  return "valid channel " + std::to_string(ch.dim_in()) + " -> " +
         std::to_string(ch.dim_out()) + " (" + std::to_string(ch.kraus_rank()) +
         " Kraus operators)";
}

}  // namespace detail

inline int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  const auto parsed = detail::read_json(path, err);
  if (parsed.code != kPass) return parsed.code;
  try {
    out << detail::validate_object(parsed.value) << "\n";
    return kPass;
  } catch (const Error& e) {
    err << "invalid: " << e.what() << "\n";
    return kInvalid;
  } catch (const nlohmann::json::exception& e) {
    err << "invalid: " << e.what() << "\n";
    return kInvalid;
  }
}

inline int cmd_experiment(const std::string& name, const CommonFlags& flags, std::ostream& out,
                          std::ostream& err) {
  const auto& reg = experiments();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& e) { return name == e.name; });
  if (it == reg.end()) {
    err << "error: unknown experiment '" << name << "'; known:";
    for (const auto& e : reg) err << " " << e.name;
    err << "\n";
    return kUsage;
  }
  ExperimentSettings s;
  s.seed = flags.resolved_seed();
  s.optimizer = flags.optimizer();
  const auto rep = it->run(s);
  detail::emit(flags, rep.report, rep.trace, out);
  if (!rep.pass) err << name << ": target missed\n";
  return rep.pass ? kPass : kMiss;
}

inline int cmd_holevo(const std::string& path, const CommonFlags& flags, std::ostream& out,
                      std::ostream& err) {
  const auto parsed = detail::read_json(path, err);
  if (parsed.code != kPass) return parsed.code;
  try {
    const Channel ch = superchan::json::channel_from_json(parsed.value);
    const auto cfg = flags.optimizer();
    const auto h = maximize_holevo(ch, cfg);
    nlohmann::json rep = {{"chi", h.chi},
                          {"ensemble", superchan::json::ensemble_to_json(*h.ensemble)},
                          {"iterations", h.iterations},
                          {"converged", h.converged},
                          {"restarts_converged", h.restarts_converged},
                          {"optimizer", detail::config_json(cfg)}};
    detail::emit(flags, rep, h.trace, out);
    return kPass;
  } catch (const Error& e) {
    err << "invalid: " << e.what() << "\n";
    return kInvalid;
  } catch (const nlohmann::json::exception& e) {
    err << "invalid: " << e.what() << "\n";
    return kInvalid;
  }
}

/// Entry point; `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum channel, supermap and Holevo-information toolkit", "superchan"};
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "validate a channel/extension/comb/descriptor/poset JSON");
  validate->add_option("path", validate_path, "JSON file")->required();

  CommonFlags exp_flags;
  std::string exp_name;
  auto* experiment = app.add_subcommand("experiment", "run a registered reproduction");
  experiment->add_option("name", exp_name, "experiment name")->required();
  detail::add_common(experiment, exp_flags);

  CommonFlags hol_flags;
  std::string hol_path;
  auto* holevo = app.add_subcommand("holevo", "maximize the Holevo information of a channel");
  holevo->add_option("channel", hol_path, "channel JSON file")->required();
  detail::add_common(holevo, hol_flags);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*validate) return cmd_validate(validate_path, out, err);
    if (*experiment) return cmd_experiment(exp_name, exp_flags, out, err);
    if (*holevo) return cmd_holevo(hol_path, hol_flags, out, err);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kUsage;
}

}  // namespace superchan::cli

#endif  // SUPERCHAN_TOOLS_CLI_HPP
