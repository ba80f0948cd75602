// Copyright 2026 The photonsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "photonsim/photonsim.hpp"

namespace {

using namespace photonsim;
using json = nlohmann::json;

enum ExitCode { kOk = 0, kParse = 2, kNumeric = 3, kCapability = 4, kPostSelection = 5 };

struct CommonOptions {
  std::string backend;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
  std::string memory_budget = "4G";
  std::string input_state;
  std::string post_select;
  std::string output;
  std::string format = "csv";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const CommonOptions& opts, const std::string& text) {
  if (opts.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.output, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + opts.output + "'");
  out << text;
}

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::uint64_t resolve_seed(const CommonOptions& opts) {
  if (opts.seed) return *opts.seed;
  const std::uint64_t seed = random_seed();
  std::cerr << "seed: " << seed << "\n";
  return seed;
}

std::size_t parse_bytes(const std::string& text) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw InvalidArgument("bad memory budget '" + text + "'");
  }
  const std::string suffix = text.substr(pos);
  int shift = 0;
  if (suffix == "K" || suffix == "KiB") {
    shift = 10;
  } else if (suffix == "M" || suffix == "MiB") {
    shift = 20;
  } else if (suffix == "G" || suffix == "GiB") {
    shift = 30;
  } else if (!suffix.empty()) {
    throw InvalidArgument("bad memory budget suffix '" + suffix + "'");
  }
  return static_cast<std::size_t>(v) << shift;
}

void check_format(const CommonOptions& opts) {
  if (opts.format != "csv" && opts.format != "txt") {
    throw InvalidArgument("--format must be csv or txt");
  }
}

// A circuit file is a JSON object; anything else is read as a matrix.
struct Model {
  std::optional<Circuit> circuit;
  std::optional<Unitary> unitary;
};

Model load_model(const std::string& path) {
  Model model;
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    model.circuit = parse_circuit(text);
  } else {
    model.unitary = Unitary(load_matrix(path));
  }
  return model;
}

FockState parse_input(const CommonOptions& opts) {
  if (opts.input_state.empty()) throw InvalidArgument("--input-state is required");
  return FockState::parse(opts.input_state);
}

bool has_polarisation_tags(const FockState& s) {
  if (!s.is_annotated()) return false;
  for (int i = 0; i < s.modes(); ++i) {
    for (const auto& t : s.tags(i)) {
      if (t == kHorizontalTag || t == kVerticalTag) return true;
    }
  }
  return false;
}

// The unitary the input actually sees, with polarisation expanded when needed.
std::pair<Unitary, FockState> effective_unitary(const Model& model, const FockState& input) {
  if (model.unitary) return {*model.unitary, input};
  const Circuit& c = *model.circuit;
  if (c.is_time_circuit()) throw CapabilityError("time circuits are simulated with 'hom'");
  if (has_polarisation_tags(input)) return {compute_polarised_unitary(c), expand_polarization(input)};
  return {compute_unitary(c), input};
}

Distribution exact_distribution(const Model& model, const FockState& input, Backend backend,
                                const CommonOptions& opts) {
  require_support(backend, Task::FullDistribution);
  const SlosOptions slos{parse_bytes(opts.memory_budget)};
  if (backend == Backend::Stepper) {
    const Circuit circuit = model.circuit ? *model.circuit : decompose_rectangular(*model.unitary);
    if (input.modes() != circuit.modes()) {
      throw InvalidArgument("input state has " + std::to_string(input.modes()) +
                            " modes, circuit has " + std::to_string(circuit.modes()));
    }
    return stepper_distribution(circuit, input);
  }
  const auto [u, state] = effective_unitary(model, input);
  if (state.modes() != u.modes()) {
    throw InvalidArgument("input state has " + std::to_string(state.modes()) +
                          " modes, unitary has " + std::to_string(u.modes()));
  }
  if (state.is_annotated()) return simulate_annotated(u, state, slos);
  if (backend == Backend::Slos) return slos_full_distribution(u, state, slos);
  return naive_distribution(u, state, PermanentConfig{opts.threads});
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

int cmd_unitary(const std::string& path, const CommonOptions& opts) {
  const Circuit circuit = parse_circuit(read_file(path));
  const Unitary u = circuit.has_polarisation() ? compute_polarised_unitary(circuit)
                                               : compute_unitary(circuit);
  if (!opts.output.empty() && opts.output.size() > 4 &&
      opts.output.compare(opts.output.size() - 4, 4, ".bin") == 0) {
    save_matrix(opts.output, u.matrix());
    return kOk;
  }
  check_format(opts);
  std::ostringstream out;
  if (opts.format == "txt") {
    write_matrix_text(out, u.matrix());
  } else {
    for (Eigen::Index r = 0; r < u.matrix().rows(); ++r) {
      for (Eigen::Index c = 0; c < u.matrix().cols(); ++c) {
        out << (c ? "," : "") << format_complex(u(static_cast<int>(r), static_cast<int>(c)));
      }
      out << "\n";
    }
  }
  emit(opts, out.str());
  return kOk;
}

int cmd_probs(const std::string& path, const CommonOptions& opts) {
  check_format(opts);
  const Backend backend = parse_backend(opts.backend.empty() ? "slos" : opts.backend);
  require_support(backend, Task::FullDistribution);
  const Model model = load_model(path);
  const FockState input = parse_input(opts);
  Distribution d = exact_distribution(model, input, backend, opts);

  std::ostringstream out;
  out << "# backend=" << backend_name(backend) << " input=" << quoted(input.to_string()) << "\n";
  if (!opts.post_select.empty()) {
    const PostSelectionRule rule = PostSelectionRule::parse(opts.post_select);
    PostSelected kept = post_select(d, rule);
    out << "# post_select=" << quoted(rule.to_string())
        << " success_probability=" << number(kept.success_probability) << "\n";
    d = std::move(kept.distribution);
  }
  out << "# total_mass=" << number(d.total_mass()) << "\n";
  const auto rows = d.sorted();
  if (opts.format == "csv") {
    out << "state,probability\n";
    for (const auto& [s, p] : rows) out << quoted(s.to_string()) << "," << number(p) << "\n";
  } else {
    std::size_t width = 5;
    for (const auto& [s, p] : rows) width = std::max(width, s.to_string().size());
    for (const auto& [s, p] : rows) {
      const std::string label = s.to_string();
      out << label << std::string(width - label.size() + 2, ' ') << number(p) << "\n";
    }
  }
  emit(opts, out.str());
  return kOk;
}

int cmd_sample(const std::string& path, const CommonOptions& opts, std::size_t count) {
  const Backend backend = parse_backend(opts.backend.empty() ? "cc2017" : opts.backend);
  require_support(backend, Task::Sampling);
  const Model model = load_model(path);
  const FockState input = parse_input(opts);
  if (input.is_annotated()) throw CapabilityError("sampling takes plain input states");
  const auto [u, state] = effective_unitary(model, input);
  if (state.modes() != u.modes()) throw InvalidArgument("input state does not match the unitary");
  const std::uint64_t seed = resolve_seed(opts);
  SampleRecord record;
  if (backend == Backend::CliffordClifford2017) {
    record = sample_cc2017(u, state, count, seed, opts.threads);
  } else {
    record = sample_distribution(naive_distribution(u, state, PermanentConfig{opts.threads}), count, seed);
  }
  std::ostringstream out;
  out << "# backend=" << backend_name(backend) << " seed=" << seed << " count=" << count
      << " input=" << quoted(input.to_string()) << "\n";
  for (const auto& s : record.outcomes) out << s.to_string() << "\n";
  emit(opts, out.str());
  return kOk;
}

std::vector<int> parse_k_list(const std::string& text) {
  std::vector<int> ks;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      ks.push_back(std::stoi(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("bad K list '" + text + "'");
    }
  }
  if (ks.empty()) throw InvalidArgument("empty K list");
  return ks;
}

int cmd_certify(const std::string& path, const CommonOptions& opts, const std::string& k_list) {
  check_format(opts);
  std::istringstream in(read_file(path));
  SampleRecord record;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    try {
      record.outcomes.push_back(FockState::parse(std::string_view(line).substr(first, last - first + 1)));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no, static_cast<int>(first) + 1);
    }
  }
  if (record.outcomes.empty()) throw InvalidArgument("sample file '" + path + "' is empty");
  std::vector<int> ks = k_list.empty() ? std::vector<int>{} : parse_k_list(k_list);
  if (ks.empty()) {
    for (int k = 1; k <= record.outcomes.front().modes(); ++k) ks.push_back(k);
  }
  const auto reports = certify(record, ks);
  std::ostringstream out;
  out << "# samples=" << record.count() << " modes=" << record.outcomes.front().modes()
      << " photons=" << record.outcomes.front().photons() << "\n";
  if (opts.format == "csv") {
    out << "K,estimate,analytic,std_error\n";
    for (const auto& r : reports) {
      out << r.K << "," << number(r.estimate) << "," << number(r.analytic) << ","
          << number(r.std_error) << "\n";
    }
  } else {
    char buf[128];
    out << "  K  estimate   analytic   std_error\n";
    for (const auto& r : reports) {
      std::snprintf(buf, sizeof buf, "%3d  %8.4f%%  %8.4f%%  %9.4f%%\n", r.K, 100 * r.estimate,
                    100 * r.analytic, 100 * r.std_error);
      out << buf;
    }
  }
  emit(opts, out.str());
  return kOk;
}

int cmd_decompose(const std::string& path, const CommonOptions& opts, const std::string& mesh) {
  const Unitary u(load_matrix(path), 1e-8);
  Circuit c = mesh == "triangular" ? decompose_triangular(u) : decompose_rectangular(u);
  emit(opts, serialize_circuit(c));
  return kOk;
}

struct HomFlags {
  std::string circuit;
  std::int64_t periods = 100000;
  int frame = 4;
  int window = 5;
  double emission = 1;
  double multi_photon = 0;
  double indistinguishability = 1;
};

int cmd_hom(const HomFlags& flags, const CommonOptions& opts) {
  check_format(opts);
  const Circuit tc = flags.circuit.empty() ? hom_time_circuit() : parse_circuit(read_file(flags.circuit));
  HomOptions options;
  options.periods = flags.periods;
  options.frame_periods = flags.frame;
  options.window = flags.window;
  options.seed = resolve_seed(opts);
  const SourceModel source{flags.emission, flags.multi_photon, flags.indistinguishability};
  const HomResult r = simulate_hom(tc, source, options);
  std::ostringstream out;
  out << "# periods=" << flags.periods << " seed=" << options.seed
      << " emission=" << number(flags.emission) << " multi_photon=" << number(flags.multi_photon)
      << " indistinguishability=" << number(flags.indistinguishability)
      << " coincidences=" << r.coincidences << "\n";
  if (opts.format == "csv") out << "tau,count\n";
  for (int tau = -flags.window; tau <= flags.window; ++tau) {
    const auto it = r.histogram.find(tau);
    const std::uint64_t n = it == r.histogram.end() ? 0 : it->second;
    out << tau << (opts.format == "csv" ? "," : " ") << n << "\n";
  }
  emit(opts, out.str());
  return kOk;
}

std::vector<LabeledState> read_states(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw ParseError(std::string("analysis spec needs an array '") + key + "'");
  }
  std::vector<LabeledState> out;
  for (const auto& item : j.at(key)) {
    if (!item.is_object() || !item.contains("label") || !item.contains("state") ||
        !item.at("label").is_string() || !item.at("state").is_string()) {
      throw ParseError(std::string("entries of '") + key + "' need string 'label' and 'state'");
    }
    out.push_back({item.at("label").get<std::string>(),
                   FockState::parse(item.at("state").get<std::string>())});
  }
  return out;
}

int cmd_analyze(const std::string& path, const CommonOptions& opts, const std::string& spec_path) {
  check_format(opts);
  const Circuit circuit = parse_circuit(read_file(path));
  json spec;
  try {
    spec = json::parse(read_file(spec_path));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed analysis spec: ") + e.what());
  }
  if (!spec.is_object()) throw ParseError("analysis spec must be an object");
  for (const auto& [key, value] : spec.items()) {
    if (key != "states" && key != "outputs" && key != "expected" && key != "post_select") {
      throw ParseError("unknown analysis spec key '" + key + "'");
    }
  }
  const auto inputs = read_states(spec, "states");
  const auto outputs = spec.contains("outputs") ? read_states(spec, "outputs") : inputs;
  std::map<std::string, std::string> expected;
  if (spec.contains("expected")) {
    if (!spec.at("expected").is_object()) throw ParseError("'expected' must map labels to labels");
    for (const auto& [in, out] : spec.at("expected").items()) {
      if (!out.is_string()) throw ParseError("'expected' must map labels to labels");
      expected[in] = out.get<std::string>();
    }
  }
  std::string rule_text = opts.post_select;
  if (rule_text.empty() && spec.contains("post_select")) {
    if (!spec.at("post_select").is_string()) throw ParseError("'post_select' must be a string");
    rule_text = spec.at("post_select").get<std::string>();
  }
  const PostSelectionRule rule = PostSelectionRule::parse(rule_text);
  const GateAnalysis a = analyze_gate(circuit, inputs, outputs, expected, rule,
                                      SlosOptions{parse_bytes(opts.memory_budget)});
  std::string text = opts.format == "csv" ? format_gate_csv(a) : format_gate_table(a);
  if (opts.format == "csv") {
    text = "# " + format_gate_summary(a) + "\n" + text;
  } else {
    text += format_gate_summary(a) + "\n";
  }
  emit(opts, text);
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Discrete-variable linear-optics simulator"};
  app.require_subcommand(1);
  CommonOptions opts;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output,-o", opts.output, "Output file (default: stdout)");
    cmd->add_option("--format", opts.format, "csv or txt (default depends on the command)")->check(CLI::IsMember({"csv", "txt"}));
  };
  auto add_sim = [&](CLI::App* cmd) {
    cmd->add_option("--backend", opts.backend, "naive, slos, stepper or cc2017");
    cmd->add_option("--threads", opts.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
    cmd->add_option("--memory-budget", opts.memory_budget, "SLOS memory budget, e.g. 512M");
    cmd->add_option("--input-state", opts.input_state, "Input Fock state, e.g. \"|1,1>\"");
  };

  std::string file;
  std::string spec_path;
  std::string mesh = "rectangular";
  std::string k_list;
  std::size_t count = 1000;
  HomFlags hom;

  auto* unitary = app.add_subcommand("unitary", "Compose the unitary of a circuit file");
  unitary->add_option("circuit", file, "Circuit file")->required();
  add_output(unitary);

  auto* probs = app.add_subcommand("probs", "Full output distribution");
  probs->add_option("file", file, "Circuit or matrix file")->required();
  add_sim(probs);
  probs->add_option("--post-select", opts.post_select, "Rule such as \"count(modes 1..2) == 1\"");
  add_output(probs);

  auto* sample = app.add_subcommand("sample", "Draw output samples");
  sample->add_option("file", file, "Circuit or matrix file")->required();
  add_sim(sample);
  sample->add_option("--count,-k", count, "Number of samples");
  sample->add_option("--seed", opts.seed, "RNG seed (drawn and printed when absent)");
  sample->add_option("--output,-o", opts.output, "Output file (default: stdout)");

  auto* cert = app.add_subcommand("certify", "P(K) report for a samples file");
  cert->add_option("samples", file, "Samples file")->required();
  cert->add_option("--k,-K", k_list, "Comma-separated K values (default: 1..m)");
  add_output(cert);

  auto* decompose = app.add_subcommand("decompose", "Decompose a unitary into a mesh");
  decompose->add_option("matrix", file, "Matrix file")->required();
  decompose->add_option("--mesh", mesh, "triangular or rectangular")
      ->check(CLI::IsMember({"triangular", "rectangular"}));
  decompose->add_option("--output,-o", opts.output, "Output file (default: stdout)");

  auto* homcmd = app.add_subcommand("hom", "Time-bin HOM correlation histogram");
  homcmd->add_option("--circuit", hom.circuit, "Time circuit file (default: BS, 1-period delay, BS)");
  homcmd->add_option("--periods", hom.periods, "Source periods")->check(CLI::PositiveNumber);
  homcmd->add_option("--frame", hom.frame, "Periods simulated jointly")->check(CLI::Range(1, 64));
  homcmd->add_option("--window", hom.window, "Histogram half-width in bins")->check(CLI::Range(0, 1000));
  homcmd->add_option("--emission", hom.emission, "Emission probability per period");
  homcmd->add_option("--multi-photon", hom.multi_photon, "Two-photon probability per emission");
  homcmd->add_option("--indistinguishability", hom.indistinguishability, "Common-tag probability");
  homcmd->add_option("--seed", opts.seed, "RNG seed (drawn and printed when absent)");
  add_output(homcmd);

  auto* analyze = app.add_subcommand("analyze", "Post-selected logical gate analysis");
  analyze->add_option("circuit", file, "Circuit file")->required();
  analyze->add_option("--spec", spec_path, "Analysis spec (JSON)")->required();
  analyze->add_option("--post-select", opts.post_select, "Overrides the spec's rule");
  analyze->add_option("--memory-budget", opts.memory_budget, "SLOS memory budget");
  add_output(analyze);

  opts.format.clear();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }
  const bool txt_default = unitary->parsed() || analyze->parsed();
  if (opts.format.empty()) opts.format = txt_default ? "txt" : "csv";

  if (unitary->parsed()) return cmd_unitary(file, opts);
  if (probs->parsed()) return cmd_probs(file, opts);
  if (sample->parsed()) return cmd_sample(file, opts, count);
  if (cert->parsed()) return cmd_certify(file, opts, k_list);
  if (decompose->parsed()) return cmd_decompose(file, opts, mesh);
  if (homcmd->parsed()) return cmd_hom(hom, opts);
  return cmd_analyze(file, opts, spec_path);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kParse;
  } catch (const CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return kCapability;
  } catch (const PostSelectionError& e) {
    std::cerr << "post-selection error: " << e.what() << "\n";
    return kPostSelection;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kNumeric;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
