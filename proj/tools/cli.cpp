#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "ciprng/analysis/correlation.hpp"
#include "ciprng/analysis/cycle.hpp"
#include "ciprng/analysis/metric.hpp"
#include "ciprng/analysis/spectrum.hpp"
#include "ciprng/battery/battery.hpp"
#include "ciprng/cipher/cipher.hpp"
#include "ciprng/config.hpp"
#include "ciprng/errors.hpp"
#include "ciprng/generator.hpp"

namespace ciprng::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "-" writes to `out`.
void write_output(const std::string& path, std::string_view content, std::ostream& out) {
  if (path == "-") {
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  file.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!file) throw std::runtime_error("write failed: " + path);
}

struct GeneratorArgs {
  std::string scheme = "scheme-6";
  std::string config_path;
  std::size_t n_cells = 0;
  std::string m_set;
  std::optional<std::uint64_t> seed;
  std::string x0;
  std::string y0;
  bool seed_from_time = false;
  bool no_emit_initial = false;
  std::string transcript_path;
};

void add_generator_options(CLI::App* cmd, GeneratorArgs& a, bool with_transcript) {
  auto* config = cmd->add_option("--config", a.config_path, "key=value generator configuration file");
  auto* scheme = cmd->add_option("--scheme", a.scheme, "scheme-1 .. scheme-6, or custom")->capture_default_str();
  auto* n_cells = cmd->add_option("--n-cells", a.n_cells, "number of cells N (custom scheme)");
  auto* m_set = cmd->add_option("--m-set", a.m_set, "comma-separated return gaps M (custom scheme)");
  auto* seed = cmd->add_option("--seed", a.seed, "integer time-style seed t (y0 = 0.t)");
  auto* x0 = cmd->add_option("--x0", a.x0, "explicit initial cells, e.g. 10100");
  auto* y0 = cmd->add_option("--y0", a.y0, "explicit initial logistic value in (0,1)");
  auto* from_time = cmd->add_flag("--seed-from-time", a.seed_from_time, "seed from the current microseconds");
  cmd->add_flag("--no-emit-initial", a.no_emit_initial, "start output at the first iterated block");
  for (auto* opt : {scheme, n_cells, m_set, seed, x0, y0, from_time}) config->excludes(opt);
  seed->excludes(x0)->excludes(y0)->excludes(from_time);
  from_time->excludes(x0)->excludes(y0);
  if (with_transcript) {
    cmd->add_option("--transcript", a.transcript_path, "file forcing explicit S and m sequences");
  }
}

std::uint64_t time_seed_now() {
  const auto now = std::chrono::system_clock::now().time_since_epoch();
  const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(now).count();
  return static_cast<std::uint64_t>(micros % 1'000'000);
}

struct Structure {
  std::size_t n_cells;
  std::vector<unsigned> m_set;
};

Structure resolve_structure(const GeneratorArgs& a) {
  if (a.scheme == "custom") {
    if (a.n_cells == 0 || a.m_set.empty()) throw UsageError("--scheme custom needs --n-cells and --m-set");
    return {a.n_cells, parse_m_set(a.m_set)};
  }
  if (a.n_cells != 0 || !a.m_set.empty()) throw UsageError("--n-cells/--m-set require --scheme custom");
  const auto& s = scheme_params(a.scheme);
  return {s.n_cells, s.m_set};
}

std::optional<SeedSpec> resolve_seed_spec(const GeneratorArgs& a, std::ostream& err) {
  if (a.seed) return TimeSeed{*a.seed};
  if (a.seed_from_time) {
    const auto t = time_seed_now();
    err << "resolved seed: seed.t=" << t << '\n';
    return TimeSeed{t};
  }
  if (!a.x0.empty() || !a.y0.empty()) {
    if (a.x0.empty() || a.y0.empty()) throw UsageError("--x0 and --y0 must be given together");
    return ExplicitSeed{from_ascii(a.x0), parse_real(a.y0)};
  }
  return std::nullopt;
}

GeneratorConfig make_config(const GeneratorArgs& a, std::ostream& err) {
  if (!a.config_path.empty()) return GeneratorConfig::parse(read_file(a.config_path));
  const auto structure = resolve_structure(a);
  auto seed = resolve_seed_spec(a, err);
  if (!seed) throw UsageError("a seed is required: --seed, --x0/--y0, --seed-from-time or --config");
  return GeneratorConfig(structure.n_cells, structure.m_set, std::move(*seed), !a.no_emit_initial);
}

// Generator honoring --transcript when given.
Generator make_generator(const GeneratorArgs& a, std::ostream& err) {
  if (a.transcript_path.empty()) return Generator(make_config(a, err));
  const auto transcript = parse_transcript(read_file(a.transcript_path));
  BitSequence x0;
  if (transcript.x0) {
    x0 = *transcript.x0;
  } else {
    const auto structure = resolve_structure(a);
    auto seed = resolve_seed_spec(a, err);
    if (!seed) throw UsageError("transcript has no x0 and no seed was given");
    x0 = resolve_seed(*seed, structure.n_cells).x0;
  }
  return Generator(std::move(x0), TranscriptDriver(transcript.strategy, transcript.gaps, transcript.cyclic),
                   !a.no_emit_initial);
}

std::string describe(const Generator& g) {
  std::ostringstream out;
  out << "n_cells=" << g.n_cells() << '\n';
  if (const auto* t = std::get_if<TranscriptDriver>(&g.driver())) {
    out << "driver=transcript (" << t->strategy().size() << " S values, " << t->gaps().size() << " m values"
        << (t->cyclic() ? ", cyclic" : "") << ")\n";
  }
  out << "x0=" << to_ascii(g.x()) << '\n';
  return out.str();
}

int cmd_gen(const GeneratorArgs& a, std::size_t count, const std::string& format, std::size_t wrap,
            const std::string& out_path, std::ostream& out, std::ostream& err) {
  Generator gen = make_generator(a, err);
  if (a.transcript_path.empty()) {
    err << "# resolved configuration\n" << make_config(a, err).serialize();
  } else {
    err << "# resolved transcript generator\n" << describe(gen);
  }
  const auto bits = gen.read_bits(count);
  if (format == "raw") {
    const auto bytes = pack_bits(bits);
    write_output(out_path, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()), out);
  } else {
    auto text = to_ascii(bits, wrap);
    if (!text.empty()) text.push_back('\n');
    write_output(out_path, text, out);
  }
  return kSuccess;
}

int cmd_test(const GeneratorArgs& a, const battery::BatteryOptions& options, const std::string& csv_path,
             const std::string& report_path, std::ostream& out, std::ostream& err) {
  const auto config = make_config(a, err);
  const auto report = battery::run_battery(config, options);
  for (const auto& w : report.warnings) err << "warning: " << w << '\n';
  const auto text = report.to_text();
  out << text;
  if (!report_path.empty()) write_output(report_path, text, out);
  if (!csv_path.empty()) write_output(csv_path, report.to_csv(), out);
  if (!report.all_pass()) {
    for (const auto& s : report.series) {
      if (!s.pass) err << "failed: " << s.test << (s.param.empty() ? "" : ":" + s.param) << '\n';
    }
    return kStatisticalFailure;
  }
  return kSuccess;
}

struct AnalyzeArgs {
  std::size_t count = 100000;
  std::size_t max_lag = 1000;
  std::optional<std::uint64_t> seed_b;
  std::string out_prefix;
  std::optional<std::uint64_t> budget;
  std::size_t prefix_k = analysis::kDefaultStrategyPrefix;
};

int cmd_analyze(const GeneratorArgs& a, const AnalyzeArgs& an, std::ostream& out, std::ostream& err) {
  if (an.max_lag < 1) throw UsageError("--max-lag must be at least 1");
  if (an.max_lag >= an.count) throw UsageError("--max-lag must be below --count");
  const auto config = make_config(a, err);
  GeneratorConfig config_b = [&] {
    if (an.seed_b) return config.with_seed(TimeSeed{*an.seed_b});
    if (const auto* t = std::get_if<TimeSeed>(&config.seed())) return config.with_seed(TimeSeed{t->t + 1});
    throw UsageError("--seed-b is required with an explicit seed");
  }();

  const auto bits = generate_bits(config, an.count);
  const auto bits_b = generate_bits(config_b, an.count);
  const auto auto_corr = analysis::autocorrelation(bits, an.max_lag);
  const auto cross_corr = analysis::cross_correlation(bits, bits_b, an.max_lag);
  const auto spectrum = analysis::power_spectrum(bits);

  write_output(an.out_prefix + "_autocorr.csv", analysis::to_csv(auto_corr), out);
  write_output(an.out_prefix + "_crosscorr.csv", analysis::to_csv(cross_corr), out);
  write_output(an.out_prefix + "_spectrum.csv", analysis::to_csv(spectrum), out);

  const double length = static_cast<double>(an.count);
  std::size_t within = 0;
  for (std::size_t lag = 1; lag <= an.max_lag; ++lag) {
    within += std::fabs(auto_corr.values[lag]) <= 4.0 / std::sqrt(length);
  }
  double max_cross = 0.0;
  for (double v : cross_corr.values) max_cross = std::max(max_cross, std::fabs(v));

  const Generator gen_a(config);
  const Generator gen_b(config_b);
  const auto distance = analysis::phase_distance(gen_a.upcoming_strategy(an.prefix_k), gen_a.x(),
                                                 gen_b.upcoming_strategy(an.prefix_k), gen_b.x(), an.prefix_k);

  out << "bits: " << an.count << '\n'
      << "autocorrelation: r(1)=" << auto_corr.values[1] << ", |r|<=4/sqrt(L) at " << within << '/' << an.max_lag
      << " lags" << (auto_corr.degenerate ? " (degenerate)" : "") << '\n'
      << "cross-correlation: max|r|=" << max_cross << " (bound 5/sqrt(L)=" << 5.0 / std::sqrt(length) << ")\n"
      << "spectrum: flatness=" << spectrum.flatness << " (bound " << analysis::flatness_bound(an.count)
      << "), energy=" << spectrum.total_energy() << '\n'
      << "phase distance to second seed: d_e=" << distance.cell_distance << ", d_s=" << distance.strategy_distance
      << " (K=" << distance.prefix_length << ", tail<=" << distance.tail_bound << ")\n";

  if (an.budget) {
    analysis::CycleOptions opts;
    opts.budget = *an.budget;
    out << analysis::to_text(analysis::detect_cycle(config, opts));
  }
  return kSuccess;
}

int cmd_cycle(const GeneratorArgs& a, std::uint64_t budget, std::size_t show_blocks, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
  const Generator gen = make_generator(a, err);
  analysis::CycleOptions opts;
  opts.budget = budget;
  const auto outcome = analysis::detect_cycle(gen, opts);
  std::ostringstream text;
  text << analysis::to_text(outcome);
  if (const auto* t = std::get_if<TranscriptDriver>(&gen.driver()); t && t->cyclic()) {
    text << "ideal_period: " << analysis::ideal_period(t->gaps().size(), t->strategy().size()) << '\n';
  }
  if (show_blocks > 0) {
    text << "blocks:";
    for (const auto& block : analysis::emitted_blocks(gen, show_blocks)) text << ' ' << to_ascii(block);
    text << '\n';
  }
  out << text.str();
  if (!out_path.empty()) write_output(out_path, text.str(), out);
  return outcome.found() ? kSuccess : kRuntimeError;
}

int cmd_encrypt(const GeneratorArgs& a, const std::string& in_path, const std::string& out_path, std::ostream& err) {
  const auto config = make_config(a, err);
  const auto image = cipher::read_pgm(std::filesystem::path(in_path));
  cipher::write_pgm(std::filesystem::path(out_path), cipher::xor_cipher(image, config));
  return kSuccess;
}

int cmd_histogram(const std::string& in_path, const std::string& csv_path, std::ostream& out) {
  const auto image = cipher::read_pgm(std::filesystem::path(in_path));
  const auto hist = cipher::histogram(image);
  write_output(csv_path, cipher::to_csv(hist), out);
  const double chi2 = cipher::chi_square_uniformity(hist);
  out << "pixels: " << hist.total() << "\nchi_square: " << chi2 << " (1% critical value "
      << cipher::kChiSquare255Critical1Percent << ")\n";
  return kSuccess;
}

}  // namespace

Transcript parse_transcript(std::string_view text) {
  Transcript t;
  bool have_s = false;
  bool have_m = false;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("transcript: expected key=value, got '" + line + "'");
    auto strip = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    if (key == "x0") {
      t.x0 = from_ascii(value);
    } else if (key == "S") {
      for (auto v : parse_m_set(value)) t.strategy.push_back(v);
      have_s = true;
    } else if (key == "m") {
      t.gaps = parse_m_set(value);
      have_m = true;
    } else if (key == "cyclic") {
      if (value != "true" && value != "false") throw ConfigError("transcript: cyclic must be true or false");
      t.cyclic = value == "true";
    } else {
      throw ConfigError("transcript: unknown key '" + key + "'");
    }
  }
  if (!have_s || !have_m) throw ConfigError("transcript: both S and m are required");
  return t;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chaotic-iterations pseudo-random bit generator, test battery and analysis tools", "ciprng"};
  app.require_subcommand(1);

  GeneratorArgs gen_args;
  std::size_t count = 0;
  std::string format = "ascii";
  std::size_t wrap = 0;
  std::string out_path = "-";
  auto* gen = app.add_subcommand("gen", "write a bitstream");
  add_generator_options(gen, gen_args, true);
  gen->add_option("--count", count, "number of bits")->required();
  gen->add_option("--format", format, "ascii or raw (packed, MSB first)")
      ->check(CLI::IsMember({"ascii", "raw"}))
      ->capture_default_str();
  gen->add_option("--wrap", wrap, "ascii line width, 0 for none (64 is customary)")->capture_default_str();
  gen->add_option("--out", out_path, "output file, - for stdout")->capture_default_str();

  GeneratorArgs test_args;
  battery::BatteryOptions battery_options;
  std::string csv_path;
  std::string report_path;
  auto* test = app.add_subcommand("test", "run the statistical battery over many sequences");
  add_generator_options(test, test_args, false);
  test->add_option("--sequences", battery_options.n_sequences, "number of sequences")->capture_default_str();
  test->add_option("--length", battery_options.sequence_length, "bits per sequence")->capture_default_str();
  test->add_option("--block-len", battery_options.block_length, "block frequency block length")
      ->capture_default_str();
  test->add_option("--threads", battery_options.threads, "worker threads, 0 = all cores")->capture_default_str();
  test->add_flag("--relaxed", battery_options.relaxed, "allow sequences shorter than recommended");
  test->add_option("--csv", csv_path, "write per-sequence p-values and P_T as CSV");
  test->add_option("--report", report_path, "also write the text report to this file");

  GeneratorArgs analyze_args;
  AnalyzeArgs analyze_opts;
  auto* analyze = app.add_subcommand("analyze", "correlation, spectrum, phase distance and optional cycle search");
  add_generator_options(analyze, analyze_args, false);
  analyze->add_option("--count", analyze_opts.count, "bits per stream")->capture_default_str();
  analyze->add_option("--max-lag", analyze_opts.max_lag, "largest correlation lag (>= 1)")->capture_default_str();
  analyze->add_option("--seed-b", analyze_opts.seed_b, "seed of the second stream (default: seed + 1)");
  analyze->add_option("--out", analyze_opts.out_prefix, "output prefix for the CSV files")->required();
  analyze->add_option("--budget", analyze_opts.budget, "also search for the orbit period within this many blocks");
  analyze->add_option("--prefix-k", analyze_opts.prefix_k, "strategy terms compared by the phase distance")
      ->capture_default_str();

  GeneratorArgs cycle_args;
  std::uint64_t budget = analysis::CycleOptions{}.budget;
  std::size_t show_blocks = 0;
  std::string cycle_out;
  auto* cycle = app.add_subcommand("cycle", "find transient length and period of the block orbit");
  add_generator_options(cycle, cycle_args, true);
  cycle->add_option("--budget", budget, "maximum block steps")->capture_default_str();
  cycle->add_option("--blocks", show_blocks, "print the first N emitted blocks");
  cycle->add_option("--out", cycle_out, "also write the report to this file");

  GeneratorArgs enc_args;
  std::string in_image;
  std::string out_image;
  auto* encrypt = app.add_subcommand("encrypt", "XOR a P5 PGM image with the keystream");
  add_generator_options(encrypt, enc_args, false);
  encrypt->add_option("--in", in_image, "input PGM")->required();
  encrypt->add_option("--out", out_image, "output PGM")->required();
  auto* decrypt = app.add_subcommand("decrypt", "same as encrypt");
  add_generator_options(decrypt, enc_args, false);
  decrypt->add_option("--in", in_image, "input PGM")->required();
  decrypt->add_option("--out", out_image, "output PGM")->required();

  std::string hist_in;
  std::string hist_csv;
  auto* hist = app.add_subcommand("histogram", "256-bin histogram of a PGM image");
  hist->add_option("--in", hist_in, "input PGM")->required();
  hist->add_option("--csv", hist_csv, "output CSV (value,count)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*gen) return cmd_gen(gen_args, count, format, wrap, out_path, out, err);
    if (*test) return cmd_test(test_args, battery_options, csv_path, report_path, out, err);
    if (*analyze) return cmd_analyze(analyze_args, analyze_opts, out, err);
    if (*cycle) return cmd_cycle(cycle_args, budget, show_blocks, cycle_out, out, err);
    if (*encrypt || *decrypt) return cmd_encrypt(enc_args, in_image, out_image, err);
    if (*hist) return cmd_histogram(hist_in, hist_csv, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DegenerateSeedError& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kUsageError;
}

}  // namespace ciprng::cli
