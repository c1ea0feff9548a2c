#include "ciprng/battery/battery.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ciprng/battery/special_functions.hpp"
#include "ciprng/errors.hpp"
#include "ciprng/generator.hpp"

namespace ciprng::battery {

UniformityResult uniformity(std::span<const double> p_values, std::size_t min_recommended) {
  if (p_values.empty()) throw ConfigError("uniformity: no p-values");
  UniformityResult r;
  for (double p : p_values) {
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("uniformity: p-value outside [0,1]");
    const auto bin = std::min<std::size_t>(static_cast<std::size_t>(p * 10.0), 9);
    ++r.bins[bin];
  }
  const double expected = static_cast<double>(p_values.size()) / 10.0;
  for (auto count : r.bins) {
    const double diff = static_cast<double>(count) - expected;
    r.chi_square += diff * diff / expected;
  }
  r.p_t = gamma_q(4.5, r.chi_square / 2.0);
  r.small_sample = p_values.size() < min_recommended;
  return r;
}

double p_uniformity(std::span<const double> p_values) { return uniformity(p_values).p_t; }

std::size_t TestSeries::count_at_least(double alpha) const {
  return static_cast<std::size_t>(
      std::count_if(p_values.begin(), p_values.end(), [&](double p) { return p >= alpha; }));
}

bool BatteryReport::all_pass() const {
  return !series.empty() && std::all_of(series.begin(), series.end(), [](const auto& s) { return s.pass; });
}

const TestSeries& BatteryReport::find(std::string_view test, std::string_view param) const {
  for (const auto& s : series) {
    if (s.test == test && s.param == param) return s;
  }
  throw std::out_of_range("no series " + std::string(test) + (param.empty() ? "" : ":" + std::string(param)));
}

namespace {

struct Labeled {
  std::string test;
  std::string param;
  double p_value;
};

std::vector<Labeled> run_all(BitView bits, const BatteryOptions& options) {
  const TestOptions opts{options.relaxed};
  std::vector<Labeled> out;
  out.push_back({"frequency", "", frequency_monobit(bits, opts).p_value});
  out.push_back({"block_frequency", "", block_frequency(bits, options.block_length, opts).p_value});
  out.push_back({"runs", "", runs_test(bits, opts).p_value});
  out.push_back({"longest_run", "", longest_run(bits, opts).p_value});
  out.push_back({"fft", "", spectral_dft(bits, opts).p_value});
  const auto [fwd, bwd] = cumulative_sums(bits, opts);
  out.push_back({"cumulative_sums", "forward", fwd.p_value});
  out.push_back({"cumulative_sums", "backward", bwd.p_value});
  const auto [d1, d2] = serial(bits, options.serial_m, opts);
  out.push_back({"serial", "d1", d1.p_value});
  out.push_back({"serial", "d2", d2.p_value});
  out.push_back({"approximate_entropy", "", approximate_entropy(bits, options.entropy_m, opts).p_value});
  return out;
}

// Runs `work(i)` for i in [0, count) on up to `threads` workers. The first
// exception (lowest index) is rethrown after all workers stop.
template <typename Work>
void parallel_for(std::size_t count, unsigned threads, Work work) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  std::vector<std::exception_ptr> errors(count);
  auto body = [&](unsigned worker) {
    for (std::size_t i = worker; i < count; i += threads) {
      try {
        work(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    body(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(body, w);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

BatteryReport aggregate(std::vector<std::vector<Labeled>> per_sequence, const BatteryOptions& options,
                        std::size_t sequence_length) {
  BatteryReport report;
  report.n_sequences = per_sequence.size();
  report.sequence_length = sequence_length;
  report.relaxed = options.relaxed;

  std::map<std::pair<std::string, std::string>, std::vector<double>> grouped;
  for (const auto& seq : per_sequence) {
    for (const auto& item : seq) grouped[{item.test, item.param}].push_back(item.p_value);
  }
  std::map<std::string, std::vector<double>> sub_p_t;
  for (auto& [key, p_values] : grouped) {
    const auto u = uniformity(p_values, options.min_recommended_sequences);
    TestSeries s{key.first, key.second, std::move(p_values), u.p_t, u.p_t >= kUniformityThreshold};
    if (!s.param.empty()) sub_p_t[s.test].push_back(s.p_t);
    report.series.push_back(std::move(s));
  }
  for (const auto& [test, values] : sub_p_t) {
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    report.averaged.push_back({test, mean, mean >= kUniformityThreshold});
  }

  if (report.n_sequences < options.min_recommended_sequences) {
    report.warnings.push_back("only " + std::to_string(report.n_sequences) +
                              " sequences; P_T is unreliable below " +
                              std::to_string(options.min_recommended_sequences));
  }
  if (options.relaxed && sequence_length < kRecommendedSequenceLength) {
    report.warnings.push_back("relaxed mode: " + std::to_string(sequence_length) +
                              "-bit sequences are shorter than the recommended " +
                              std::to_string(kRecommendedSequenceLength));
  }
  return report;
}

}  // namespace

BatteryReport evaluate_sequences(std::span<const BitSequence> sequences, const BatteryOptions& options) {
  if (sequences.empty()) throw ConfigError("battery: no sequences");
  const std::size_t length = sequences.front().size();
  for (const auto& s : sequences) {
    if (s.size() != length) throw ConfigError("battery: sequences must have equal length");
  }
  if (!options.relaxed && length < kRecommendedSequenceLength) {
    throw ConfigError("battery: sequences of " + std::to_string(length) + " bits are shorter than the recommended " +
                      std::to_string(kRecommendedSequenceLength) + " (use relaxed mode)");
  }
  std::vector<std::vector<Labeled>> results(sequences.size());
  parallel_for(sequences.size(), options.threads, [&](std::size_t i) {
    try {
      results[i] = run_all(sequences[i], options);
    } catch (const std::exception& e) {
      throw ConfigError("battery: sequence " + std::to_string(i) + ": " + e.what());
    }
  });
  return aggregate(std::move(results), options, length);
}

BatteryReport run_battery(const GeneratorConfig& config, const BatteryOptions& options) {
  const auto* time = std::get_if<TimeSeed>(&config.seed());
  if (time == nullptr) throw ConfigError("battery: needs an integer master seed (seed.t)");
  if (options.n_sequences == 0) throw ConfigError("battery: n_sequences must be positive");
  if (!options.relaxed && options.sequence_length < kRecommendedSequenceLength) {
    throw ConfigError("battery: sequence length " + std::to_string(options.sequence_length) +
                      " is below the recommended " + std::to_string(kRecommendedSequenceLength) +
                      " (use relaxed mode)");
  }
  const std::uint64_t master = time->t;

  std::vector<std::vector<Labeled>> results(options.n_sequences);
  parallel_for(options.n_sequences, options.threads, [&](std::size_t i) {
    const std::uint64_t seed = master + i;
    try {
      const auto bits = generate_bits(config.with_seed(TimeSeed{seed}), options.sequence_length);
      results[i] = run_all(bits, options);
    } catch (const DegenerateSeedError& e) {
      throw DegenerateSeedError("battery: sequence " + std::to_string(i) + " (seed " + std::to_string(seed) +
                                "): " + e.what());
    } catch (const std::exception& e) {
      throw ConfigError("battery: sequence " + std::to_string(i) + " (seed " + std::to_string(seed) +
                        "): " + e.what());
    }
  });
  auto report = aggregate(std::move(results), options, options.sequence_length);
  report.master_seed = master;
  return report;
}

namespace {

std::string format_p(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", p);
  if (p != 0.0 && p < 1e-6) std::snprintf(buf, sizeof buf, "%.3e", p);
  return buf;
}

}  // namespace

std::string BatteryReport::to_text() const {
  std::ostringstream out;
  out << "battery: " << n_sequences << " sequences x " << sequence_length << " bits, master seed "
      << master_seed << (relaxed ? ", relaxed" : "") << '\n';
  for (const auto& w : warnings) out << "warning: " << w << '\n';
  out << std::left << std::setw(22) << "test" << std::setw(10) << "param" << std::setw(12) << "P_T"
      << std::setw(6) << "pass"
      << "p>=0.01\n";
  for (const auto& s : series) {
    out << std::setw(22) << s.test << std::setw(10) << (s.param.empty() ? "-" : s.param) << std::setw(12)
        << format_p(s.p_t) << std::setw(6) << (s.pass ? "yes" : "NO") << s.count_at_least(0.01) << '/'
        << s.p_values.size() << '\n';
  }
  for (const auto& a : averaged) {
    out << std::setw(22) << a.test << std::setw(10) << "average" << std::setw(12) << format_p(a.p_t)
        << (a.pass ? "yes" : "NO") << '\n';
  }
  out << "result: " << (all_pass() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string BatteryReport::to_csv() const {
  std::ostringstream out;
  out << "test,param,seq_index,p_value\n";
  char buf[40];
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.p_values.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", s.p_values[i]);
      out << s.test << ',' << s.param << ',' << i << ',' << buf << '\n';
    }
  }
  out << "test,P_T,pass\n";
  for (const auto& s : series) {
    std::snprintf(buf, sizeof buf, "%.17g", s.p_t);
    out << s.test << (s.param.empty() ? "" : ":" + s.param) << ',' << buf << ',' << (s.pass ? 1 : 0) << '\n';
  }
  for (const auto& a : averaged) {
    std::snprintf(buf, sizeof buf, "%.17g", a.p_t);
    out << a.test << ":average," << buf << ',' << (a.pass ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace ciprng::battery
