#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ciprng/analysis/correlation.hpp"
#include "ciprng/analysis/cycle.hpp"
#include "ciprng/analysis/metric.hpp"
#include "ciprng/analysis/spectrum.hpp"
#include "ciprng/battery/battery.hpp"
#include "ciprng/battery/special_functions.hpp"
#include "ciprng/battery/tests.hpp"
#include "ciprng/cipher/cipher.hpp"
#include "ciprng/errors.hpp"
#include "ciprng/generator.hpp"

namespace py = pybind11;
using namespace ciprng;

namespace {

BitSequence to_bits(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return from_ascii(obj.cast<std::string>());
  return obj.cast<BitSequence>();
}

py::bytes as_bytes(const std::vector<std::uint8_t>& v) {
  return py::bytes(reinterpret_cast<const char*>(v.data()), v.size());
}

SeedSpec make_seed(std::optional<std::uint64_t> t, const py::object& x0, std::optional<double> y0) {
  if (t) return TimeSeed{*t};
  if (x0.is_none() || !y0) throw ConfigError("give either t or both x0 and y0");
  return ExplicitSeed{to_bits(x0), *y0};
}

}  // namespace

PYBIND11_MODULE(_ciprng, m) {
  m.doc() = "Chaotic-iterations bit generator with a statistical battery";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<DegenerateSeedError>(m, "DegenerateSeedError", PyExc_RuntimeError);
  py::register_exception<TranscriptExhausted>(m, "TranscriptExhausted", PyExc_RuntimeError);

  py::class_<GeneratorConfig>(m, "GeneratorConfig")
      .def(py::init([](std::size_t n_cells, std::vector<unsigned> m_set, std::optional<std::uint64_t> t,
                       const py::object& x0, std::optional<double> y0, bool emit_initial) {
             return GeneratorConfig(n_cells, std::move(m_set), make_seed(t, x0, y0), emit_initial);
           }),
           py::arg("n_cells"), py::arg("m_set"), py::kw_only(), py::arg("t") = py::none(),
           py::arg("x0") = py::none(), py::arg("y0") = py::none(), py::arg("emit_initial") = true)
      .def_static("scheme",
                  [](const std::string& name, std::optional<std::uint64_t> t, const py::object& x0,
                     std::optional<double> y0, bool emit_initial) {
                    return scheme_config(name, make_seed(t, x0, y0), emit_initial);
                  },
                  py::arg("name"), py::kw_only(), py::arg("t") = py::none(), py::arg("x0") = py::none(),
                  py::arg("y0") = py::none(), py::arg("emit_initial") = true)
      .def_static("parse", &GeneratorConfig::parse)
      .def("serialize", &GeneratorConfig::serialize)
      .def_property_readonly("n_cells", &GeneratorConfig::n_cells)
      .def_property_readonly("m_set",
                             [](const GeneratorConfig& c) {
                               return std::vector<unsigned>(c.m_set().begin(), c.m_set().end());
                             })
      .def_property_readonly("x0", [](const GeneratorConfig& c) { return to_ascii(c.initial_values().x0); })
      .def_property_readonly("y0", [](const GeneratorConfig& c) { return c.initial_values().y0; })
      .def("__eq__", [](const GeneratorConfig& a, const GeneratorConfig& b) { return a == b; })
      .def("__repr__", [](const GeneratorConfig& c) { return "GeneratorConfig(" + c.serialize() + ")"; });

  py::class_<Generator>(m, "Generator")
      .def(py::init<const GeneratorConfig&>())
      .def(py::init([](const py::object& x0, std::vector<std::size_t> strategy, std::vector<unsigned> gaps,
                       bool cyclic, bool emit_initial) {
             return Generator(to_bits(x0), TranscriptDriver(std::move(strategy), std::move(gaps), cyclic),
                              emit_initial);
           }),
           py::arg("x0"), py::arg("strategy"), py::arg("gaps"), py::arg("cyclic") = false,
           py::arg("emit_initial") = true)
      .def("next_block", [](Generator& g) { return to_ascii(g.next_block()); })
      .def("read_bits", [](Generator& g, std::size_t count) { return to_ascii(g.read_bits(count)); })
      .def("read_bytes", [](Generator& g, std::size_t count) { return as_bytes(cipher::keystream_bytes(g, count)); })
      .def_property_readonly("x", [](const Generator& g) { return to_ascii(g.x()); })
      .def_property_readonly("iter_count", &Generator::iter_count)
      .def_property_readonly("blocks_emitted", &Generator::blocks_emitted);

  m.def("generate_bits", [](const GeneratorConfig& c, std::size_t count) { return to_ascii(generate_bits(c, count)); });
  m.def("keystream_bytes", [](const GeneratorConfig& c, std::size_t count) {
    return as_bytes(cipher::keystream_bytes(c, count));
  });
  m.def("logistic_step", &logistic_step);

  m.def("erfc", &battery::erfc);
  m.def("gamma_q", &battery::gamma_q);

  py::class_<battery::TestResult>(m, "TestResult")
      .def_readonly("test_name", &battery::TestResult::test_name)
      .def_readonly("statistic", &battery::TestResult::statistic)
      .def_readonly("p_value", &battery::TestResult::p_value)
      .def_readonly("params", &battery::TestResult::params);

  const auto opts = [](bool relaxed) { return battery::TestOptions{relaxed}; };
  m.def("frequency_monobit", [=](const py::object& b, bool r) { return battery::frequency_monobit(to_bits(b), opts(r)); },
        py::arg("bits"), py::arg("relaxed") = false);
  m.def("runs_test", [=](const py::object& b, bool r) { return battery::runs_test(to_bits(b), opts(r)); },
        py::arg("bits"), py::arg("relaxed") = false);
  m.def("spectral_dft", [=](const py::object& b, bool r) { return battery::spectral_dft(to_bits(b), opts(r)); },
        py::arg("bits"), py::arg("relaxed") = false);
  m.def("approximate_entropy",
        [=](const py::object& b, unsigned mm, bool r) { return battery::approximate_entropy(to_bits(b), mm, opts(r)); },
        py::arg("bits"), py::arg("m") = battery::kDefaultEntropyLength, py::arg("relaxed") = false);
  m.def("p_uniformity", [](const std::vector<double>& p) { return battery::p_uniformity(p); });

  py::class_<battery::TestSeries>(m, "TestSeries")
      .def_readonly("test", &battery::TestSeries::test)
      .def_readonly("param", &battery::TestSeries::param)
      .def_readonly("p_values", &battery::TestSeries::p_values)
      .def_readonly("p_t", &battery::TestSeries::p_t)
      .def_readonly("passed", &battery::TestSeries::pass);

  py::class_<battery::BatteryReport>(m, "BatteryReport")
      .def_readonly("series", &battery::BatteryReport::series)
      .def_readonly("warnings", &battery::BatteryReport::warnings)
      .def("all_pass", &battery::BatteryReport::all_pass)
      .def("find", &battery::BatteryReport::find, py::arg("test"), py::arg("param") = "",
           py::return_value_policy::reference_internal)
      .def("to_text", &battery::BatteryReport::to_text)
      .def("to_csv", &battery::BatteryReport::to_csv);

  m.def(
      "run_battery",
      [](const GeneratorConfig& c, std::size_t n_sequences, std::size_t length, bool relaxed, unsigned threads) {
        battery::BatteryOptions o;
        o.n_sequences = n_sequences;
        o.sequence_length = length;
        o.relaxed = relaxed;
        o.threads = threads;
        py::gil_scoped_release release;
        return battery::run_battery(c, o);
      },
      py::arg("config"), py::arg("n_sequences") = 100, py::arg("sequence_length") = 1'000'000,
      py::arg("relaxed") = false, py::arg("threads") = 0);

  m.def("autocorrelation",
        [](const py::object& b, std::size_t max_lag) { return analysis::autocorrelation(to_bits(b), max_lag).values; });
  m.def("cross_correlation", [](const py::object& a, const py::object& b, std::size_t max_lag) {
    return analysis::cross_correlation(to_bits(a), to_bits(b), max_lag).values;
  });
  m.def("power_spectrum", [](const py::object& b) { return analysis::power_spectrum(to_bits(b)).power; });
  m.def("phase_distance",
        [](const std::vector<std::size_t>& s_a, const py::object& e_a, const std::vector<std::size_t>& s_b,
           const py::object& e_b, std::size_t k) {
          return analysis::phase_distance(s_a, to_bits(e_a), s_b, to_bits(e_b), k).total();
        },
        py::arg("s_a"), py::arg("e_a"), py::arg("s_b"), py::arg("e_b"), py::arg("prefix_k") = analysis::kDefaultStrategyPrefix);
  m.def(
      "detect_cycle",
      [](const Generator& g, std::uint64_t budget) -> py::object {
        analysis::CycleOptions o;
        o.budget = budget;
        const auto outcome = analysis::detect_cycle(g, o);
        if (!outcome.found()) return py::none();
        return py::make_tuple(outcome.report->transient_length, outcome.report->cycle_period);
      },
      py::arg("generator"), py::arg("budget") = analysis::CycleOptions{}.budget);

  m.def("xor_pgm", [](const std::string& in, const std::string& out, const GeneratorConfig& c) {
    cipher::write_pgm(std::filesystem::path(out), cipher::xor_cipher(cipher::read_pgm(std::filesystem::path(in)), c));
  });
  m.def("pgm_histogram", [](const std::string& path) {
    const auto h = cipher::histogram(cipher::read_pgm(std::filesystem::path(path)));
    return std::vector<std::uint64_t>(h.bins.begin(), h.bins.end());
  });
}
