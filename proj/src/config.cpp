#include "ciprng/config.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "ciprng/errors.hpp"

namespace ciprng {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool parse_flag(std::string_view v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("invalid boolean '" + std::string(v) + "'");
}

}  // namespace

bool is_degenerate_y0(double y0) {
  if (!(y0 > 0.0 && y0 < 1.0)) return true;
  return y0 == 0.25 || y0 == 0.5 || y0 == 0.75;
}

SeedValues seed_from_time(std::uint64_t t, std::size_t n_cells) {
  int digits = 1;
  double scale = 10.0;
  for (std::uint64_t v = t / 10; v != 0; v /= 10) {
    ++digits;
    scale *= 10.0;
  }
  SeedValues seed;
  seed.y0 = static_cast<double>(t) / scale;
  if (is_degenerate_y0(seed.y0)) {
    throw DegenerateSeedError("time seed " + std::to_string(t) + " gives degenerate y0 = " +
                              format_real(seed.y0) + "; choose another seed");
  }
  seed.x0.resize(n_cells);
  for (std::size_t i = 0; i < n_cells; ++i) {
    const std::size_t pos = n_cells - 1 - i;
    seed.x0[i] = pos < 64 ? static_cast<std::uint8_t>((t >> pos) & 1u) : 0;
  }
  return seed;
}

SeedValues resolve_seed(const SeedSpec& seed, std::size_t n_cells) {
  if (const auto* time = std::get_if<TimeSeed>(&seed)) return seed_from_time(time->t, n_cells);
  const auto& explicit_seed = std::get<ExplicitSeed>(seed);
  if (explicit_seed.x0.size() != n_cells) {
    throw ConfigError("seed x0 has " + std::to_string(explicit_seed.x0.size()) +
                      " components, expected " + std::to_string(n_cells));
  }
  if (std::any_of(explicit_seed.x0.begin(), explicit_seed.x0.end(), [](auto b) { return b > 1; })) {
    throw ConfigError("seed x0 components must be 0 or 1");
  }
  if (is_degenerate_y0(explicit_seed.y0)) {
    throw DegenerateSeedError("seed y0 = " + format_real(explicit_seed.y0) +
                              " is degenerate (must lie in (0,1) and avoid 1/4, 1/2, 3/4)");
  }
  return {explicit_seed.x0, explicit_seed.y0};
}

GeneratorConfig::GeneratorConfig(std::size_t n_cells, std::vector<unsigned> m_set, SeedSpec seed,
                                 bool emit_initial)
    : n_cells_(n_cells), m_set_(std::move(m_set)), seed_(std::move(seed)), emit_initial_(emit_initial) {
  if (n_cells_ < 2) throw ConfigError("n_cells must be at least 2");
  if (m_set_.empty()) throw ConfigError("m_set must not be empty");
  std::sort(m_set_.begin(), m_set_.end());
  if (m_set_.front() == 0) throw ConfigError("m_set elements must be positive");
  if (std::adjacent_find(m_set_.begin(), m_set_.end()) != m_set_.end()) {
    throw ConfigError("m_set contains duplicate values");
  }
  initial_ = resolve_seed(seed_, n_cells_);
}

GeneratorConfig GeneratorConfig::with_seed(SeedSpec seed) const {
  return GeneratorConfig(n_cells_, m_set_, std::move(seed), emit_initial_);
}

GeneratorConfig GeneratorConfig::parse(std::string_view text) {
  std::map<std::string, std::string, std::less<>> kv;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    auto line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key=value");
    }
    std::string key(trim(line.substr(0, eq)));
    if (!kv.emplace(key, std::string(trim(line.substr(eq + 1)))).second) {
      throw ConfigError("config line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
  }

  auto take = [&](std::string_view key) -> std::string {
    auto it = kv.find(key);
    if (it == kv.end()) throw ConfigError("config: missing key '" + std::string(key) + "'");
    std::string value = it->second;
    kv.erase(it);
    return value;
  };

  const auto n_cells = static_cast<std::size_t>(parse_unsigned(take("n_cells")));
  auto m_set = parse_m_set(take("m_set"));
  bool emit_initial = true;
  if (kv.contains("emit_initial")) emit_initial = parse_flag(take("emit_initial"));

  SeedSpec seed;
  if (kv.contains("seed.t")) {
    if (kv.contains("seed.x0") || kv.contains("seed.y0")) {
      throw ConfigError("config: seed.t cannot be combined with seed.x0/seed.y0");
    }
    seed = TimeSeed{parse_unsigned(take("seed.t"))};
  } else {
    ExplicitSeed s;
    s.x0 = from_ascii(take("seed.x0"));
    s.y0 = parse_real(take("seed.y0"));
    seed = std::move(s);
  }
  if (!kv.empty()) throw ConfigError("config: unknown key '" + kv.begin()->first + "'");
  return GeneratorConfig(n_cells, std::move(m_set), std::move(seed), emit_initial);
}

std::string GeneratorConfig::serialize() const {
  std::ostringstream out;
  out << "n_cells=" << n_cells_ << "\nm_set=";
  for (std::size_t i = 0; i < m_set_.size(); ++i) out << (i ? "," : "") << m_set_[i];
  out << '\n';
  if (const auto* time = std::get_if<TimeSeed>(&seed_)) {
    out << "seed.t=" << time->t << '\n';
  } else {
    const auto& s = std::get<ExplicitSeed>(seed_);
    out << "seed.x0=" << to_ascii(s.x0) << "\nseed.y0=" << format_real(s.y0) << '\n';
  }
  out << "emit_initial=" << (emit_initial_ ? "true" : "false") << '\n';
  return out.str();
}

bool operator==(const GeneratorConfig& a, const GeneratorConfig& b) {
  return a.n_cells_ == b.n_cells_ && a.m_set_ == b.m_set_ && a.seed_ == b.seed_ &&
         a.emit_initial_ == b.emit_initial_;
}

const std::vector<SchemeParams>& named_schemes() {
  static const std::vector<SchemeParams> schemes = {
      {"scheme-1", 8, {1}},
      {"scheme-2", 8, {8}},
      {"scheme-3", 8, {1, 2, 3, 4, 5, 6, 7, 8}},
      {"scheme-4", 5, {4, 5}},
      {"scheme-5", 5, {9, 10}},
      {"scheme-6", 5, {14, 15}},
  };
  return schemes;
}

const SchemeParams& scheme_params(std::string_view name) {
  std::string wanted(name);
  if (wanted.size() == 1) wanted = "scheme-" + wanted;
  for (const auto& s : named_schemes()) {
    if (s.name == wanted) return s;
  }
  throw ConfigError("unknown scheme '" + std::string(name) + "' (expected scheme-1 .. scheme-6)");
}

GeneratorConfig scheme_config(std::string_view name, SeedSpec seed, bool emit_initial) {
  const auto& s = scheme_params(name);
  return GeneratorConfig(s.n_cells, s.m_set, std::move(seed), emit_initial);
}

std::vector<unsigned> parse_m_set(std::string_view text) {
  std::vector<unsigned> values;
  while (true) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    const auto v = parse_unsigned(item);
    if (v > 0xffffffffull) throw ConfigError("m_set value out of range");
    values.push_back(static_cast<unsigned>(v));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return values;
}

double parse_real(std::string_view text) {
  text = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError("invalid real number '" + std::string(text) + "'");
  }
  return value;
}

std::uint64_t parse_unsigned(std::string_view text) {
  text = trim(text);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError("invalid non-negative integer '" + std::string(text) + "'");
  }
  return value;
}

std::string format_real(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

}  // namespace ciprng
