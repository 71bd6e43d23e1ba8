#include "pathnoise/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "pathnoise/errors.hpp"

namespace pathnoise::io {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

template <typename T>
T parse_number(const std::string& field, std::size_t line_no) {
  T value{};
  const char* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ValidationError("csv line " + std::to_string(line_no) + ": cannot parse '" + field + "'");
  }
  return value;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open output file " + path.string());
  return out;
}

Json band_json(const Band& b) {
  return Json{{"center", b.center()}, {"half_width", b.half_width()}};
}

}  // namespace

TwoSidedSequence parse_sequence_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (header.empty() && std::getline(in, line)) {
    ++line_no;
    if (!trim(line).empty()) header = split(trim(line));
  }
  const bool has_im = header.size() == 3 && header[2] == "im";
  if (header.size() < 2 || header[0] != "t" || header[1] != "re" ||
      (header.size() == 3 && !has_im) || header.size() > 3) {
    throw ValidationError("csv: header must be 't,re,im' or 't,re'");
  }
  std::map<std::int64_t, Complex> samples;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string row = trim(line);
    if (row.empty()) continue;
    const auto fields = split(row);
    if (fields.size() != header.size()) {
      throw ValidationError("csv line " + std::to_string(line_no) + ": expected " +
                            std::to_string(header.size()) + " fields");
    }
    const auto t = parse_number<std::int64_t>(fields[0], line_no);
    const double re = parse_number<double>(fields[1], line_no);
    const double im = has_im ? parse_number<double>(fields[2], line_no) : 0.0;
    if (!samples.emplace(t, Complex(re, im)).second) {
      throw ValidationError("csv line " + std::to_string(line_no) + ": duplicate t = " +
                            std::to_string(t));
    }
  }
  if (samples.empty()) throw ValidationError("csv: no samples");
  const std::int64_t t_min = samples.begin()->first;
  const std::int64_t t_max = samples.rbegin()->first;
  ComplexVector values(static_cast<std::size_t>(t_max - t_min + 1));
  for (const auto& [t, v] : samples) values[static_cast<std::size_t>(t - t_min)] = v;
  return TwoSidedSequence(t_min, std::move(values));
}

TwoSidedSequence read_sequence_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open input file " + path.string());
  return parse_sequence_csv(in);
}

OneSidedSequence read_one_sided_csv(const std::filesystem::path& path) {
  const TwoSidedSequence x = read_sequence_csv(path);
  if (x.t_max() > 0) throw ValidationError("one-sided input must only contain t <= 0");
  return OneSidedSequence::from_two_sided(x, static_cast<std::size_t>(1 - x.t_min()));
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_sequence_csv(std::ostream& out, const TwoSidedSequence& x) {
  out << "t,re,im\n";
  for (std::int64_t t = x.t_min(); t <= x.t_max(); ++t) {
    const Complex v = x.at(t);
    out << t << ',' << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
  }
}

void write_sequence_csv(const std::filesystem::path& path, const TwoSidedSequence& x) {
  auto out = open_out(path);
  write_sequence_csv(out, x);
}

void write_spectrum_csv(std::ostream& out, const SpectrumGrid& spectrum) {
  out << "omega,re,im\n";
  for (std::size_t n = 0; n < spectrum.size(); ++n) {
    out << format_double(spectrum.frequency(n)) << ',' << format_double(spectrum[n].real())
        << ',' << format_double(spectrum[n].imag()) << '\n';
  }
}

void write_spectrum_csv(const std::filesystem::path& path, const SpectrumGrid& spectrum) {
  auto out = open_out(path);
  write_spectrum_csv(out, spectrum);
}

void write_json(const std::filesystem::path& path, const Json& j) {
  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

Json to_json(const SigmaReport& r) {
  return Json{{"sigma", r.sigma},
              {"omega0", r.omega0},
              {"normalized_ratio", r.normalized_ratio},
              {"grid_size", r.grid_size}};
}

Json to_json(const RecoveryReport& r) {
  return Json{{"m", r.m},
              {"estimate_re", r.estimate.real()},
              {"estimate_im", r.estimate.imag()},
              {"worst_case_error", r.worst_case_error},
              {"omega0", r.omega0}};
}

Json to_json(const ProjectorConfig& cfg) {
  return Json{{"omega_I", cfg.omega_I},
              {"Omega", cfg.Omega},
              {"K", cfg.K},
              {"T", cfg.T},
              {"lambda", cfg.lambda}};
}

ProjectorConfig projector_config_from_json(const Json& j) {
  ProjectorConfig cfg;
  try {
    cfg.omega_I = j.at("omega_I").get<double>();
    cfg.Omega = j.at("Omega").get<double>();
    cfg.K = j.at("K").get<int>();
    cfg.T = j.at("T").get<std::size_t>();
    cfg.lambda = j.value("lambda", 0.0);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("projector config: ") + e.what());
  }
  return cfg;
}

Json to_json(const BandEstimate& e) {
  Json table = Json::array();
  for (const auto& c : e.residuals) {
    table.push_back(Json{{"center", c.excluded.center()},
                         {"half_width", c.excluded.half_width()},
                         {"d", c.d}});
  }
  return Json{{"omega_c_hat", e.omega_c_hat},
              {"I_hat", band_json(e.I_hat)},
              {"I_refined", band_json(e.refined)},
              {"nu", e.nu},
              {"nu_hat", e.nu_hat},
              {"residual_table", std::move(table)},
              {"status", to_string(e.status)}};
}

Json to_json(const FirPredictor& p) {
  Json taps = Json::array();
  for (const auto& k : p.taps) taps.push_back(Json{{"re", k.real()}, {"im", k.imag()}});
  return Json{{"omega_I", p.band.center()},
              {"Omega", p.band.half_width()},
              {"L", p.length()},
              {"taps", std::move(taps)},
              {"design_error", p.design_error}};
}

Json to_json(const MultistepResult& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    steps.push_back(Json{{"k", s.k},
                         {"band", band_json(s.band)},
                         {"norm_x", s.norm_x},
                         {"norm_y", s.norm_y},
                         {"delta", s.delta},
                         {"delta_bar", s.delta_bar}});
  }
  return Json{{"stop_reason", to_string(r.stop_reason)},
              {"norm_x", r.norm_x},
              {"steps", std::move(steps)}};
}

}  // namespace pathnoise::io
