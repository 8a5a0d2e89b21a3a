#include "abwave/csv.hpp"

#include <cstdio>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>

#include "abwave/errors.hpp"

namespace abwave {

std::string format_double(double v) {
  char buf[40];
  // Shortest form that parses back to the same bits.
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  return buf;
}

namespace {

void write_meta(std::ostream& os,
                const std::map<std::string, std::string>& meta) {
  for (const auto& [key, value] : meta) {
    os << "# " << key << "=" << value << "\n";
  }
}

}  // namespace

void write_pattern_csv(std::ostream& os, const Pattern& p,
                       const std::optional<PatternMetrics>& m,
                       const std::map<std::string, std::string>& meta) {
  os << "# abwave v1\n";
  if (!p.scenario.empty()) os << "# scenario=" << p.scenario << "\n";
  if (!p.model.empty()) os << "# model=" << p.model << "\n";
  write_meta(os, meta);
  os << "x,intensity\n";
  for (std::size_t i = 0; i < p.xs.size(); ++i) {
    os << format_double(p.xs[i]) << "," << format_double(p.intensity[i])
       << "\n";
  }
  if (m) {
    os << "# central_max_x=" << format_double(m->central_max_x) << "\n";
    os << "# fringe_spacing=" << format_double(m->fringe_spacing) << "\n";
    os << "# visibility=" << format_double(m->visibility) << "\n";
    os << "# n_fringes=" << m->n_fringes << "\n";
  }
}

ParsedCsv read_pattern_csv(std::istream& is) {
  ParsedCsv out;
  std::string line;
  int lineno = 0;
  bool saw_header = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq != std::string::npos) {
        std::string key = line.substr(1, eq - 1);
        while (!key.empty() && key.front() == ' ') key.erase(key.begin());
        out.meta[key] = line.substr(eq + 1);
      }
      continue;
    }
    if (!saw_header) {
      if (line != "x,intensity") {
        throw ParseError(lineno, "expected x,intensity header");
      }
      saw_header = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw ParseError(lineno, "expected two comma-separated values");
    }
    out.pattern.xs.push_back(std::strtod(line.c_str(), nullptr));
    out.pattern.intensity.push_back(
        std::strtod(line.c_str() + comma + 1, nullptr));
  }
  if (auto it = out.meta.find("scenario"); it != out.meta.end()) {
    out.pattern.scenario = it->second;
  }
  if (auto it = out.meta.find("model"); it != out.meta.end()) {
    out.pattern.model = it->second;
  }
  return out;
}

void write_sweep_csv(std::ostream& os, const std::string& param,
                     const std::vector<SweepRow>& rows,
                     const std::map<std::string, std::string>& meta) {
  os << "# abwave v1\n";
  write_meta(os, meta);
  os << param
     << ",central_max_x,fringe_spacing,visibility,n_fringes,channel_phase_diff"
     << "\n";
  for (const auto& r : rows) {
    os << format_double(r.value) << "," << format_double(r.metrics.central_max_x)
       << "," << format_double(r.metrics.fringe_spacing) << ","
       << format_double(r.metrics.visibility) << "," << r.metrics.n_fringes
       << "," << format_double(r.channel_phase_diff) << "\n";
  }
}

void write_compare_csv(std::ostream& os,
                       const std::vector<std::string>& model_names,
                       const std::vector<Pattern>& patterns,
                       const std::map<std::string, std::string>& meta) {
  os << "# abwave v1\n";
  write_meta(os, meta);
  os << "x";
  for (const auto& name : model_names) os << ",intensity_" << name;
  os << "\n";
  if (patterns.empty()) return;
  for (std::size_t i = 0; i < patterns.front().xs.size(); ++i) {
    os << format_double(patterns.front().xs[i]);
    for (const auto& p : patterns) os << "," << format_double(p.intensity[i]);
    os << "\n";
  }
}

}  // namespace abwave
