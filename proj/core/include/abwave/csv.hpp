#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abwave/analysis.hpp"
#include "abwave/pattern.hpp"

namespace abwave {

// Shortest representation that round-trips a double exactly.
std::string format_double(double v);

// Pattern CSV: `# abwave v1`, metadata lines, `x,intensity` header, data
// rows, then the metrics footer as `# key=value` lines.  LF line endings.
void write_pattern_csv(std::ostream& os, const Pattern& p,
                       const std::optional<PatternMetrics>& m,
                       const std::map<std::string, std::string>& meta = {});

struct ParsedCsv {
  Pattern pattern;
  std::map<std::string, std::string> meta;
};

ParsedCsv read_pattern_csv(std::istream& is);

void write_sweep_csv(std::ostream& os, const std::string& param,
                     const std::vector<SweepRow>& rows,
                     const std::map<std::string, std::string>& meta = {});

// Joined per-model intensities on a shared grid.
void write_compare_csv(std::ostream& os,
                       const std::vector<std::string>& model_names,
                       const std::vector<Pattern>& patterns,
                       const std::map<std::string, std::string>& meta = {});

}  // namespace abwave
