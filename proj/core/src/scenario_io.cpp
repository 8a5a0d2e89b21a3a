#include "abwave/scenario_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <sstream>
#include <vector>

#include "abwave/csv.hpp"
#include "abwave/errors.hpp"

namespace abwave {

namespace {

struct Entry {
  int line = 0;
  std::string key;
  std::string value;
  bool used = false;
};

struct Sections {
  std::map<std::string, std::vector<Entry>> entries;
  std::map<std::string, int> header_line;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Sections tokenize(const std::string& text) {
  Sections out;
  std::istringstream is(text);
  std::string line;
  std::string section;
  int lineno = 0;
  static const std::vector<std::string> known_sections = {
      "source", "apertures", "field", "screen", "model"};
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(lineno, "unterminated section");
      section = trim(line.substr(1, line.size() - 2));
      if (std::find(known_sections.begin(), known_sections.end(), section) ==
          known_sections.end()) {
        throw ParseError(lineno, "unknown section [" + section + "]");
      }
      out.header_line.emplace(section, lineno);
      out.entries[section];  // section may stay empty
      continue;
    }
    if (section.empty()) {
      throw ParseError(lineno, "key outside any section");
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError(lineno, "expected key = value");
    }
    Entry e;
    e.line = lineno;
    e.key = trim(line.substr(0, eq));
    e.value = trim(line.substr(eq + 1));
    if (e.key.empty()) throw ParseError(lineno, "empty key");
    out.entries[section].push_back(e);
  }
  return out;
}

class SectionReader {
 public:
  SectionReader(Sections& s, const std::string& name) : name_(name) {
    auto it = s.entries.find(name);
    entries_ = it == s.entries.end() ? nullptr : &it->second;
    auto hl = s.header_line.find(name);
    header_line_ = hl == s.header_line.end() ? 0 : hl->second;
  }

  bool present() const { return entries_ != nullptr; }
  int header_line() const { return header_line_; }

  Entry* find(const std::string& key) {
    if (!entries_) return nullptr;
    for (auto& e : *entries_) {
      if (e.key == key) {
        e.used = true;
        return &e;
      }
    }
    return nullptr;
  }

  std::vector<Entry*> find_all(const std::string& key) {
    std::vector<Entry*> out;
    if (!entries_) return out;
    for (auto& e : *entries_) {
      if (e.key == key) {
        e.used = true;
        out.push_back(&e);
      }
    }
    return out;
  }

  void check_all_used() const {
    if (!entries_) return;
    for (const auto& e : *entries_) {
      if (!e.used) {
        throw ParseError(e.line, "unknown key `" + e.key + "` in [" + name_ + "]");
      }
    }
  }

  [[noreturn]] void missing(const std::string& key) const {
    throw ParseError(header_line_,
                     "[" + name_ + "] is missing required key `" + key + "`");
  }

 private:
  const std::string name_;
  std::vector<Entry>* entries_ = nullptr;
  int header_line_ = 0;
};

double to_double(const Entry& e) {
  const char* begin = e.value.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw ParseError(e.line, "expected a number, got `" + e.value + "`");
  }
  return v;
}

int to_int(const Entry& e) {
  const double v = to_double(e);
  const int i = static_cast<int>(v);
  if (static_cast<double>(i) != v) {
    throw ParseError(e.line, "expected an integer, got `" + e.value + "`");
  }
  return i;
}

std::vector<double> to_doubles(const Entry& e, char sep) {
  std::vector<double> out;
  std::string item;
  std::istringstream is(e.value);
  while (std::getline(is, item, sep)) {
    item = trim(item);
    if (item.empty()) throw ParseError(e.line, "empty list element");
    const char* begin = item.c_str();
    char* end = nullptr;
    out.push_back(std::strtod(begin, &end));
    if (end == begin || *end != '\0') {
      throw ParseError(e.line, "expected a number, got `" + item + "`");
    }
  }
  return out;
}

Vec2 to_vec2(const Entry& e) {
  const auto v = to_doubles(e, ',');
  if (v.size() != 2) throw ParseError(e.line, "expected `x,z`");
  return {v[0], v[1]};
}

double get_double(SectionReader& r, const std::string& key, double fallback) {
  Entry* e = r.find(key);
  return e ? to_double(*e) : fallback;
}

// --- per-section interpretation ---------------------------------------------

void read_source(SectionReader& r, Scenario& s,
                 const std::string& fallback_name) {
  if (!r.present()) {
    throw ParseError(0, "missing [source] section");
  }
  if (Entry* e = r.find("name")) {
    s.name = e->value;
  } else {
    s.name = fallback_name;
  }
  Entry* mode = r.find("unit_mode");
  if (!mode) r.missing("unit_mode");
  if (mode->value == "si") {
    s.source.unit_mode = UnitMode::si;
  } else if (mode->value == "reduced") {
    s.source.unit_mode = UnitMode::reduced;
  } else {
    throw ParseError(mode->line, "unit_mode must be `si` or `reduced`");
  }
  const bool si = s.source.unit_mode == UnitMode::si;
  s.source.charge =
      get_double(r, "charge", si ? constants::elementary_charge_si : 1.0);
  s.source.mass = get_double(r, "mass", si ? constants::electron_mass_si : 1.0);
  s.source.x0 = get_double(r, "x0", 0.0);
  s.source.lambda0 = get_double(r, "lambda0", si ? 3e-12 : 1.0);
  s.source.t0 = get_double(r, "t0", 0.0);
  s.source.nu0 = get_double(r, "nu0", 1.0);
  if (Entry* e = r.find("samples")) s.source.samples = to_int(*e);
  if (Entry* e = r.find("source_gauge")) {
    if (e->value == "zero") {
      s.source.zero_source_momentum_gauge = true;
    } else if (e->value == "as_is") {
      s.source.zero_source_momentum_gauge = false;
    } else {
      throw ParseError(e->line, "source_gauge must be `zero` or `as_is`");
    }
  }
  // z0 defaults to the first aperture plane; patched by the caller when
  // absent.
  if (Entry* e = r.find("z0")) {
    s.source.z0 = to_double(*e);
  } else {
    s.source.z0 = std::numeric_limits<double>::quiet_NaN();
  }
}

void read_apertures(SectionReader& r, Scenario& s) {
  if (!r.present()) throw ParseError(0, "missing [apertures] section");
  const auto planes = r.find_all("plane");
  if (planes.empty()) r.missing("plane");
  for (Entry* e : planes) {
    const auto bar = e->value.find('|');
    if (bar == std::string::npos) {
      throw ParseError(e->line, "expected `z | center:width, ...`");
    }
    Aperture ap;
    Entry z_entry = *e;
    z_entry.value = trim(e->value.substr(0, bar));
    ap.z = to_double(z_entry);
    std::istringstream slit_list(e->value.substr(bar + 1));
    std::string item;
    while (std::getline(slit_list, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      const auto colon = item.find(':');
      if (colon == std::string::npos) {
        throw ParseError(e->line, "slit must be `center:width`");
      }
      Entry c = *e, w = *e;
      c.value = trim(item.substr(0, colon));
      w.value = trim(item.substr(colon + 1));
      ap.slits.push_back({to_double(c), to_double(w)});
    }
    if (ap.slits.empty()) {
      throw ParseError(e->line, "aperture needs at least one slit");
    }
    s.apertures.push_back(ap);
  }
}

void read_field(SectionReader& r, Scenario& s) {
  std::string type = "vacuum";
  if (r.present()) {
    if (Entry* e = r.find("type")) type = e->value;
  }
  if (Entry* e = r.present() ? r.find("coverage") : nullptr) {
    const auto cov = coverage_from_string(e->value);
    if (!cov) throw ParseError(e->line, "unknown coverage `" + e->value + "`");
    s.coverage = *cov;
  }
  if (type == "vacuum") {
    s.field = FieldModel{Vacuum{}};
    return;
  }
  if (type == "flux_tube") {
    FluxTube m;
    if (Entry* e = r.find("center")) m.center = to_vec2(*e); else r.missing("center");
    if (Entry* e = r.find("radius")) m.radius = to_double(*e); else r.missing("radius");
    if (Entry* e = r.find("flux")) m.flux = to_double(*e); else r.missing("flux");
    s.field = FieldModel{m};
    return;
  }
  if (type == "flux_tube_pair") {
    FluxTubePair m;
    if (Entry* e = r.find("center1")) m.first.center = to_vec2(*e); else r.missing("center1");
    if (Entry* e = r.find("radius1")) m.first.radius = to_double(*e); else r.missing("radius1");
    if (Entry* e = r.find("flux1")) m.first.flux = to_double(*e); else r.missing("flux1");
    if (Entry* e = r.find("center2")) m.second.center = to_vec2(*e); else r.missing("center2");
    if (Entry* e = r.find("radius2")) m.second.radius = to_double(*e); else r.missing("radius2");
    if (Entry* e = r.find("flux2")) m.second.flux = to_double(*e); else r.missing("flux2");
    s.field = FieldModel{m};
    return;
  }
  if (type == "toroid_bore") {
    ToroidBore m;
    if (Entry* e = r.find("z_extent")) {
      const auto v = to_doubles(*e, ',');
      if (v.size() != 2) throw ParseError(e->line, "expected `lo,hi`");
      m.z_lo = v[0];
      m.z_hi = v[1];
    } else if (s.coverage == Coverage::none) {
      r.missing("z_extent");
    }
    if (Entry* e = r.find("x_extent")) {
      const auto v = to_doubles(*e, ',');
      if (v.size() != 2) throw ParseError(e->line, "expected `lo,hi`");
      m.x_lo = v[0];
      m.x_hi = v[1];
    } else {
      r.missing("x_extent");
    }
    if (Entry* e = r.find("B")) m.b_field = to_double(*e); else r.missing("B");
    if (Entry* e = r.find("thickness")) m.thickness = to_double(*e); else r.missing("thickness");
    m.edge_ramp = get_double(r, "edge_ramp", 0.0);
    s.field = FieldModel{m};
    return;
  }
  if (type == "uniform_scalar") {
    UniformScalar m;
    m.volts = get_double(r, "volts", 0.0);
    m.ramp_volts_per_s = get_double(r, "ramp", 0.0);
    if (Entry* e = r.find("region")) {
      const auto v = to_doubles(*e, ',');
      if (v.size() != 4) {
        throw ParseError(e->line, "region must be `x_lo,x_hi,z_lo,z_hi`");
      }
      m.region = Box{v[0], v[1], v[2], v[3]};
    }
    s.field = FieldModel{m};
    return;
  }
  throw ParseError(r.header_line(), "unknown field type `" + type + "`");
}

void read_screen(SectionReader& r, Scenario& s) {
  if (!r.present()) throw ParseError(0, "missing [screen] section");
  if (Entry* e = r.find("z")) s.screen.z = to_double(*e); else r.missing("z");
  if (Entry* e = r.find("half_extent")) s.screen.half_extent = to_double(*e);
  else r.missing("half_extent");
  if (Entry* e = r.find("samples")) s.screen.samples = to_int(*e);
  else r.missing("samples");
}

void read_model(SectionReader& r, Scenario& s) {
  std::string type = "local";
  std::string variant = "magnitude";
  if (r.present()) {
    if (Entry* e = r.find("type")) type = e->value;
    if (Entry* e = r.find("local_variant")) variant = e->value;
  }
  if (type == "local") {
    if (variant == "magnitude") {
      s.model = PathPhaseModel{LocalWavefront{LocalVariant::magnitude}};
    } else if (variant == "projected") {
      s.model = PathPhaseModel{LocalWavefront{LocalVariant::projected}};
    } else {
      throw ParseError(r.header_line(),
                       "local_variant must be `magnitude` or `projected`");
    }
  } else if (type == "topological") {
    s.model = PathPhaseModel{TopologicalAB{}};
  } else if (type == "alternative") {
    s.model = PathPhaseModel{AlternativeMinimal{}};
  } else {
    throw ParseError(r.header_line(), "unknown model type `" + type + "`");
  }
  if (!r.present()) return;
  for (Entry* e : r.find_all("channel")) {
    const auto colon = e->value.find(':');
    if (colon == std::string::npos) {
      throw ParseError(e->line, "channel must be `slit_index:channel_id`");
    }
    Entry a = *e, b = *e;
    a.value = trim(e->value.substr(0, colon));
    b.value = trim(e->value.substr(colon + 1));
    const int slit = to_int(a);
    const int channel = to_int(b);
    if (slit < 0) throw ParseError(e->line, "slit index must be >= 0");
    if (static_cast<std::size_t>(slit) >= 64) {
      throw ParseError(e->line, "slit index out of range");
    }
    if (s.slit_channel.size() <= static_cast<std::size_t>(slit)) {
      s.slit_channel.resize(static_cast<std::size_t>(slit) + 1, 0);
    }
    s.slit_channel[static_cast<std::size_t>(slit)] = channel;
  }
  for (Entry* e : r.find_all("path")) {
    const auto colon = e->value.find(':');
    if (colon == std::string::npos) {
      throw ParseError(e->line, "path must be `channel_id: x,z; x,z; ...`");
    }
    Entry id = *e;
    id.value = trim(e->value.substr(0, colon));
    const int channel = to_int(id);
    if (channel < 0 || channel >= 64) {
      throw ParseError(e->line, "channel id out of range");
    }
    Polyline path;
    std::istringstream points(e->value.substr(colon + 1));
    std::string item;
    while (std::getline(points, item, ';')) {
      item = trim(item);
      if (item.empty()) continue;
      Entry pt = *e;
      pt.value = item;
      path.push_back(to_vec2(pt));
    }
    if (path.size() < 2) {
      throw ParseError(e->line, "path needs at least two points");
    }
    if (s.channel_paths.size() <= static_cast<std::size_t>(channel)) {
      s.channel_paths.resize(static_cast<std::size_t>(channel) + 1);
    }
    s.channel_paths[static_cast<std::size_t>(channel)] = std::move(path);
  }
}

}  // namespace

Scenario parse_scenario(const std::string& text,
                        const std::string& fallback_name) {
  Sections sections = tokenize(text);
  Scenario s;
  s.slit_channel.clear();
  s.channel_paths.clear();

  SectionReader source(sections, "source");
  SectionReader apertures(sections, "apertures");
  SectionReader field(sections, "field");
  SectionReader screen(sections, "screen");
  SectionReader model(sections, "model");

  read_source(source, s, fallback_name);
  read_apertures(apertures, s);
  read_field(field, s);
  read_screen(screen, s);
  read_model(model, s);

  if (std::isnan(s.source.z0)) s.source.z0 = s.apertures.front().z;
  if (s.slit_channel.empty() && !s.apertures.empty()) {
    s.slit_channel.assign(s.apertures.back().slits.size(), 0);
  }
  if (s.channel_paths.empty() && !s.apertures.empty()) {
    const double mid_z = s.apertures.back().z;
    s.channel_paths = {{{0.0, mid_z}, {0.0, s.screen.z}}};
  }

  source.check_all_used();
  apertures.check_all_used();
  field.check_all_used();
  screen.check_all_used();
  model.check_all_used();
  return s;
}

std::string export_scenario(const Scenario& s) {
  std::ostringstream os;
  const auto d = [](double v) { return format_double(v); };

  os << "[source]\n";
  os << "name = " << s.name << "\n";
  os << "unit_mode = "
     << (s.source.unit_mode == UnitMode::si ? "si" : "reduced") << "\n";
  os << "charge = " << d(s.source.charge) << "\n";
  os << "mass = " << d(s.source.mass) << "\n";
  os << "x0 = " << d(s.source.x0) << "\n";
  os << "z0 = " << d(s.source.z0) << "\n";
  os << "t0 = " << d(s.source.t0) << "\n";
  os << "lambda0 = " << d(s.source.lambda0) << "\n";
  os << "nu0 = " << d(s.source.nu0) << "\n";
  os << "samples = " << s.source.samples << "\n";
  os << "source_gauge = "
     << (s.source.zero_source_momentum_gauge ? "zero" : "as_is") << "\n";

  os << "[apertures]\n";
  for (const auto& ap : s.apertures) {
    os << "plane = " << d(ap.z) << " |";
    for (std::size_t i = 0; i < ap.slits.size(); ++i) {
      os << (i ? ", " : " ") << d(ap.slits[i].center) << ":"
         << d(ap.slits[i].width);
    }
    os << "\n";
  }

  os << "[field]\n";
  struct FieldWriter {
    std::ostringstream& os;
    const Scenario& s;
    void operator()(const Vacuum&) const { os << "type = vacuum\n"; }
    void operator()(const FluxTube& m) const {
      os << "type = flux_tube\n";
      os << "center = " << format_double(m.center.x) << ","
         << format_double(m.center.z) << "\n";
      os << "radius = " << format_double(m.radius) << "\n";
      os << "flux = " << format_double(m.flux) << "\n";
    }
    void operator()(const FluxTubePair& m) const {
      os << "type = flux_tube_pair\n";
      os << "center1 = " << format_double(m.first.center.x) << ","
         << format_double(m.first.center.z) << "\n";
      os << "radius1 = " << format_double(m.first.radius) << "\n";
      os << "flux1 = " << format_double(m.first.flux) << "\n";
      os << "center2 = " << format_double(m.second.center.x) << ","
         << format_double(m.second.center.z) << "\n";
      os << "radius2 = " << format_double(m.second.radius) << "\n";
      os << "flux2 = " << format_double(m.second.flux) << "\n";
    }
    void operator()(const ToroidBore& m) const {
      os << "type = toroid_bore\n";
      if (s.coverage == Coverage::none) {
        os << "z_extent = " << format_double(m.z_lo) << ","
           << format_double(m.z_hi) << "\n";
      }
      os << "x_extent = " << format_double(m.x_lo) << ","
         << format_double(m.x_hi) << "\n";
      os << "B = " << format_double(m.b_field) << "\n";
      os << "thickness = " << format_double(m.thickness) << "\n";
      if (m.edge_ramp != 0.0) {
        os << "edge_ramp = " << format_double(m.edge_ramp) << "\n";
      }
    }
    void operator()(const UniformScalar& m) const {
      os << "type = uniform_scalar\n";
      os << "volts = " << format_double(m.volts) << "\n";
      os << "ramp = " << format_double(m.ramp_volts_per_s) << "\n";
      if (m.region) {
        os << "region = " << format_double(m.region->x_lo) << ","
           << format_double(m.region->x_hi) << ","
           << format_double(m.region->z_lo) << ","
           << format_double(m.region->z_hi) << "\n";
      }
    }
    void operator()(const PureGauge&) const { os << "type = vacuum\n"; }
    void operator()(const Superposition&) const { os << "type = vacuum\n"; }
  };
  std::visit(FieldWriter{os, s}, s.field.variant());
  if (s.coverage != Coverage::none) {
    os << "coverage = " << to_string(s.coverage) << "\n";
  }

  os << "[screen]\n";
  os << "z = " << d(s.screen.z) << "\n";
  os << "half_extent = " << d(s.screen.half_extent) << "\n";
  os << "samples = " << s.screen.samples << "\n";

  os << "[model]\n";
  if (const auto* lw = std::get_if<LocalWavefront>(&s.model.v)) {
    os << "type = local\n";
    os << "local_variant = "
       << (lw->variant == LocalVariant::magnitude ? "magnitude" : "projected")
       << "\n";
  } else if (std::holds_alternative<TopologicalAB>(s.model.v)) {
    os << "type = topological\n";
  } else {
    os << "type = alternative\n";
  }
  for (std::size_t i = 0; i < s.slit_channel.size(); ++i) {
    os << "channel = " << i << ":" << s.slit_channel[i] << "\n";
  }
  for (std::size_t c = 0; c < s.channel_paths.size(); ++c) {
    os << "path = " << c << ":";
    for (std::size_t i = 0; i < s.channel_paths[c].size(); ++i) {
      os << (i ? "; " : " ") << d(s.channel_paths[c][i].x) << ","
         << d(s.channel_paths[c][i].z);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace abwave
