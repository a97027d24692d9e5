#include "superrad/cli/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <fmt/format.h>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "superrad/errors.hpp"

namespace superrad::cli {

namespace pt = boost::property_tree;

namespace {

template <class E>
struct Named {
  const char* name;
  E value;
};

constexpr Named<BoundaryMode> kBoundary[] = {{"transparent", BoundaryMode::transparent},
                                             {"dirichlet", BoundaryMode::dirichlet},
                                             {"reference", BoundaryMode::reference}};
constexpr Named<BoundaryClosure> kClosure[] = {{"one_way", BoundaryClosure::one_way},
                                               {"klein_gordon", BoundaryClosure::klein_gordon}};
constexpr Named<Splitting> kSplitting[] = {{"auto", Splitting::automatic},
                                           {"always", Splitting::always},
                                           {"never", Splitting::never}};
constexpr Named<Execution> kExecution[] = {{"parallel", Execution::parallel},
                                           {"serial", Execution::serial}};
constexpr Named<DataKind> kDataKind[] = {{"wave_packet", DataKind::wave_packet},
                                         {"flare", DataKind::flare},
                                         {"oscillating_gaussian", DataKind::oscillating_gaussian}};
constexpr Named<PhaseConvention> kPhase[] = {{"scaled", PhaseConvention::scaled},
                                             {"unscaled", PhaseConvention::unscaled}};
constexpr Named<GainNormalization> kNormalization[] = {{"auto", GainNormalization::automatic},
                                                       {"zone", GainNormalization::zone},
                                                       {"total", GainNormalization::total}};
constexpr Named<HeadlineGain> kHeadline[] = {{"auto", HeadlineGain::automatic},
                                             {"flux", HeadlineGain::flux},
                                             {"zone", HeadlineGain::zone}};
constexpr Named<SweepAxis> kAxis[] = {{"omega", SweepAxis::omega}, {"L", SweepAxis::width},
                                      {"m", SweepAxis::mass},      {"q", SweepAxis::charge},
                                      {"probe", SweepAxis::probe}, {"boundary", SweepAxis::boundary}};
constexpr Named<Provenance> kModel[] = {{"toy", Provenance::toy},
                                        {"uniform", Provenance::uniform},
                                        {"reissner_nordstrom", Provenance::reissner_nordstrom}};

template <class E, std::size_t N>
E parse_enum(const std::string& field, const std::string& text, const Named<E> (&table)[N]) {
  for (const auto& entry : table) {
    if (text == entry.name) {
      return entry.value;
    }
  }
  std::string choices;
  for (const auto& entry : table) {
    choices += choices.empty() ? "" : " | ";
    choices += entry.name;
  }
  throw ValidationError(field, "unknown value '" + text + "' (expected " + choices + ")");
}

template <class E, std::size_t N>
const char* name_of(E value, const Named<E> (&table)[N]) {
  for (const auto& entry : table) {
    if (entry.value == value) {
      return entry.name;
    }
  }
  return "?";
}

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s = {
      {"run", {"name"}},
      {"model", {"kind"}},
      {"toy", {"alpha", "beta", "width"}},
      {"uniform", {"V", "P"}},
      {"black_hole", {"mass", "charge", "tortoise_offset"}},
      {"field", {"charge", "mass", "angular_momentum"}},
      {"grid", {"x_min", "x_max", "h", "dt", "final_time"}},
      {"solver", {"boundary", "closure", "splitting", "execution"}},
      {"data", {"kind", "omega", "center", "width", "phase", "strict_support"}},
      {"diagnostics", {"probes", "zone_start", "normalization", "gain"}},
      {"output", {"snapshot_stride", "x_stride", "snapshots", "matrix"}},
      {"sweep", {"axis", "values"}},
  };
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& field, const std::string& raw) {
  const std::string text = trim(raw);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ValidationError(field, "expected a number, got '" + raw + "'");
  }
  return value;
}

long long to_integer(const std::string& field, const std::string& raw) {
  const std::string text = trim(raw);
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ValidationError(field, "expected an integer, got '" + raw + "'");
  }
  return value;
}

bool to_bool(const std::string& field, const std::string& raw) {
  const std::string text = trim(raw);
  if (text == "true" || text == "1" || text == "yes") {
    return true;
  }
  if (text == "false" || text == "0" || text == "no") {
    return false;
  }
  throw ValidationError(field, "expected true or false, got '" + raw + "'");
}

std::vector<std::string> split_words(const std::string& raw) {
  std::istringstream in(raw);
  std::vector<std::string> words;
  std::string w;
  while (in >> w) {
    words.push_back(w);
  }
  return words;
}

std::string num(double x) { return fmt::format("{:.17g}", x); }

// Thin reader over the parsed tree that reports fields as "section.key".
class Reader {
 public:
  explicit Reader(const pt::ptree& tree) : tree_(tree) {}

  bool has_section(const std::string& s) const { return tree_.find(s) != tree_.not_found(); }

  std::optional<std::string> raw(const std::string& section, const std::string& key) const {
    auto it = tree_.find(section);
    if (it == tree_.not_found()) {
      return std::nullopt;
    }
    auto v = it->second.get_optional<std::string>(pt::ptree::path_type(key, '\0'));
    if (!v) {
      return std::nullopt;
    }
    return trim(*v);
  }

  std::string required(const std::string& section, const std::string& key) const {
    auto v = raw(section, key);
    if (!v) {
      throw ValidationError(section + "." + key, "required key is missing");
    }
    return *v;
  }

  double number(const std::string& section, const std::string& key, double fallback) const {
    auto v = raw(section, key);
    return v ? to_double(section + "." + key, *v) : fallback;
  }

  double required_number(const std::string& section, const std::string& key) const {
    return to_double(section + "." + key, required(section, key));
  }

  bool flag(const std::string& section, const std::string& key, bool fallback) const {
    auto v = raw(section, key);
    return v ? to_bool(section + "." + key, *v) : fallback;
  }

  template <class E, std::size_t N>
  E choice(const std::string& section, const std::string& key, E fallback,
           const Named<E> (&table)[N]) const {
    auto v = raw(section, key);
    return v ? parse_enum(section + "." + key, *v, table) : fallback;
  }

 private:
  const pt::ptree& tree_;
};

void check_schema(const pt::ptree& tree) {
  for (const auto& [section, body] : tree) {
    auto it = schema().find(section);
    if (it == schema().end()) {
      if (body.empty()) {
        throw ValidationError(section, "key outside of any section");
      }
      throw ValidationError(section, "unknown section");
    }
    for (const auto& [key, value] : body) {
      if (it->second.count(key) == 0) {
        throw ValidationError(section + "." + key, "unknown key");
      }
    }
  }
}

PotentialModel read_model(const Reader& r) {
  const Provenance kind = parse_enum("model.kind", r.required("model", "kind"), kModel);
  const char* own = kind == Provenance::toy ? "toy" : kind == Provenance::uniform ? "uniform" : nullptr;
  for (const char* section : {"toy", "uniform", "black_hole", "field"}) {
    const bool rn_section = std::string(section) == "black_hole" || std::string(section) == "field";
    const bool allowed = own ? std::string(section) == own : rn_section;
    if (!allowed && r.has_section(section)) {
      throw ValidationError(section, std::string("section not valid for model.kind = ") +
                                         name_of(kind, kModel));
    }
  }
  switch (kind) {
    case Provenance::toy: {
      ToyParams p;
      p.alpha = r.number("toy", "alpha", p.alpha);
      p.beta = r.number("toy", "beta", p.beta);
      p.width = r.number("toy", "width", p.width);
      validate(p);
      return ToyModel{p};
    }
    case Provenance::uniform:
      return UniformModel{r.number("uniform", "V", 0.0), r.number("uniform", "P", 0.0)};
    case Provenance::reissner_nordstrom:
      break;
  }
  const BlackHole bh(r.required_number("black_hole", "mass"), r.required_number("black_hole", "charge"),
                     r.number("black_hole", "tortoise_offset", 0.0));
  FieldParams f;
  f.charge = r.number("field", "charge", 0.0);
  f.mass = r.number("field", "mass", 0.0);
  if (auto l = r.raw("field", "angular_momentum")) {
    f.angular_momentum = static_cast<int>(to_integer("field.angular_momentum", *l));
  }
  validate(f);
  return RnModel{bh, f};
}

}  // namespace

std::string to_string(SweepAxis axis) { return name_of(axis, kAxis); }
std::string to_string(BoundaryMode mode) { return name_of(mode, kBoundary); }

RunConfig parse_config(std::istream& in) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ValidationError("config", "line " + std::to_string(e.line()) + ": " + e.message());
  }
  check_schema(tree);
  const Reader r(tree);

  RunConfig c;
  if (auto name = r.raw("run", "name")) {
    c.name = *name;
  }
  SimConfig& s = c.sim;
  s.model = read_model(r);
  s.grid = Grid::make(r.required_number("grid", "x_min"), r.required_number("grid", "x_max"),
                      r.required_number("grid", "h"), r.required_number("grid", "dt"));
  s.final_time = r.required_number("grid", "final_time");

  s.boundary = r.choice("solver", "boundary", s.boundary, kBoundary);
  s.closure = r.choice("solver", "closure", s.closure, kClosure);
  s.splitting = r.choice("solver", "splitting", s.splitting, kSplitting);
  s.execution = r.choice("solver", "execution", s.execution, kExecution);

  DataSpec& d = s.data;
  d.kind = r.choice("data", "kind", d.kind, kDataKind);
  d.omega = r.number("data", "omega", d.omega);
  d.center = r.number("data", "center", d.center);
  d.width = r.number("data", "width", d.width);
  d.phase = r.choice("data", "phase", d.phase, kPhase);
  d.strict_support = r.flag("data", "strict_support", d.strict_support);

  if (auto probes = r.raw("diagnostics", "probes")) {
    for (const auto& w : split_words(*probes)) {
      s.probes.push_back(to_double("diagnostics.probes", w));
    }
  }
  s.zone_start = r.number("diagnostics", "zone_start", s.zone_start);
  s.normalization = r.choice("diagnostics", "normalization", s.normalization, kNormalization);
  c.headline = r.choice("diagnostics", "gain", c.headline, kHeadline);

  if (auto stride = r.raw("output", "snapshot_stride")) {
    const long long v = to_integer("output.snapshot_stride", *stride);
    if (v < 0) {
      throw ValidationError("output.snapshot_stride", "must be non-negative");
    }
    s.snapshot_stride = static_cast<std::size_t>(v);
  }
  if (auto stride = r.raw("output", "x_stride")) {
    const long long v = to_integer("output.x_stride", *stride);
    if (v < 1) {
      throw ValidationError("output.x_stride", "must be at least 1");
    }
    c.output.x_stride = static_cast<std::size_t>(v);
  }
  c.output.snapshots = r.flag("output", "snapshots", c.output.snapshots);
  c.output.matrix = r.flag("output", "matrix", c.output.matrix);

  if (r.has_section("sweep")) {
    SweepSpec sw;
    sw.axis = parse_enum("sweep.axis", r.required("sweep", "axis"), kAxis);
    sw.values = split_words(r.required("sweep", "values"));
    if (sw.values.empty()) {
      throw ValidationError("sweep.values", "must list at least one value");
    }
    // Every value must produce a valid config.
    for (const auto& v : sw.values) {
      validate(apply_sweep_value(c, sw.axis, v).sim);
    }
    c.sweep = std::move(sw);
  } else {
    validate(s);
  }
  if (c.headline == HeadlineGain::flux && s.probes.empty()) {
    throw ValidationError("diagnostics.gain", "flux gain needs at least one probe");
  }
  return c;
}

RunConfig parse_config_text(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("config", "cannot open " + path.string());
  }
  return parse_config(in);
}

std::string serialize(const RunConfig& c) {
  const SimConfig& s = c.sim;
  std::string out;
  auto section = [&](const char* name) { out += fmt::format("{}[{}]\n", out.empty() ? "" : "\n", name); };
  auto kv = [&](const char* key, const std::string& value) { out += fmt::format("{} = {}\n", key, value); };

  section("run");
  kv("name", c.name);

  section("model");
  kv("kind", name_of(provenance(s.model), kModel));
  if (const auto* toy = std::get_if<ToyModel>(&s.model)) {
    section("toy");
    kv("alpha", num(toy->params.alpha));
    kv("beta", num(toy->params.beta));
    kv("width", num(toy->params.width));
  } else if (const auto* uni = std::get_if<UniformModel>(&s.model)) {
    section("uniform");
    kv("V", num(uni->V));
    kv("P", num(uni->P));
  } else if (const auto* rn = std::get_if<RnModel>(&s.model)) {
    section("black_hole");
    kv("mass", num(rn->black_hole.mass()));
    kv("charge", num(rn->black_hole.charge()));
    kv("tortoise_offset", num(rn->black_hole.tortoise_offset()));
    section("field");
    kv("charge", num(rn->field.charge));
    kv("mass", num(rn->field.mass));
    kv("angular_momentum", std::to_string(rn->field.angular_momentum));
  }

  section("grid");
  kv("x_min", num(s.grid.x_min));
  kv("x_max", num(s.grid.x_max));
  kv("h", num(s.grid.h));
  kv("dt", num(s.grid.dt));
  kv("final_time", num(s.final_time));

  section("solver");
  kv("boundary", name_of(s.boundary, kBoundary));
  kv("closure", name_of(s.closure, kClosure));
  kv("splitting", name_of(s.splitting, kSplitting));
  kv("execution", name_of(s.execution, kExecution));

  section("data");
  kv("kind", name_of(s.data.kind, kDataKind));
  kv("omega", num(s.data.omega));
  kv("center", num(s.data.center));
  kv("width", num(s.data.width));
  kv("phase", name_of(s.data.phase, kPhase));
  kv("strict_support", s.data.strict_support ? "true" : "false");

  section("diagnostics");
  std::string probes;
  for (double p : s.probes) {
    probes += (probes.empty() ? "" : " ") + num(p);
  }
  kv("probes", probes);
  kv("zone_start", num(s.zone_start));
  kv("normalization", name_of(s.normalization, kNormalization));
  kv("gain", name_of(c.headline, kHeadline));

  section("output");
  kv("snapshot_stride", std::to_string(s.snapshot_stride));
  kv("x_stride", std::to_string(c.output.x_stride));
  kv("snapshots", c.output.snapshots ? "true" : "false");
  kv("matrix", c.output.matrix ? "true" : "false");

  if (c.sweep) {
    section("sweep");
    kv("axis", name_of(c.sweep->axis, kAxis));
    std::string values;
    for (const auto& v : c.sweep->values) {
      values += (values.empty() ? "" : " ") + v;
    }
    kv("values", values);
  }
  return out;
}

RunConfig apply_sweep_value(const RunConfig& base, SweepAxis axis, const std::string& value) {
  RunConfig c = base;
  c.sweep.reset();
  SimConfig& s = c.sim;
  switch (axis) {
    case SweepAxis::omega:
      s.data.omega = to_double("sweep.values", value);
      break;
    case SweepAxis::width: {
      auto* toy = std::get_if<ToyModel>(&s.model);
      if (toy == nullptr) {
        throw ValidationError("sweep.axis", "L sweeps need model.kind = toy");
      }
      toy->params.width = to_double("sweep.values", value);
      validate(toy->params);
      break;
    }
    case SweepAxis::mass:
    case SweepAxis::charge: {
      auto* rn = std::get_if<RnModel>(&s.model);
      if (rn == nullptr) {
        throw ValidationError("sweep.axis", "m and q sweeps need model.kind = reissner_nordstrom");
      }
      (axis == SweepAxis::mass ? rn->field.mass : rn->field.charge) = to_double("sweep.values", value);
      validate(rn->field);
      break;
    }
    case SweepAxis::probe:
      s.probes = {to_double("sweep.values", value)};
      break;
    case SweepAxis::boundary:
      s.boundary = parse_enum("sweep.values", value, kBoundary);
      break;
  }
  return c;
}

}  // namespace superrad::cli
