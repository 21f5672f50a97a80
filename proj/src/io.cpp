#include "pmclp/io.hpp"

#include <cmath>
#include <fstream>
#include <iterator>
#include <map>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "pmclp/reward.hpp"

namespace pmclp {
namespace {

using nlohmann::json;

// Walks the text for the parser while counting newlines consumed so far.
class LineIter {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  LineIter() = default;
  LineIter(const char* p, std::shared_ptr<std::size_t> lines)
      : p_(p), lines_(std::move(lines)) {}

  reference operator*() const { return *p_; }
  LineIter& operator++() {
    if (*p_ == '\n') ++*lines_;
    ++p_;
    return *this;
  }
  LineIter operator++(int) {
    LineIter old = *this;
    ++*this;
    return old;
  }
  bool operator==(const LineIter& o) const { return p_ == o.p_; }

 private:
  const char* p_ = nullptr;
  std::shared_ptr<std::size_t> lines_;
};

// Builds the DOM and remembers the line on which every value starts.
class LocatingSax {
 public:
  LocatingSax(json& root, std::shared_ptr<std::size_t> lines)
      : dom_(root, true), lines_(std::move(lines)) {}

  std::map<std::string, std::size_t> where;

  bool null() { return scalar([&] { return dom_.null(); }); }
  bool boolean(bool v) { return scalar([&] { return dom_.boolean(v); }); }
  bool number_integer(json::number_integer_t v) {
    return scalar([&] { return dom_.number_integer(v); });
  }
  bool number_unsigned(json::number_unsigned_t v) {
    return scalar([&] { return dom_.number_unsigned(v); });
  }
  bool number_float(json::number_float_t v, const std::string& s) {
    return scalar([&] { return dom_.number_float(v, s); });
  }
  bool string(std::string& v) { return scalar([&] { return dom_.string(v); }); }
  bool binary(json::binary_t& v) { return scalar([&] { return dom_.binary(v); }); }

  bool start_object(std::size_t n) {
    mark();
    frames_.push_back({false, {}, 0});
    return dom_.start_object(n);
  }
  bool key(std::string& k) {
    frames_.back().key = k;
    return dom_.key(k);
  }
  bool end_object() {
    frames_.pop_back();
    advance();
    return dom_.end_object();
  }
  bool start_array(std::size_t n) {
    mark();
    frames_.push_back({true, {}, 0});
    return dom_.start_array(n);
  }
  bool end_array() {
    frames_.pop_back();
    advance();
    return dom_.end_array();
  }
  bool parse_error(std::size_t, const std::string&,
                   const nlohmann::detail::exception& ex) {
    const auto* pe = dynamic_cast<const json::parse_error*>(&ex);
    std::string msg = ex.what();
    // Strip the library prefix, keep its own position text.
    if (const auto pos = msg.find("] "); pos != std::string::npos)
      msg = msg.substr(pos + 2);
    if (pe != nullptr && msg.rfind("parse error", 0) != 0) msg = "parse error: " + msg;
    throw IoError("line " + std::to_string(*lines_ + 1) + ": " + msg);
  }

 private:
  struct Frame {
    bool array;
    std::string key;
    std::size_t index;
  };

  std::string path() const {
    std::string out;
    for (const Frame& f : frames_) {
      if (f.array) {
        out += "[" + std::to_string(f.index) + "]";
      } else {
        if (!out.empty()) out += ".";
        out += f.key;
      }
    }
    return out;
  }
  void mark() { where.emplace(path(), *lines_ + 1); }
  void advance() {
    if (!frames_.empty() && frames_.back().array) ++frames_.back().index;
  }
  template <class F>
  bool scalar(F f) {
    mark();
    advance();
    return f();
  }

  nlohmann::detail::json_sax_dom_parser<json> dom_;
  std::shared_ptr<std::size_t> lines_;
  std::vector<Frame> frames_;
};

struct Located {
  json doc;
  std::map<std::string, std::size_t> where;

  [[noreturn]] void fail(const std::string& field, const std::string& what) const {
    // Report the nearest enclosing value that has a known line.
    std::string probe = field;
    std::size_t line = 1;
    while (true) {
      if (auto it = where.find(probe); it != where.end()) {
        line = it->second;
        break;
      }
      const auto cut = probe.find_last_of(".[");
      if (cut == std::string::npos) {
        if (auto it = where.find(""); it != where.end()) line = it->second;
        break;
      }
      probe = probe.substr(0, cut);
    }
    throw IoError("line " + std::to_string(line) + ": field '" + field + "': " + what);
  }

  const json& member(const json& obj, const std::string& parent,
                     const std::string& name) const {
    const std::string field = parent.empty() ? name : parent + "." + name;
    if (!obj.is_object()) fail(parent, "expected an object");
    auto it = obj.find(name);
    if (it == obj.end()) fail(field, "missing");
    return *it;
  }

  double number(const json& obj, const std::string& parent,
                const std::string& name) const {
    const json& v = member(obj, parent, name);
    const std::string field = parent.empty() ? name : parent + "." + name;
    if (!v.is_number()) fail(field, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) fail(field, "expected a finite number");
    return d;
  }

  std::vector<double> numbers(const json& arr, const std::string& field) const {
    if (!arr.is_array()) fail(field, "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (!arr[i].is_number())
        fail(field + "[" + std::to_string(i) + "]", "expected a number");
      out.push_back(arr[i].get<double>());
    }
    return out;
  }

  QosSet qos_set(const json& arr, const std::string& field) const {
    try {
      return QosSet(numbers(arr, field));
    } catch (const ModelError& e) {
      fail(field, e.what());
    }
  }
};

Located locate(std::string_view text) {
  Located out;
  auto lines = std::make_shared<std::size_t>(0);
  LocatingSax sax(out.doc, lines);
  const char* begin = text.data();
  json::sax_parse(LineIter(begin, lines), LineIter(begin + text.size(), lines), &sax);
  out.where = std::move(sax.where);
  return out;
}

json placement_json(const Placement& pl) {
  return {{"x", pl.x}, {"y", pl.y}, {"z", pl.z}};
}

}  // namespace

std::string serialize_instance(const Instance& inst) {
  json j;
  j["dimension"] = inst.dimension == Dimension::kOneD ? "1d" : "2d";
  j["base_sz"] = {{"w", inst.base.w0}, {"l", inst.base.l0}};
  j["p"] = inst.p;
  j["eta"] = "linear";
  if (inst.shared_qos()) {
    const QosSet& q = std::get<QosSet>(inst.qos);
    j["qos"] = {{"shared", std::vector<double>(q.factors().begin(), q.factors().end())}};
  } else {
    json per = json::array();
    for (const QosSet& q : std::get<std::vector<QosSet>>(inst.qos))
      per.push_back(std::vector<double>(q.factors().begin(), q.factors().end()));
    j["qos"] = {{"per_sz", per}};
  }
  json dzs = json::array();
  for (const DemandZone& d : inst.dzs)
    dzs.push_back({{"x", d.rect.x}, {"y", d.rect.y}, {"w", d.rect.w},
                   {"l", d.rect.l}, {"v", d.v}});
  j["dzs"] = dzs;
  return j.dump(2) + "\n";
}

Instance parse_instance(std::string_view text) {
  const Located in = locate(text);
  const json& doc = in.doc;
  if (!doc.is_object()) in.fail("", "expected an instance object");

  Instance inst;
  const json& dim = in.member(doc, "", "dimension");
  if (dim == "2d") inst.dimension = Dimension::kTwoD;
  else if (dim == "1d") inst.dimension = Dimension::kOneD;
  else in.fail("dimension", "expected \"2d\" or \"1d\"");

  const json& base = in.member(doc, "", "base_sz");
  inst.base = {in.number(base, "base_sz", "w"), in.number(base, "base_sz", "l")};

  const json& p = in.member(doc, "", "p");
  if (!p.is_number_integer() || p.get<long long>() < 1)
    in.fail("p", "expected a positive integer");
  inst.p = p.get<int>();

  if (auto it = doc.find("eta"); it != doc.end() && *it != "linear")
    in.fail("eta", "only \"linear\" is supported");

  const json& qos = in.member(doc, "", "qos");
  if (!qos.is_object()) in.fail("qos", "expected an object");
  if (qos.contains("shared")) {
    inst.qos = in.qos_set(qos["shared"], "qos.shared");
  } else if (qos.contains("per_sz")) {
    const json& per = qos["per_sz"];
    if (!per.is_array()) in.fail("qos.per_sz", "expected an array of arrays");
    std::vector<QosSet> sets;
    for (std::size_t i = 0; i < per.size(); ++i)
      sets.push_back(in.qos_set(per[i], "qos.per_sz[" + std::to_string(i) + "]"));
    inst.qos = sets;
  } else {
    in.fail("qos", "expected \"shared\" or \"per_sz\"");
  }

  const json& dzs = in.member(doc, "", "dzs");
  if (!dzs.is_array()) in.fail("dzs", "expected an array");
  for (std::size_t i = 0; i < dzs.size(); ++i) {
    const std::string f = "dzs[" + std::to_string(i) + "]";
    const json& d = dzs[i];
    inst.dzs.push_back({{in.number(d, f, "x"), in.number(d, f, "y"),
                         in.number(d, f, "w"), in.number(d, f, "l")},
                        in.number(d, f, "v")});
  }

  try {
    inst.validate();
  } catch (const ModelError& e) {
    throw IoError(std::string("invalid instance: ") + e.what());
  }
  return inst;
}

std::string serialize_solution(const SolveResult& r) {
  json j;
  j["reward"] = r.solution.reward;
  j["optimal"] = r.optimal;
  json pls = json::array();
  for (const Placement& pl : r.solution.placements) pls.push_back(placement_json(pl));
  j["placements"] = pls;
  j["stats"] = {{"nodes", r.stats.nodes_explored},
                {"time_s", r.stats.wall_time_s},
                {"t1_s", r.stats.optimal_found_time_s}};
  return j.dump(2) + "\n";
}

SolveResult parse_solution(std::string_view text) {
  const Located in = locate(text);
  const json& doc = in.doc;
  if (!doc.is_object()) in.fail("", "expected a solution object");
  SolveResult r;
  r.solution.reward = in.number(doc, "", "reward");
  const json& opt = in.member(doc, "", "optimal");
  if (!opt.is_boolean()) in.fail("optimal", "expected true or false");
  r.optimal = opt.get<bool>();
  const json& pls = in.member(doc, "", "placements");
  if (!pls.is_array()) in.fail("placements", "expected an array");
  for (std::size_t i = 0; i < pls.size(); ++i) {
    const std::string f = "placements[" + std::to_string(i) + "]";
    r.solution.placements.push_back({in.number(pls[i], f, "x"),
                                     in.number(pls[i], f, "y"),
                                     in.number(pls[i], f, "z")});
  }
  if (auto it = doc.find("stats"); it != doc.end()) {
    const json& s = *it;
    const json& nodes = in.member(s, "stats", "nodes");
    if (!nodes.is_number_unsigned()) in.fail("stats.nodes", "expected a count");
    r.stats.nodes_explored = nodes.get<std::uint64_t>();
    r.stats.wall_time_s = in.number(s, "stats", "time_s");
    r.stats.optimal_found_time_s = in.number(s, "stats", "t1_s");
  }
  return r;
}

void validate_solution(const Instance& inst, const Solution& sol, double tol) {
  if (static_cast<int>(sol.placements.size()) != inst.p)
    throw IoError("solution has " + std::to_string(sol.placements.size()) +
                  " placements, instance has p = " + std::to_string(inst.p));
  for (int j = 0; j < inst.p; ++j) {
    const Placement& pl = sol.placements[j];
    if (!inst.qos_for(j).contains(pl.z))
      throw IoError("placements[" + std::to_string(j) + "].z is not an allowed scale");
    if (inst.dimension == Dimension::kOneD && pl.y != 0.0)
      throw IoError("placements[" + std::to_string(j) + "].y must be 0 in 1D");
  }
  const double r = covered_reward(inst.dzs, sol.placements, Coverage::of(inst));
  if (std::abs(r - sol.reward) > tol * std::max(1.0, std::abs(r)))
    throw IoError("stored reward " + std::to_string(sol.reward) +
                  " does not match recomputed " + std::to_string(r));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
}

}  // namespace pmclp
