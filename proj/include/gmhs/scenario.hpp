// Scenario files: JSON on disk, named objects, morphisms, strata, extensions,
// roofs, parameters and certificates in memory.
//
// parse() checks the schema, shapes and name references; validate() runs the
// module validators; load() does both and throws on the first failure.
// save() writes sorted keys and canonical scalars, so output is byte-stable.

#pragma once

#include <gmhs/builders.hpp>
#include <gmhs/example33.hpp>

#include <json.hpp>

#include <fstream>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace gmhs {

using Json = nlohmann::json;

struct NamedMorphism {
  std::string source;
  std::string target;
  QMatrix matrix;
  LabelCorrespondence corr;
  friend bool operator==(const NamedMorphism&, const NamedMorphism&) = default;
};

struct NamedExtension {
  std::vector<std::string> objects;
  std::vector<std::string> maps;
  friend bool operator==(const NamedExtension&, const NamedExtension&) = default;
};

struct NamedRoof {
  std::string e;
  std::string e_prime;
  std::string middle;
  std::vector<std::string> up;
  std::vector<std::string> down;
  friend bool operator==(const NamedRoof&, const NamedRoof&) = default;
};

struct ScenarioFile {
  int version = 1;
  std::map<std::string, GMHSObject> objects;
  std::map<std::string, NamedMorphism> morphisms;
  std::map<std::string, StrataData> strata;
  std::map<std::string, NamedExtension> extensions;
  std::map<std::string, NamedRoof> roofs;
  std::map<std::string, std::map<std::string, Rat>> params;
  std::map<std::string, ObstructionCertificate> certificates;

  friend bool operator==(const ScenarioFile&, const ScenarioFile&) = default;

  [[nodiscard]] const GMHSObject& object(const std::string& name) const { return find(objects, "object", name); }

  [[nodiscard]] GMHSMorphism morphism(const std::string& name) const {
    const auto& m = find(morphisms, "morphism", name);
    return {object(m.source), object(m.target), m.matrix, m.corr};
  }

  [[nodiscard]] YonedaExt extension(const std::string& name) const {
    const auto& x = find(extensions, "extension", name);
    YonedaExt e;
    for (const auto& o : x.objects) e.objects.push_back(object(o));
    for (const auto& m : x.maps) e.maps.push_back(morphism(m));
    return e;
  }

  [[nodiscard]] Roof roof(const std::string& name) const {
    const auto& r = find(roofs, "roof", name);
    Roof out{extension(r.middle), {}, {}};
    for (const auto& m : r.up) out.up.push_back(morphism(m));
    for (const auto& m : r.down) out.down.push_back(morphism(m));
    return out;
  }

  [[nodiscard]] const StrataData& strata_data(const std::string& name) const { return find(strata, "strata", name); }

 private:
  template <class T>
  static const T& find(const std::map<std::string, T>& m, const char* kind, const std::string& name) {
    const auto it = m.find(name);
    if (it == m.end()) throw InputError(std::string("unknown ") + kind + " \"" + name + "\"");
    return it->second;
  }
};

// ---------------------------------------------------------------------------
// Writing.

namespace io {

inline Json to_json(const Rat& r) { return r.str(); }
inline Json to_json(const GaussRat& z) { return {{"re", z.re().str()}, {"im", z.im().str()}}; }

template <ExactField F>
Json to_json(const Vec<F>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

template <ExactField F>
Json to_json(const Matrix<F>& m) {
  Json data = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) data.push_back(to_json(m.row(r)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

template <ExactField F>
Json to_json(const Subspace<F>& s) {
  Json basis = Json::array();
  for (const auto& v : s.vectors()) basis.push_back(to_json(v));
  return {{"ambient_dim", s.ambient_dim()}, {"basis", basis}};
}

template <class Steps>
Json steps_json(const Steps& steps) {
  Json j = Json::object();
  for (const auto& [k, s] : steps) j[std::to_string(k)] = to_json(s);
  return j;
}

inline Json to_json(const SiteDescriptor& s) { return {{"z_labels", s.u_labels}, {"w_labels", s.d_labels}}; }

inline Json to_json(const LabelCorrespondence& c) {
  Json a = Json::array();
  for (const auto& p : c.pairings) a.push_back({{"x", p.x}, {"y", p.y}, {"case", to_string(p.kind)}});
  return a;
}

inline Json to_json(const GMHSObject& o) {
  Json z = Json::object(), w = Json::object();
  for (const auto& [l, m] : o.z_ops) z[l] = to_json(m);
  for (const auto& [l, m] : o.w_ops) w[l] = to_json(m);
  return {{"dim", o.dim()},
          {"base_weight", o.mhs.base_weight},
          {"site", to_json(o.site)},
          {"W", steps_json(o.mhs.W.steps)},
          {"F", steps_json(o.mhs.F.steps)},
          {"z_ops", z},
          {"w_ops", w}};
}

inline Json to_json(const NamedMorphism& m) {
  return {{"source", m.source}, {"target", m.target}, {"matrix", to_json(m.matrix)}, {"correspondence", to_json(m.corr)}};
}

inline Json to_json(const StrataData& s) {
  Json coh = Json::array(), gys = Json::array();
  for (const auto& [key, d] : s.cohomology_dims)
    coh.push_back({{"stratum", key.first}, {"degree", key.second}, {"dim", d}});
  for (const auto& [key, m] : s.gysin) {
    const auto& [k, l, n] = key;
    gys.push_back({{"source", k}, {"target", l}, {"degree", n}, {"matrix", to_json(m)}});
  }
  return {{"index_set", s.index_set}, {"cohomology", coh}, {"gysin", gys}};
}

inline Json to_json(const ObstructionCertificate& c) {
  Json steps = Json::array();
  for (const auto& st : c.steps)
    steps.push_back({{"equation", st.equation},
                     {"label", st.label},
                     {"instantiation", st.instantiation},
                     {"verified", st.verified}});
  return {{"c1", c.params.c1.str()},
          {"c2", c.params.c2.str()},
          {"steps", steps},
          {"candidates_refuted", c.candidates_refuted}};
}

inline Json to_json(const ScenarioFile& s) {
  Json j = {{"version", s.version}};
  auto section = [&](const char* key, const auto& m, auto&& conv) {
    Json o = Json::object();
    for (const auto& [name, v] : m) o[name] = conv(v);
    j[key] = o;
  };
  section("objects", s.objects, [](const GMHSObject& o) { return to_json(o); });
  section("morphisms", s.morphisms, [](const NamedMorphism& m) { return to_json(m); });
  section("strata", s.strata, [](const StrataData& d) { return to_json(d); });
  section("extensions", s.extensions, [](const NamedExtension& e) {
    return Json{{"objects", e.objects}, {"maps", e.maps}};
  });
  section("roofs", s.roofs, [](const NamedRoof& r) {
    return Json{{"e", r.e}, {"e_prime", r.e_prime}, {"middle", r.middle}, {"up", r.up}, {"down", r.down}};
  });
  section("params", s.params, [](const std::map<std::string, Rat>& p) {
    Json o = Json::object();
    for (const auto& [k, v] : p) o[k] = v.str();
    return o;
  });
  section("certificates", s.certificates, [](const ObstructionCertificate& c) { return to_json(c); });
  return j;
}

// ---------------------------------------------------------------------------
// Reading. Every error names the JSON path it arose at.

class Reader {
 public:
  Reader(const Json& j, std::string path) : j_(j), path_(std::move(path)) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError((path_.empty() ? std::string("<root>") : path_) + ": " + what);
  }

  [[nodiscard]] const Json& json() const { return j_; }
  [[nodiscard]] const std::string& path() const { return path_; }

  /// Requires an object whose keys all lie in `required` or `optional`.
  void fields(std::initializer_list<const char*> required, std::initializer_list<const char*> optional = {}) const {
    if (!j_.is_object()) fail("expected an object");
    for (const char* k : required)
      if (!j_.contains(k)) fail(std::string("missing key \"") + k + "\"");
    for (const auto& [k, v] : j_.items()) {
      bool known = false;
      for (const char* r : required) known = known || k == r;
      for (const char* o : optional) known = known || k == o;
      if (!known) fail("unexpected key \"" + k + "\"");
    }
  }

  [[nodiscard]] bool has(const char* key) const { return j_.contains(key); }
  [[nodiscard]] Reader at(const std::string& key) const { return {j_.at(key), path_ + "." + key}; }
  [[nodiscard]] Reader at(std::size_t i) const { return {j_.at(i), path_ + "[" + std::to_string(i) + "]"}; }

  [[nodiscard]] const Json& array() const {
    if (!j_.is_array()) fail("expected an array");
    return j_;
  }
  [[nodiscard]] std::size_t size() const { return array().size(); }

  [[nodiscard]] std::string string() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }
  [[nodiscard]] long integer() const {
    if (!j_.is_number_integer()) fail("expected an integer");
    return j_.get<long>();
  }
  [[nodiscard]] std::size_t count() const {
    const long v = integer();
    if (v < 0) fail("expected a non-negative integer");
    return static_cast<std::size_t>(v);
  }
  [[nodiscard]] bool boolean() const {
    if (!j_.is_boolean()) fail("expected a boolean");
    return j_.get<bool>();
  }

  template <class T>
  T wrap(auto&& fn) const {
    try {
      return fn();
    } catch (const InputError& e) {
      const std::string msg = e.what();
      if (msg.rfind(path_, 0) == 0) throw;
      fail(msg);
    }
  }

  [[nodiscard]] std::vector<std::string> strings() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i).string());
    return out;
  }

 private:
  const Json& j_;
  std::string path_;
};

inline void read(const Reader& r, Rat& out) {
  const std::string s = r.string();
  out = r.wrap<Rat>([&] { return Rat::parse(s); });
}

inline void read(const Reader& r, GaussRat& out) {
  r.fields({"re", "im"});
  Rat re, im;
  read(r.at("re"), re);
  read(r.at("im"), im);
  out = GaussRat(re, im);
}

template <ExactField F>
Vec<F> read_vec(const Reader& r, std::size_t len) {
  if (r.size() != len) r.fail("expected " + std::to_string(len) + " entries, got " + std::to_string(r.size()));
  Vec<F> v(len);
  for (std::size_t i = 0; i < len; ++i) read(r.at(i), v[i]);
  return v;
}

template <ExactField F>
Matrix<F> read_matrix(const Reader& r) {
  r.fields({"rows", "cols", "data"});
  const std::size_t rows = r.at("rows").count(), cols = r.at("cols").count();
  const Reader data = r.at("data");
  if (data.size() != rows) data.fail("expected " + std::to_string(rows) + " rows, got " + std::to_string(data.size()));
  Matrix<F> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Vec<F> row = read_vec<F>(data.at(i), cols);
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = row[j];
  }
  return m;
}

template <ExactField F>
Matrix<F> read_matrix(const Reader& r, std::size_t rows, std::size_t cols) {
  Matrix<F> m = read_matrix<F>(r);
  if (m.rows() != rows || m.cols() != cols)
    r.fail("expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix, got " + m.shape());
  return m;
}

/// Any independent spanning rows are accepted; the stored form is the RREF.
template <ExactField F>
Subspace<F> read_subspace(const Reader& r, std::size_t ambient) {
  r.fields({"ambient_dim", "basis"});
  if (r.at("ambient_dim").count() != ambient)
    r.at("ambient_dim").fail("expected ambient dimension " + std::to_string(ambient));
  const Reader basis = r.at("basis");
  std::vector<Vec<F>> rows;
  for (std::size_t i = 0; i < basis.size(); ++i) rows.push_back(read_vec<F>(basis.at(i), ambient));
  Subspace<F> s = Subspace<F>::span(rows, ambient);
  if (s.dim() != rows.size()) basis.fail("basis vectors are linearly dependent");
  return s;
}

inline int read_index(const Reader& r, const std::string& key) {
  const auto bad = [&] { r.fail("filtration index \"" + key + "\" is not a canonical integer"); };
  if (key.empty() || key == "-0" || key == "-") bad();
  std::size_t start = key[0] == '-' ? 1 : 0;
  if (key[start] == '0' && key.size() > start + 1) bad();
  for (std::size_t i = start; i < key.size(); ++i)
    if (key[i] < '0' || key[i] > '9') bad();
  if (key.size() > 9) bad();
  return std::stoi(key);
}

template <ExactField F>
std::map<int, Subspace<F>> read_steps(const Reader& r, std::size_t ambient) {
  if (!r.json().is_object()) r.fail("expected an object mapping indices to subspaces");
  std::map<int, Subspace<F>> out;
  for (const auto& [k, v] : r.json().items()) out.emplace(read_index(r, k), read_subspace<F>(r.at(k), ambient));
  return out;
}

inline SiteDescriptor read_site(const Reader& r) {
  r.fields({"z_labels", "w_labels"});
  SiteDescriptor s;
  for (const auto& l : r.at("z_labels").strings())
    if (!s.u_labels.insert(l).second) r.at("z_labels").fail("duplicate label \"" + l + "\"");
  for (const auto& l : r.at("w_labels").strings())
    if (!s.d_labels.insert(l).second) r.at("w_labels").fail("duplicate label \"" + l + "\"");
  return s;
}

inline LabelCorrespondence read_corr(const Reader& r) {
  LabelCorrespondence c;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Reader p = r.at(i);
    p.fields({"x", "y", "case"});
    const std::string k = p.at("case").string();
    PairCase kind{};
    if (k == "ZZ") kind = PairCase::ZZ;
    else if (k == "ZW") kind = PairCase::ZW;
    else if (k == "WZ") kind = PairCase::WZ;
    else if (k == "WW") kind = PairCase::WW;
    else p.at("case").fail("pairing case must be ZZ, ZW, WZ or WW");
    c.pairings.push_back({p.at("x").string(), p.at("y").string(), kind});
  }
  const LabelCorrespondence canonical = merge(c, {});
  if (canonical.pairings.size() != c.pairings.size()) r.fail("duplicate pairing");
  return canonical;
}

inline GMHSObject read_object(const Reader& r) {
  r.fields({"dim", "site"}, {"base_weight", "W", "F", "z_ops", "w_ops"});
  GMHSObject o;
  const std::size_t n = r.at("dim").count();
  o.site = read_site(r.at("site"));
  o.mhs.dim = n;
  o.mhs.base_weight = r.has("base_weight") ? static_cast<int>(r.at("base_weight").integer()) : 0;
  o.mhs.W = {n, r.has("W") ? read_steps<Rat>(r.at("W"), n) : std::map<int, QSubspace>{}};
  o.mhs.F = {n, r.has("F") ? read_steps<GaussRat>(r.at("F"), n) : std::map<int, CSubspace>{}};
  auto ops = [&](const char* key, const std::set<std::string>& labels, std::map<std::string, CMatrix>& dst) {
    if (!r.has(key)) return;
    const Reader m = r.at(key);
    if (!m.json().is_object()) m.fail("expected an object mapping labels to matrices");
    for (const auto& [l, v] : m.json().items()) {
      if (!labels.count(l)) m.fail("\"" + l + "\" is not a " + (key[0] == 'z' ? "z" : "w") + "-label of the site");
      dst.emplace(l, read_matrix<GaussRat>(m.at(l), n, n));
    }
  };
  ops("z_ops", o.site.u_labels, o.z_ops);
  ops("w_ops", o.site.d_labels, o.w_ops);
  return o;
}

inline StrataData read_strata(const Reader& r) {
  r.fields({"index_set"}, {"cohomology", "gysin"});
  StrataData s;
  s.index_set = r.at("index_set").strings();
  if (r.has("cohomology")) {
    const Reader c = r.at("cohomology");
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Reader e = c.at(i);
      e.fields({"stratum", "degree", "dim"});
      const auto key = std::make_pair(e.at("stratum").strings(), static_cast<int>(e.at("degree").integer()));
      if (!s.cohomology_dims.emplace(key, e.at("dim").count()).second) e.fail("duplicate cohomology entry");
    }
  }
  if (r.has("gysin")) {
    const Reader g = r.at("gysin");
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Reader e = g.at(i);
      e.fields({"source", "target", "degree", "matrix"});
      auto key = std::make_tuple(e.at("source").strings(), e.at("target").strings(),
                                 static_cast<int>(e.at("degree").integer()));
      if (!s.gysin.emplace(key, read_matrix<Rat>(e.at("matrix"))).second) e.fail("duplicate Gysin block");
    }
  }
  return s;
}

inline ObstructionCertificate read_certificate(const Reader& r) {
  r.fields({"c1", "c2", "steps", "candidates_refuted"});
  ObstructionCertificate c;
  read(r.at("c1"), c.params.c1);
  read(r.at("c2"), c.params.c2);
  c.candidates_refuted = r.at("candidates_refuted").count();
  const Reader steps = r.at("steps");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Reader st = steps.at(i);
    st.fields({"equation", "label", "instantiation", "verified"});
    c.steps.push_back({st.at("equation").string(), st.at("label").string(), st.at("instantiation").string(),
                       st.at("verified").boolean()});
  }
  return c;
}

template <class T>
void read_section(const Reader& root, const char* key, std::map<std::string, T>& dst, auto&& conv) {
  if (!root.has(key)) return;
  const Reader sec = root.at(key);
  if (!sec.json().is_object()) sec.fail("expected an object of named entries");
  for (const auto& [name, v] : sec.json().items()) dst.emplace(name, conv(sec.at(name)));
}

}  // namespace io

// ---------------------------------------------------------------------------
// Entry points.

/// Schema, shapes and cross-references; no mathematical validation.
inline ScenarioFile parse_scenario(const Json& j) {
  using namespace io;
  const Reader root(j, "");
  root.fields({"version"}, {"objects", "morphisms", "strata", "extensions", "roofs", "params", "certificates"});
  ScenarioFile s;
  s.version = static_cast<int>(root.at("version").integer());
  if (s.version != 1) root.at("version").fail("unsupported version " + std::to_string(s.version));

  read_section(root, "objects", s.objects, [](const Reader& r) { return read_object(r); });
  read_section(root, "morphisms", s.morphisms, [&](const Reader& r) {
    r.fields({"source", "target", "matrix"}, {"correspondence"});
    NamedMorphism m{r.at("source").string(), r.at("target").string(), {}, {}};
    const auto src = s.objects.find(m.source), tgt = s.objects.find(m.target);
    if (src == s.objects.end()) r.at("source").fail("unknown object \"" + m.source + "\"");
    if (tgt == s.objects.end()) r.at("target").fail("unknown object \"" + m.target + "\"");
    m.matrix = read_matrix<Rat>(r.at("matrix"), tgt->second.dim(), src->second.dim());
    if (r.has("correspondence")) m.corr = read_corr(r.at("correspondence"));
    return m;
  });
  read_section(root, "strata", s.strata, [](const Reader& r) { return read_strata(r); });
  read_section(root, "extensions", s.extensions, [&](const Reader& r) {
    r.fields({"objects", "maps"});
    NamedExtension e{r.at("objects").strings(), r.at("maps").strings()};
    if (e.objects.size() < 2 || e.maps.size() + 1 != e.objects.size())
      r.fail("need n+1 objects and n maps with n >= 1");
    for (std::size_t k = 0; k < e.objects.size(); ++k)
      if (!s.objects.count(e.objects[k])) r.at("objects").at(k).fail("unknown object \"" + e.objects[k] + "\"");
    for (std::size_t k = 0; k < e.maps.size(); ++k) {
      const auto it = s.morphisms.find(e.maps[k]);
      if (it == s.morphisms.end()) r.at("maps").at(k).fail("unknown morphism \"" + e.maps[k] + "\"");
      if (it->second.source != e.objects[k] || it->second.target != e.objects[k + 1])
        r.at("maps").at(k).fail("morphism \"" + e.maps[k] + "\" does not go from \"" + e.objects[k] + "\" to \"" +
                                e.objects[k + 1] + "\"");
    }
    return e;
  });
  read_section(root, "roofs", s.roofs, [&](const Reader& r) {
    r.fields({"e", "e_prime", "middle", "up", "down"});
    NamedRoof x{r.at("e").string(), r.at("e_prime").string(), r.at("middle").string(), r.at("up").strings(),
                r.at("down").strings()};
    for (const char* key : {"e", "e_prime", "middle"}) {
      const std::string name = r.at(key).string();
      if (!s.extensions.count(name)) r.at(key).fail("unknown extension \"" + name + "\"");
    }
    const auto& mid = s.extensions.at(x.middle).objects;
    auto ladder = [&](const char* key, const std::vector<std::string>& maps, const std::string& to) {
      const auto& dst = s.extensions.at(to).objects;
      if (maps.size() != mid.size() || dst.size() != mid.size())
        r.at(key).fail("expected one map per position of the middle extension");
      for (std::size_t k = 0; k < maps.size(); ++k) {
        const auto it = s.morphisms.find(maps[k]);
        if (it == s.morphisms.end()) r.at(key).at(k).fail("unknown morphism \"" + maps[k] + "\"");
        if (it->second.source != mid[k] || it->second.target != dst[k])
          r.at(key).at(k).fail("morphism \"" + maps[k] + "\" does not go from \"" + mid[k] + "\" to \"" + dst[k] + "\"");
      }
    };
    ladder("up", x.up, x.e);
    ladder("down", x.down, x.e_prime);
    return x;
  });
  read_section(root, "params", s.params, [](const Reader& r) {
    if (!r.json().is_object()) r.fail("expected an object of rationals");
    std::map<std::string, Rat> p;
    for (const auto& [k, v] : r.json().items()) read(r.at(k), p[k]);
    return p;
  });
  read_section(root, "certificates", s.certificates, [](const Reader& r) { return read_certificate(r); });
  return s;
}

inline Json parse_json_text(const std::string& text, const std::string& source = "<input>") {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ": " + e.what());
  }
}

inline ScenarioFile parse_scenario(const std::string& text, const std::string& source) {
  const Json j = parse_json_text(text, source);
  try {
    return parse_scenario(j);
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

/// Module validators for every entry, each check prefixed by the entry it concerns.
inline ValidationReport validate_scenario(const ScenarioFile& s) {
  ValidationReport rep;
  for (const auto& [name, o] : s.objects) rep.merge(check_gmhs(o), "object " + name);
  for (const auto& [name, m] : s.morphisms) rep.merge(detail::morphism_report(s.morphism(name)), "morphism " + name);
  for (const auto& [name, d] : s.strata) rep.merge(validate_complex(d), "strata " + name);
  for (const auto& [name, e] : s.extensions) rep.merge(check_exact(s.extension(name)), "extension " + name);
  for (const auto& [name, r] : s.roofs) {
    try {
      rep.merge(check_roof_report(s.extension(r.e), s.extension(r.e_prime), s.roof(name)), "roof " + name);
    } catch (const InputError& e) {
      rep.add("roof " + name + ": shape", false, e.what());
    }
  }
  for (const auto& [name, c] : s.certificates) rep.add("certificate " + name + ": verifies", check_certificate(c));
  return rep;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// parse + validate; throws InputError naming the first failing check.
inline ScenarioFile load_scenario(const std::string& path) {
  ScenarioFile s = parse_scenario(read_file(path), path);
  const ValidationReport rep = validate_scenario(s);
  if (!rep.ok()) {
    const Check c = rep.failures().front();
    throw InputError(path + ": validation failed: " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  }
  return s;
}

inline std::string dump_scenario(const ScenarioFile& s) { return io::to_json(s).dump(2) + "\n"; }

inline void save_scenario(const ScenarioFile& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << dump_scenario(s);
  if (!out.flush()) throw std::runtime_error(path + ": write failed");
}

// ---------------------------------------------------------------------------
// Assembling scenarios from in-memory values.

class ScenarioBuilder {
 public:
  ScenarioFile file;

  /// Registers `o`, reusing the name of an equal object already present.
  std::string object(const std::string& name, const GMHSObject& o) {
    for (const auto& [n, x] : file.objects)
      if (x == o) return n;
    if (file.objects.count(name)) throw InputError("object name \"" + name + "\" already used");
    file.objects.emplace(name, o);
    return name;
  }

  std::string morphism(const std::string& name, const GMHSMorphism& m) {
    const std::string src = object(name + ".source", m.source);
    const std::string tgt = object(name + ".target", m.target);
    if (file.morphisms.count(name)) throw InputError("morphism name \"" + name + "\" already used");
    file.morphisms.emplace(name, NamedMorphism{src, tgt, m.matrix, merge(m.corr, {})});
    return name;
  }

  std::string extension(const std::string& name, const YonedaExt& e) {
    NamedExtension x;
    for (std::size_t k = 0; k < e.objects.size(); ++k) x.objects.push_back(object(name + "." + std::to_string(k), e.objects[k]));
    for (std::size_t k = 0; k < e.maps.size(); ++k) x.maps.push_back(morphism(name + ".map" + std::to_string(k), e.maps[k]));
    if (file.extensions.count(name)) throw InputError("extension name \"" + name + "\" already used");
    file.extensions.emplace(name, std::move(x));
    return name;
  }

  std::string roof(const std::string& name, const std::string& e, const std::string& e_prime, const Roof& r) {
    NamedRoof x{e, e_prime, extension(name + ".middle", r.middle), {}, {}};
    for (std::size_t k = 0; k < r.up.size(); ++k) x.up.push_back(morphism(name + ".up" + std::to_string(k), r.up[k]));
    for (std::size_t k = 0; k < r.down.size(); ++k)
      x.down.push_back(morphism(name + ".down" + std::to_string(k), r.down[k]));
    file.roofs.emplace(name, std::move(x));
    return name;
  }
};

/// E and E' with objects S, T, V, Q_M and maps i, j, k.
inline ScenarioFile example33_scenario(const Example33Params& p) {
  ScenarioBuilder b;
  const YonedaExt e = build_example33(p);
  const char* names[] = {"S", "T", "V", "Q_M"};
  for (std::size_t k = 0; k < 4; ++k) b.object(names[k], e.objects[k]);
  b.morphism("i", e.maps[0]);
  b.morphism("j", e.maps[1]);
  b.morphism("k", e.maps[2]);
  b.file.extensions["E"] = {{"S", "T", "V", "Q_M"}, {"i", "j", "k"}};
  const YonedaExt ep = build_example33_split();
  b.morphism("id_S", ep.maps[0]);
  b.morphism("zero_S_Q_M", ep.maps[1]);
  b.morphism("id_Q_M", ep.maps[2]);
  b.file.extensions["E_prime"] = {{"S", "S", "Q_M", "Q_M"}, {"id_S", "zero_S_Q_M", "id_Q_M"}};
  b.file.params["example33"] = {{"c1", p.c1}, {"c2", p.c2}};
  return b.file;
}

}  // namespace gmhs
