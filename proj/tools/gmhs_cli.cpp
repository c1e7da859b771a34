// gmhs: validators, spectral-sequence pages, Ext/Hom computations and the
// two-parameter extension classifier over scenario files.
//
// Exit codes: 0 pass, 1 fail, 2 unknown, 3 input error.

#include <gmhs/scenario.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

using namespace gmhs;

constexpr int kExitPass = 0, kExitFail = 1, kExitUnknown = 2, kExitInput = 3;

struct Report {
  std::string command;
  std::vector<Check> checks;
  std::vector<std::string> lines;  // text-mode summary, mirrors the payload
  Json payload = Json::object();

  void check(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok ? Outcome::pass : Outcome::fail, std::move(detail)});
  }
  void add(const ValidationReport& r) { checks.insert(checks.end(), r.checks().begin(), r.checks().end()); }

  [[nodiscard]] Outcome outcome() const {
    Outcome o = Outcome::pass;
    for (const auto& c : checks) {
      if (c.outcome == Outcome::fail) return Outcome::fail;
      if (c.outcome == Outcome::unknown) o = Outcome::unknown;
    }
    return o;
  }

  [[nodiscard]] int exit_code() const {
    switch (outcome()) {
      case Outcome::pass: return kExitPass;
      case Outcome::fail: return kExitFail;
      case Outcome::unknown: return kExitUnknown;
    }
    return kExitFail;
  }

  [[nodiscard]] std::string render(bool json) const {
    if (json) {
      Json cs = Json::array();
      for (const auto& c : checks) cs.push_back({{"name", c.name}, {"outcome", to_string(c.outcome)}, {"detail", c.detail}});
      return Json{{"command", command}, {"checks", cs}, {"outcome", to_string(outcome())}, {"payload", payload}}.dump(2) +
             "\n";
    }
    std::ostringstream out;
    out << command << "\n";
    std::size_t failed = 0;
    for (const auto& c : checks) {
      if (c.outcome != Outcome::pass) ++failed;
      std::string tag = to_string(c.outcome);
      tag.resize(9, ' ');
      out << "  " << tag << c.name << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    }
    for (const auto& l : lines) out << l << "\n";
    out << "result: " << to_string(outcome()) << " (" << checks.size() << " checks, " << failed << " not passed)\n";
    return out.str();
  }
};

Rat parse_rat(const std::string& s, const char* flag) {
  try {
    return Rat::parse(s);
  } catch (const InputError&) {
    throw InputError(std::string(flag) + ": \"" + s + "\" is not a canonical rational (a or a/b in lowest terms)");
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text) || !out.flush()) throw InputError(path + ": cannot write");
}

Report cmd_validate(const std::string& path, const std::string& object) {
  const ScenarioFile s = parse_scenario(read_file(path), path);
  Report r;
  if (!object.empty()) {
    r.add([&] {
      ValidationReport v;
      v.merge(check_gmhs(s.object(object)), "object " + object);
      return v;
    }());
  } else {
    r.add(validate_scenario(s));
  }
  r.payload = {{"scenario", path}, {"checks", r.checks.size()}};
  return r;
}

Report cmd_ss_e2(const std::string& path, const std::string& strata, int p, int q) {
  const ScenarioFile s = parse_scenario(read_file(path), path);
  const StrataData& d = s.strata_data(strata);
  Report r;
  const ValidationReport complex = validate_complex(d);
  r.add(complex);
  if (!complex.ok()) return r;
  const E2Term e2 = compute_E2(d, p, q);
  const std::size_t e1 = e1_term(d, p, q).dim();
  Json basis = Json::array();
  for (const auto& v : e2.basis()) basis.push_back(io::to_json(v));
  r.payload = {{"strata", strata},   {"p", p},         {"q", q},
               {"e1_dim", e1},       {"e2_dim", e2.dim()},
               {"kernel", io::to_json(e2.kernel)}, {"image", io::to_json(e2.image)}, {"basis", basis}};
  r.lines.push_back("dim E1^{" + std::to_string(p) + "," + std::to_string(q) + "} = " + std::to_string(e1));
  r.lines.push_back("dim E2^{" + std::to_string(p) + "," + std::to_string(q) + "} = " + std::to_string(e2.dim()));
  r.lines.push_back("ker d1 = " + format(e2.kernel.basis()));
  r.lines.push_back("im d1 = " + format(e2.image.basis()));
  return r;
}

Report cmd_ext1(const std::string& path, const std::string& object) {
  const ScenarioFile s = parse_scenario(read_file(path), path);
  const GMHSObject& o = s.object(object);
  Report r;
  r.add([&] {
    ValidationReport v;
    v.merge(check_mhs(o.mhs), "object " + object);
    return v;
  }());
  if (r.outcome() != Outcome::pass) return r;
  const Ext1Result e = ext1_dimension(o.mhs);
  Json reps = Json::array();
  for (const auto& v : e.representatives) reps.push_back(io::to_json(v));
  r.payload = {{"object", object}, {"dimension", e.dimension}, {"representatives", reps}};
  r.lines.push_back("dim Ext^1(Q(0), " + object + ") = " + std::to_string(e.dimension));
  for (const auto& v : e.representatives) r.lines.push_back("  representative " + format(v));
  return r;
}

/// "identity", "none", or comma-separated x>y pairs; kinds come from the sites.
LabelCorrespondence parse_corr(const std::string& text, const GMHSObject& a, const GMHSObject& b) {
  if (text == "identity") return identity_correspondence(a.site, b.site);
  if (text == "none" || text.empty()) return {};
  LabelCorrespondence c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto gt = item.find('>');
    if (gt == std::string::npos) throw InputError("--corr: \"" + item + "\" is not of the form x>y");
    const std::string x = item.substr(0, gt), y = item.substr(gt + 1);
    const auto kx = a.site.kind(x), ky = b.site.kind(y);
    if (!kx) throw InputError("--corr: \"" + x + "\" is not a label of the source site");
    if (!ky) throw InputError("--corr: \"" + y + "\" is not a label of the target site");
    c.pairings.push_back({x, y, pair_case(*kx, *ky)});
  }
  return merge(c, {});
}

Report cmd_hom(const std::string& path, const std::string& source, const std::string& target, const std::string& corr) {
  const ScenarioFile s = parse_scenario(read_file(path), path);
  const GMHSObject& a = s.object(source);
  const GMHSObject& b = s.object(target);
  const LabelCorrespondence c = parse_corr(corr, a, b);
  Report r;
  ValidationReport v;
  v.merge(check_gmhs(a), "object " + source);
  v.merge(check_gmhs(b), "object " + target);
  r.add(v);
  if (r.outcome() != Outcome::pass) return r;
  const auto basis = hom_group(a, b, c);
  Json mats = Json::array();
  for (const auto& m : basis) {
    mats.push_back(io::to_json(m));
    r.check("basis element " + format(m) + " is a GMHS morphism", is_gmhs_morphism({a, b, m, c}));
  }
  r.payload = {{"source", source}, {"target", target}, {"correspondence", io::to_json(c)},
               {"dimension", basis.size()}, {"basis", mats}};
  r.lines.push_back("dim Hom(" + source + ", " + target + ") = " + std::to_string(basis.size()));
  return r;
}

Report cmd_yoneda_check(const std::string& path, const std::string& e, const std::string& ep, const std::string& roof) {
  const ScenarioFile s = parse_scenario(read_file(path), path);
  const YonedaExt x = s.extension(e), y = s.extension(ep);
  Report r;
  ValidationReport v;
  v.merge(check_exact(x), "extension " + e);
  v.merge(check_exact(y), "extension " + ep);
  r.add(v);
  bool valid = false;
  try {
    const ValidationReport rr = check_roof_report(x, y, s.roof(roof));
    ValidationReport prefixed;
    prefixed.merge(rr, "roof " + roof);
    r.add(prefixed);
    valid = rr.ok();
  } catch (const InputError& err) {
    r.check("roof " + roof + ": shape", false, err.what());
  }
  r.payload = {{"e", e}, {"e_prime", ep}, {"roof", roof}, {"roof_valid", valid}};
  r.lines.push_back(std::string("C(") + e + ") = C(" + ep + ") via " + roof + ": " + (valid ? "certified" : "not certified"));
  return r;
}

Report cmd_example33(const Example33Params& p, std::size_t bound, const std::string& out) {
  Report r;
  const Classification cls = classify_example33(p, bound);
  const std::string verdict = to_string(cls.verdict);
  r.payload = {{"c1", p.c1.str()}, {"c2", p.c2.str()}, {"search_bound", bound},
               {"candidates", cls.candidates}, {"verdict", verdict}};
  r.lines.push_back("verdict: " + verdict);
  r.lines.push_back("candidates searched: " + std::to_string(cls.candidates));
  switch (cls.verdict) {
    case Verdict::Trivial: {
      const std::string file = out.empty() ? "example33_witness.json" : out;
      ScenarioFile s = example33_scenario(p);
      ScenarioBuilder b{std::move(s)};
      b.roof("witness", "E", "E_prime", *cls.witness);
      save_scenario(b.file, file);
      r.check("C(E) = C(E′)", true, "witness roof in " + file);
      r.payload["output"] = file;
      r.lines.push_back("witness roof written to " + file + " (extensions E, E_prime; roof witness)");
      r.lines.push_back("g(1) = " + format(cls.witness->up[2].matrix.col(0)) + " in the basis (α, β)");
      break;
    }
    case Verdict::NonTrivial: {
      const std::string file = out.empty() ? "example33_certificate.txt" : out;
      const std::string trace = render_certificate(*cls.certificate);
      write_text(file, trace);
      r.check("C(E) = C(E′)", false, "obstruction certificate in " + file);
      r.payload["output"] = file;
      r.payload["certificate"] = io::to_json(*cls.certificate);
      r.lines.push_back("certificate written to " + file);
      std::istringstream lines(trace);
      for (std::string l; std::getline(lines, l);) r.lines.push_back("  " + l);
      break;
    }
    case Verdict::Unknown:
      r.checks.push_back({"C(E) = C(E′)", Outcome::unknown,
                          "no roof within search bound " + std::to_string(bound) + " and no certificate"});
      break;
  }
  return r;
}

Report cmd_export_example33(const Example33Params& p, const std::string& out) {
  ScenarioBuilder b{example33_scenario(p)};
  const Classification cls = classify_example33(p);
  if (cls.witness) b.roof("witness", "E", "E_prime", *cls.witness);
  if (cls.certificate) b.file.certificates.emplace("obstruction", *cls.certificate);
  save_scenario(b.file, out);
  Report r;
  r.add(validate_scenario(parse_scenario(read_file(out), out)));
  r.payload = {{"output", out}, {"verdict", to_string(cls.verdict)}};
  r.lines.push_back("wrote " + out);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with generalized mixed Hodge structures"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print the report as JSON");

  std::string scenario, name, strata, source, target, corr = "identity", e, ep, roof, out;
  std::string c1 = "1", c2 = "2";
  int p = 0, q = 0;
  std::size_t bound = 2;

  auto* validate = app.add_subcommand("validate", "Run every validator on a scenario");
  validate->add_option("scenario", scenario, "Scenario file")->required();
  validate->add_option("--object", name, "Only this object");

  auto* ss = app.add_subcommand("ss-e2", "E2 term of the weight spectral sequence");
  ss->add_option("scenario", scenario, "Scenario file")->required();
  ss->add_option("--strata", strata, "Strata entry")->required();
  ss->add_option("--p", p, "p")->required();
  ss->add_option("--q", q, "q")->required();

  auto* ext1 = app.add_subcommand("ext1", "dim Ext^1 of an object of negative weights");
  ext1->add_option("scenario", scenario, "Scenario file")->required();
  ext1->add_option("--object", name, "Object")->required();

  auto* hom = app.add_subcommand("hom", "Basis of a GMHS Hom group");
  hom->add_option("scenario", scenario, "Scenario file")->required();
  hom->add_option("--source", source, "Source object")->required();
  hom->add_option("--target", target, "Target object")->required();
  hom->add_option("--corr", corr, "identity, none, or pairs x>y,...")->capture_default_str();

  auto* yon = app.add_subcommand("yoneda-check", "Check a roof between two extensions");
  yon->add_option("scenario", scenario, "Scenario file")->required();
  yon->add_option("--e", e, "First extension")->required();
  yon->add_option("--eprime", ep, "Second extension")->required();
  yon->add_option("--roof", roof, "Roof")->required();

  auto* ex = app.add_subcommand("example33", "Classify the length-2 extension for parameters c1, c2");
  ex->add_option("--c1", c1, "c(D1)")->capture_default_str();
  ex->add_option("--c2", c2, "c(D2)")->capture_default_str();
  ex->add_option("--search-bound", bound, "Extra dimensions allowed in candidate middles")->capture_default_str();
  ex->add_option("--out", out, "Witness (JSON) or certificate (text) path");

  auto* exp = app.add_subcommand("export-example33", "Write the example extensions as a scenario");
  exp->add_option("--c1", c1, "c(D1)")->capture_default_str();
  exp->add_option("--c2", c2, "c(D2)")->capture_default_str();
  exp->add_option("--out", out, "Output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitInput;
  }

  std::string echo = "gmhs";
  for (int a = 1; a < argc; ++a) echo += std::string(" ") + argv[a];

  try {
    Report r;
    if (*validate) r = cmd_validate(scenario, name);
    else if (*ss) r = cmd_ss_e2(scenario, strata, p, q);
    else if (*ext1) r = cmd_ext1(scenario, name);
    else if (*hom) r = cmd_hom(scenario, source, target, corr);
    else if (*yon) r = cmd_yoneda_check(scenario, e, ep, roof);
    else if (*ex) r = cmd_example33({parse_rat(c1, "--c1"), parse_rat(c2, "--c2")}, bound, out);
    else r = cmd_export_example33({parse_rat(c1, "--c1"), parse_rat(c2, "--c2")}, out);
    r.command = echo;
    std::cout << r.render(json);
    return r.exit_code();
  } catch (const std::exception& err) {
    if (json)
      std::cout << Json{{"command", echo}, {"outcome", "error"}, {"error", err.what()}}.dump(2) << "\n";
    else
      std::cerr << "error: " << err.what() << "\n";
    return kExitInput;
  }
}
