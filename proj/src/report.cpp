#include "charforge/report.hpp"

#include <cstdio>
#include <sstream>

#include "charforge/error.hpp"

namespace charforge {

namespace {

std::string rational_text(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'", 0);
  q.canonicalize();
  return q;
}

std::string status(bool pass) { return pass ? "PASS" : "FAIL"; }

std::string constituent_text(const Decomposition& d) {
  std::string out;
  for (const auto& c : d.constituents) {
    if (!out.empty()) out += ", ";
    out += std::to_string(c.row);
    if (c.multiplicity != 1) out += "^" + std::to_string(c.multiplicity);
  }
  return out;
}

TheoremCase parse_case(const std::string& name) {
  for (auto c : {TheoremCase::SumOfLinears, TheoremCase::MixedLinearAndDegreeP,
                 TheoremCase::AllDegreeP, TheoremCase::Irreducible}) {
    if (case_name(c) == name) return c;
  }
  throw ParseError("unknown case '" + name + "'", 0);
}

}  // namespace

std::string row_fingerprint(const CharacterTable& table, std::size_t row) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& v : table.row(row)) {
    feed(v.to_string());
    feed(",");
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

TableDocument table_document(const CharacterTable& table) {
  TableDocument doc;
  const auto& cc = table.classes();
  doc.order = table.group()->order();
  doc.conductor = table.conductor();
  for (std::size_t c = 0; c < cc.count(); ++c) {
    doc.classes.push_back({cc.representatives[c], cc.sizes[c], cc.rep_orders[c]});
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto r = table.row(i);
    doc.irreducibles.emplace_back(r.begin(), r.end());
  }
  doc.degrees = table.degrees();
  return doc;
}

bool SelfProductDocument::pass() const noexcept {
  for (const auto& e : entries) {
    if (!e.violation.empty()) return false;
  }
  return true;
}

void to_json(Json& j, const Cyclotomic& c) {
  Json coeffs = Json::array();
  for (const auto& t : c.terms()) coeffs.push_back(Json::array({t.exponent, rational_text(t.coeff)}));
  j = Json{{"conductor", c.conductor()}, {"coeffs", std::move(coeffs)}};
}

void from_json(const Json& j, Cyclotomic& c) {
  const auto m = j.at("conductor").get<std::uint32_t>();
  if (m == 0) throw ParseError("conductor must be positive", 0);
  std::vector<Rational> dense(m);
  for (const auto& t : j.at("coeffs")) {
    const auto k = t.at(0).get<std::uint32_t>();
    if (k >= m) throw ParseError("exponent " + std::to_string(k) + " not below the conductor", 0);
    dense[k] += parse_rational(t.at(1).get<std::string>());
  }
  c = Cyclotomic::from_powers(m, std::move(dense));
}

void to_json(Json& j, const TableDocument& t) {
  Json classes = Json::array();
  for (const auto& c : t.classes) {
    classes.push_back({{"rep_index", c.rep_index}, {"size", c.size}, {"rep_order", c.rep_order}});
  }
  j = Json{{"order", t.order},
           {"conductor", t.conductor},
           {"classes", std::move(classes)},
           {"irreducibles", t.irreducibles},
           {"degrees", t.degrees}};
}

void from_json(const Json& j, TableDocument& t) {
  t.order = j.at("order").get<std::size_t>();
  t.conductor = j.at("conductor").get<std::uint32_t>();
  t.classes.clear();
  for (const auto& c : j.at("classes")) {
    t.classes.push_back({c.at("rep_index").get<std::size_t>(), c.at("size").get<std::size_t>(),
                         c.at("rep_order").get<std::uint32_t>()});
  }
  t.irreducibles = j.at("irreducibles").get<std::vector<std::vector<Cyclotomic>>>();
  t.degrees = j.at("degrees").get<std::vector<std::uint64_t>>();
}

void to_json(Json& j, const Decomposition& d) {
  j = Json::array();
  for (const auto& c : d.constituents) j.push_back(Json::array({c.row, c.multiplicity}));
}

void from_json(const Json& j, Decomposition& d) {
  d.constituents.clear();
  for (const auto& c : j) d.constituents.push_back({c.at(0).get<std::size_t>(), c.at(1).get<std::uint64_t>()});
}

void to_json(Json& j, const TheoremACase& c) {
  Json hist = Json::array();
  for (auto [deg, n] : c.degree_histogram) hist.push_back(Json::array({deg, n}));
  j = Json{{"case", case_name(c.tag)},
           {"label", case_label(c.tag)},
           {"eta", c.eta},
           {"constituents", c.constituents},
           {"degree_histogram", std::move(hist)}};
}

void from_json(const Json& j, TheoremACase& c) {
  c.tag = parse_case(j.at("case").get<std::string>());
  c.eta = j.at("eta").get<std::size_t>();
  c.constituents = j.at("constituents").get<Decomposition>();
  c.degree_histogram.clear();
  for (const auto& h : j.at("degree_histogram")) {
    c.degree_histogram[h.at(0).get<std::uint64_t>()] = h.at(1).get<std::size_t>();
  }
}

void to_json(Json& j, const LinearShiftResult& r) {
  j = Json{{"status", status(r.pass)},
           {"linear_constituents", r.linear_constituents},
           {"witness", r.witness}};
}

void from_json(const Json& j, LinearShiftResult& r) {
  r.pass = j.at("status").get<std::string>() == "PASS";
  r.linear_constituents = j.at("linear_constituents").get<std::size_t>();
  r.witness = j.at("witness").get<std::string>();
}

void to_json(Json& j, const ProductDocument& p) {
  j = Json{{"group", p.group},
           {"chi", {{"row", p.chi}, {"degree", p.chi_degree}, {"fingerprint", p.chi_fingerprint}}},
           {"psi", {{"row", p.psi}, {"degree", p.psi_degree}, {"fingerprint", p.psi_fingerprint}}},
           {"eta", p.decomposition.eta()},
           {"constituents", p.decomposition},
           {"constituent_degrees", p.constituent_degrees}};
  if (p.theorem_case) j["theorem_case"] = *p.theorem_case;
  if (p.linear_shift) j["linear_shift"] = *p.linear_shift;
}

void from_json(const Json& j, ProductDocument& p) {
  p.group = j.at("group").get<std::string>();
  const auto& chi = j.at("chi");
  const auto& psi = j.at("psi");
  p.chi = chi.at("row").get<std::size_t>();
  p.chi_degree = chi.at("degree").get<std::uint64_t>();
  p.chi_fingerprint = chi.at("fingerprint").get<std::string>();
  p.psi = psi.at("row").get<std::size_t>();
  p.psi_degree = psi.at("degree").get<std::uint64_t>();
  p.psi_fingerprint = psi.at("fingerprint").get<std::string>();
  p.decomposition = j.at("constituents").get<Decomposition>();
  p.constituent_degrees = j.at("constituent_degrees").get<std::vector<std::uint64_t>>();
  p.theorem_case.reset();
  p.linear_shift.reset();
  if (j.contains("theorem_case")) p.theorem_case = j.at("theorem_case").get<TheoremACase>();
  if (j.contains("linear_shift")) p.linear_shift = j.at("linear_shift").get<LinearShiftResult>();
}

void to_json(Json& j, const PairResult& r) {
  j = Json{{"chi", r.chi}, {"psi", r.psi}, {"ordered", r.ordered}};
  if (r.result) j["result"] = *r.result;
  if (!r.violation.empty()) j["violation"] = r.violation;
}

void from_json(const Json& j, PairResult& r) {
  r.chi = j.at("chi").get<std::size_t>();
  r.psi = j.at("psi").get<std::size_t>();
  r.ordered = j.at("ordered").get<std::size_t>();
  r.result.reset();
  if (j.contains("result")) r.result = j.at("result").get<TheoremACase>();
  r.violation = j.value("violation", std::string{});
}

void to_json(Json& j, const VerificationReport& r) {
  j = Json{{"group", r.group},
           {"prime", r.prime},
           {"group_order", r.group_order},
           {"ordered_pairs", r.ordered_pairs},
           {"status", status(r.pass())},
           {"pairs", r.pairs},
           {"violations", r.violations},
           {"skipped", r.skipped}};
}

void from_json(const Json& j, VerificationReport& r) {
  r.group = j.at("group").get<std::string>();
  r.prime = j.at("prime").get<std::uint64_t>();
  r.group_order = j.at("group_order").get<std::size_t>();
  r.ordered_pairs = j.at("ordered_pairs").get<std::size_t>();
  r.pairs = j.at("pairs").get<std::vector<PairResult>>();
  r.violations = j.at("violations").get<std::vector<std::string>>();
  r.skipped = j.at("skipped").get<std::vector<std::string>>();
  r.seconds = 0;
}

void to_json(Json& j, const SpectrumDocument& s) {
  Json values = Json::array();
  for (const auto& [eta, w] : s.spectrum) {
    values.push_back({{"eta", eta},
                      {"witness", Json::array({w.chi, w.psi})},
                      {"ordered_pairs", w.ordered_pairs}});
  }
  j = Json{{"group", s.group}, {"prime", s.prime}, {"spectrum", std::move(values)}};
}

void from_json(const Json& j, SpectrumDocument& s) {
  s.group = j.at("group").get<std::string>();
  s.prime = j.at("prime").get<std::uint64_t>();
  s.spectrum.clear();
  for (const auto& v : j.at("spectrum")) {
    s.spectrum[v.at("eta").get<std::size_t>()] = {v.at("witness").at(0).get<std::size_t>(),
                                                   v.at("witness").at(1).get<std::size_t>(),
                                                   v.at("ordered_pairs").get<std::size_t>()};
  }
}

void to_json(Json& j, const SelfProductDocument& s) {
  Json entries = Json::array();
  for (const auto& e : s.entries) {
    Json x{{"chi", e.chi}, {"shape", e.shape}};
    if (!e.violation.empty()) x["violation"] = e.violation;
    entries.push_back(std::move(x));
  }
  j = Json{{"group", s.group},
           {"prime", s.prime},
           {"status", status(s.pass())},
           {"characters", std::move(entries)}};
}

void from_json(const Json& j, SelfProductDocument& s) {
  s.group = j.at("group").get<std::string>();
  s.prime = j.at("prime").get<std::uint64_t>();
  s.entries.clear();
  for (const auto& e : j.at("characters")) {
    s.entries.push_back({e.at("chi").get<std::size_t>(), e.at("shape").get<std::string>(),
                         e.value("violation", std::string{})});
  }
}

void to_json(Json& j, const ExampleCheck& c) {
  j = Json{{"id", c.id},
           {"group", c.group},
           {"claim", c.claim},
           {"status", status(c.pass)},
           {"evidence", c.evidence}};
}

void from_json(const Json& j, ExampleCheck& c) {
  c.id = j.at("id").get<std::string>();
  c.group = j.at("group").get<std::string>();
  c.claim = j.at("claim").get<std::string>();
  c.pass = j.at("status").get<std::string>() == "PASS";
  c.evidence = j.at("evidence").get<std::vector<std::string>>();
}

void to_json(Json& j, const ExamplesReport& r) {
  j = Json{{"prime", r.prime}, {"status", status(r.pass())}, {"checks", r.checks}};
}

void from_json(const Json& j, ExamplesReport& r) {
  r.prime = j.at("prime").get<std::uint64_t>();
  r.checks = j.at("checks").get<std::vector<ExampleCheck>>();
}

std::string to_markdown(const TableDocument& t) {
  std::ostringstream out;
  out << "# Character table\n\n"
      << "- order: " << t.order << "\n"
      << "- conductor: " << t.conductor << "\n"
      << "- classes: " << t.classes.size() << "\n\n";
  out << "| row | degree |";
  for (std::size_t c = 0; c < t.classes.size(); ++c) out << " c" << c << " |";
  out << "\n|---|---|";
  for (std::size_t c = 0; c < t.classes.size(); ++c) out << "---|";
  out << "\n| | size |";
  for (const auto& c : t.classes) out << ' ' << c.size << " |";
  out << "\n| | order |";
  for (const auto& c : t.classes) out << ' ' << c.rep_order << " |";
  out << '\n';
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i) {
    out << "| " << i << " | " << t.degrees[i] << " |";
    for (const auto& v : t.irreducibles[i]) out << ' ' << v.to_string() << " |";
    out << '\n';
  }
  return out.str();
}

std::string to_markdown(const ProductDocument& p) {
  std::ostringstream out;
  out << "# Product of rows " << p.chi << " and " << p.psi << "\n\n"
      << "- group: `" << p.group << "`\n"
      << "- chi: row " << p.chi << ", degree " << p.chi_degree << ", fingerprint "
      << p.chi_fingerprint << "\n"
      << "- psi: row " << p.psi << ", degree " << p.psi_degree << ", fingerprint "
      << p.psi_fingerprint << "\n"
      << "- eta: " << p.decomposition.eta() << "\n";
  if (p.theorem_case) {
    out << "- case: " << case_label(p.theorem_case->tag) << " (" << case_name(p.theorem_case->tag)
        << ")\n";
  }
  if (p.linear_shift) {
    out << "- linear shift check: " << status(p.linear_shift->pass) << " ("
        << p.linear_shift->witness << ")\n";
  }
  out << "\n| row | degree | multiplicity |\n|---|---|---|\n";
  for (std::size_t k = 0; k < p.decomposition.constituents.size(); ++k) {
    const auto& c = p.decomposition.constituents[k];
    out << "| " << c.row << " | " << p.constituent_degrees[k] << " | " << c.multiplicity << " |\n";
  }
  return out.str();
}

std::string to_markdown(const VerificationReport& r) {
  std::ostringstream out;
  out << "# Product sweep: `" << r.group << "`\n\n"
      << "- prime: " << r.prime << "\n"
      << "- group order: " << r.group_order << "\n"
      << "- ordered pairs: " << r.ordered_pairs << "\n"
      << "- status: " << status(r.pass()) << "\n\n"
      << "| chi | psi | ordered | case | eta | constituents |\n|---|---|---|---|---|---|\n";
  for (const auto& p : r.pairs) {
    out << "| " << p.chi << " | " << p.psi << " | " << p.ordered << " | ";
    if (p.result) {
      out << case_label(p.result->tag) << " | " << p.result->eta << " | "
          << constituent_text(p.result->constituents);
    } else {
      out << "violation | | " << p.violation;
    }
    out << " |\n";
  }
  for (const auto& v : r.violations) out << "\n- violation: " << v;
  if (!r.violations.empty()) out << '\n';
  return out.str();
}

std::string to_markdown(const SpectrumDocument& s) {
  std::ostringstream out;
  out << "# Constituent counts: `" << s.group << "`\n\n"
      << "- prime: " << s.prime << "\n\n"
      << "| eta | witness | ordered pairs |\n|---|---|---|\n";
  for (const auto& [eta, w] : s.spectrum) {
    out << "| " << eta << " | (" << w.chi << ", " << w.psi << ") | " << w.ordered_pairs << " |\n";
  }
  return out.str();
}

std::string to_markdown(const SelfProductDocument& s) {
  std::ostringstream out;
  out << "# chi * conj(chi): `" << s.group << "`\n\n"
      << "- prime: " << s.prime << "\n"
      << "- status: " << status(s.pass()) << "\n\n"
      << "| chi | shape |\n|---|---|\n";
  for (const auto& e : s.entries) {
    out << "| " << e.chi << " | " << (e.violation.empty() ? e.shape : e.violation) << " |\n";
  }
  return out.str();
}

std::string to_markdown(const ExamplesReport& r) {
  std::ostringstream out;
  out << "# Worked examples, p = " << r.prime << "\n\n- status: " << status(r.pass()) << "\n";
  for (const auto& c : r.checks) {
    out << "\n## " << c.id << ": " << status(c.pass) << "\n\n"
        << "- group: `" << c.group << "`\n"
        << "- claim: " << c.claim << "\n";
    for (const auto& e : c.evidence) out << "- " << e << "\n";
  }
  return out.str();
}

}  // namespace charforge
