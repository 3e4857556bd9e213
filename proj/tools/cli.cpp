#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "almostcyclic/finitelie.hpp"
#include "almostcyclic/spectra.hpp"
#include "almostcyclic/theorems.hpp"
#include "almostcyclic/torus.hpp"
#include "almostcyclic/weightcalc.hpp"

namespace acyc::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Output {
  Json data;
  bool violation = false;
};

// ---------------------------------------------------------------- parsing

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) {
    cur.erase(0, cur.find_first_not_of(" \t"));
    cur.erase(cur.find_last_not_of(" \t") + 1);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

int64_t parse_int(const std::string& s) {
  size_t pos = 0;
  int64_t v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw Error(ErrorCode::InvalidArgument, "not an integer: " + s);
  return v;
}

Weight parse_weight(const RootSystem& rs, const std::string& text, bool eps) {
  const auto parts = split(text, ',');
  if (eps) {
    if (static_cast<int>(parts.size()) != rs.eps_dim()) {
      throw Error(ErrorCode::RankMismatch, "expected " + std::to_string(rs.eps_dim()) + " epsilon coordinates");
    }
    RationalVector v;
    for (const auto& p : parts) {
      try {
        v.emplace_back(p);
      } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidArgument, "not a rational number: " + p);
      }
    }
    return from_eps(rs, v);
  }
  if (static_cast<int>(parts.size()) != rs.rank()) {
    throw Error(ErrorCode::RankMismatch, "expected " + std::to_string(rs.rank()) + " weight coordinates");
  }
  std::vector<int> c;
  for (const auto& p : parts) c.push_back(static_cast<int>(parse_int(p)));
  return Weight::from_vector(c);
}

Json read_json_arg(const std::string& text) {
  std::string src = text;
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + text.substr(1));
    std::ostringstream os;
    os << in.rdbuf();
    src = os.str();
  }
  try {
    return Json::parse(src);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed JSON: ") + e.what());
  }
}

AbelianValue parse_value(const Json& j, ValueContext ctx) {
  if (j.is_number_integer()) return AbelianValue::root_of_unity(ctx, j.get<int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "1") return AbelianValue(ctx);
    if (s == "-1") return AbelianValue::minus_one(ctx);
    throw Error(ErrorCode::InvalidArgument, "value strings must be \"1\" or \"-1\"");
  }
  if (j.is_object()) {
    std::vector<int64_t> free(static_cast<size_t>(ctx.free), 0);
    if (j.contains("free")) free = j.at("free").get<std::vector<int64_t>>();
    const int64_t t = j.value("torsion", int64_t{0});
    return AbelianValue(ctx, free, t);
  }
  throw Error(ErrorCode::InvalidArgument, "a value is an integer, \"1\", \"-1\" or {\"free\":[...],\"torsion\":k}");
}

TorusElement parse_torus(const RootSystemPtr& rs, const Json& j) {
  if (!j.is_object() || !j.contains("context")) throw Error(ErrorCode::InvalidArgument, "torus needs a context");
  ValueContext ctx;
  try {
    ctx.free = j.at("context").value("free", 0);
    ctx.torsion = j.at("context").value("torsion", int64_t{1});
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad context: ") + e.what());
  }
  auto values = [&](const char* key) {
    std::vector<AbelianValue> out;
    for (const auto& v : j.at(key)) out.push_back(parse_value(v, ctx));
    return out;
  };
  try {
    if (j.contains("fundamental_values")) return torus_from_fundamental_values(rs, ctx, values("fundamental_values"));
    if (j.contains("eps_values")) {
      std::map<int, AbelianValue> spin;
      if (j.contains("spin_values")) {
        for (const auto& [k, v] : j.at("spin_values").items()) spin.emplace(static_cast<int>(parse_int(k)), parse_value(v, ctx));
      }
      return torus_from_eps_values(rs, ctx, values("eps_values"), spin);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad torus values: ") + e.what());
  }
  throw Error(ErrorCode::InvalidArgument, "torus needs fundamental_values or eps_values");
}

// ---------------------------------------------------------------- JSON rendering

Json weight_json(const Weight& w) { return w.coords(); }

Json big_json(const BigInt& v) {
  if (v <= BigInt(INT64_MAX) && v >= BigInt(INT64_MIN)) return static_cast<int64_t>(v);
  return v.str();
}

Json context_json(const ValueContext& c) { return Json{{"free", c.free}, {"torsion", c.torsion}}; }

void put_spectrum(Json& j, const SpectrumReport& r) {
  Json ev = Json::array();
  for (const auto& [v, m] : r.eigenvalues) ev.push_back(Json{{"value", v.str()}, {"mult", m}});
  j["eigenvalues"] = ev;
  j["m_s"] = r.m_s;
  j["fixed_dim"] = r.fixed_dim;
  j["total"] = r.total;
  j["degree"] = r.degree();
  j["cyclic"] = r.cyclic;
  j["almost_cyclic"] = r.almost_cyclic;
  j["exceptional"] = r.exceptional ? Json(r.exceptional->str()) : Json(nullptr);
}

Json spectrum_json(const SpectrumReport& r) {
  Json j = Json::object();
  put_spectrum(j, r);
  return j;
}

Json element_json(const TorusElement& s) {
  Json j{{"context", context_json(s.context())}};
  Json f = Json::array();
  for (int i = 0; i < s.root_system().rank(); ++i) f.push_back(s.has_image(i) ? Json(s.image(i).str()) : Json(nullptr));
  j["fundamental_values"] = f;
  if (s.eps_values()) {
    Json e = Json::array();
    for (const auto& v : *s.eps_values()) e.push_back(v.str());
    j["eps_values"] = e;
  }
  return j;
}

std::string module_name(const ModuleSpec& spec) {
  return spec.rs->name() + " " + spec.label() + " p=" + std::to_string(spec.p);
}

// ---------------------------------------------------------------- table rendering

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

void collect_tables(const Json& j, const std::string& prefix, Table& summary, std::vector<Table>& out) {
  for (const auto& [k, v] : j.items()) {
    const std::string key = prefix.empty() ? k : prefix + "." + k;
    if (v.is_object()) {
      collect_tables(v, key, summary, out);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      Table t{key, {}, {}};
      for (const auto& row : v) {
        for (const auto& [c, x] : row.items()) {
          if (std::find(t.columns.begin(), t.columns.end(), c) == t.columns.end()) t.columns.push_back(c);
        }
      }
      for (const auto& row : v) {
        std::vector<std::string> r;
        for (const auto& c : t.columns) r.push_back(row.contains(c) ? cell(row.at(c)) : "");
        t.rows.push_back(std::move(r));
      }
      out.push_back(std::move(t));
    } else {
      summary.rows.push_back({key, cell(v)});
    }
  }
}

std::vector<Table> tables_of(const Json& j) {
  Table summary{"summary", {"key", "value"}, {}};
  std::vector<Table> rest;
  collect_tables(j, "", summary, rest);
  std::vector<Table> out;
  if (!summary.rows.empty()) out.push_back(std::move(summary));
  for (auto& t : rest) out.push_back(std::move(t));
  return out;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

void render(const Json& data, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << data.dump() << "\n";
    return;
  }
  const auto tables = tables_of(data);
  for (size_t t = 0; t < tables.size(); ++t) {
    const auto& tab = tables[t];
    if (t > 0) out << "\n";
    if (format == "csv") {
      out << "# " << tab.title << "\n";
      for (size_t c = 0; c < tab.columns.size(); ++c) out << (c ? "," : "") << csv_cell(tab.columns[c]);
      out << "\n";
      for (const auto& r : tab.rows) {
        for (size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << csv_cell(r[c]);
        out << "\n";
      }
    } else {
      out << "### " << tab.title << "\n\n|";
      for (const auto& c : tab.columns) out << " " << md_cell(c) << " |";
      out << "\n|";
      for (size_t c = 0; c < tab.columns.size(); ++c) out << " --- |";
      out << "\n";
      for (const auto& r : tab.rows) {
        out << "|";
        for (const auto& c : r) out << " " << md_cell(c) << " |";
        out << "\n";
      }
    }
  }
}

// ---------------------------------------------------------------- commands

struct ModuleArgs {
  std::string type;
  int rank = 0;
  std::string weight;
  int p = 0;
  bool eps = false;
  std::string sum;
};

void add_group_options(CLI::App* sub, ModuleArgs& m, bool required) {
  auto* t = sub->add_option("--type", m.type, "Group family letter A-G");
  auto* r = sub->add_option("--rank", m.rank, "Rank");
  if (required) {
    t->required();
    r->required();
  }
}

void add_module_options(CLI::App* sub, ModuleArgs& m, bool with_sum) {
  add_group_options(sub, m, true);
  sub->add_option("--weight", m.weight, "Highest weight, comma-separated coordinates")->required();
  sub->add_option("--char", m.p, "Characteristic (0 or a prime)");
  sub->add_flag("--eps", m.eps, "Read weights in epsilon coordinates");
  if (with_sum) sub->add_option("--sum", m.sum, "Second highest weight of a direct summand");
}

ModuleSpec build_module(const ModuleArgs& m) {
  auto rs = build_root_system(m.type, m.rank);
  auto spec = ModuleSpec::irreducible(rs, m.p, parse_weight(*rs, m.weight, m.eps));
  if (!m.sum.empty()) {
    spec = ModuleSpec::direct_sum({spec, ModuleSpec::irreducible(rs, m.p, parse_weight(*rs, m.sum, m.eps))});
  }
  return spec;
}

Output cmd_rootsys_info(const ModuleArgs& m) {
  auto rs = build_root_system(m.type, m.rank);
  Json j{{"type", rs->name()}, {"rank", rs->rank()}, {"roots", rs->roots().size()},
         {"positive_roots", rs->positive_roots().size()}, {"e", rs->e_value()}, {"weyl_order", rs->weyl_order()},
         {"cartan", rs->cartan_matrix()}};
  Json pos = Json::array();
  for (size_t k = 0; k < rs->positive_roots().size(); ++k) {
    const auto& c = rs->positive_root_coords()[k];
    int h = 0;
    for (int x : c) h += x;
    pos.push_back(Json{{"root", weight_json(rs->positive_roots()[k])}, {"simple_coords", c}, {"height", h}});
  }
  j["positive"] = pos;
  return {j, false};
}

Output cmd_weights(const ModuleArgs& m) {
  const auto spec = build_module(m);
  const auto ms = module_weights(spec);
  Json j{{"module", module_name(spec)}, {"type", spec.rs->name()}, {"p", spec.p}, {"highest", weight_json(spec.highest)}};
  j["dim"] = ms.total();
  j["zero_mult"] = ms.zero_mult();
  j["distinct"] = ms.size();
  if (spec.p == 0) j["weyl_dimension"] = big_json(weyl_dimension(*spec.rs, spec.highest));
  if (spec.p > 0 && spec.highest.is_restricted(spec.p)) {
    const auto cat = resolve_restricted(*spec.rs, spec.highest, spec.p);
    j["catalog"] = Json{{"source", cat.source}, {"row", cat.row}, {"rule", weight_rule_name(cat.rule)}};
  }
  Json ws = Json::array();
  for (const auto& [w, k] : ms.entries()) ws.push_back(Json{{"weight", weight_json(w)}, {"mult", k}});
  j["weights"] = ws;
  return {j, false};
}

Output cmd_spectrum(const ModuleArgs& m, const std::string& torus) {
  const auto spec = build_module(m);
  const auto s = parse_torus(spec.rs, read_json_arg(torus));
  const auto ms = module_weights(spec);
  const auto r = spectrum(s, ms);
  Json j{{"module", module_name(spec)}, {"element", element_json(s)}, {"regular", is_regular(s)},
         {"strictly_regular", is_strictly_regular(s)}, {"central", is_central(s)}};
  put_spectrum(j, r);
  bool violation = false;
  if (spec.kind == ModuleSpec::Kind::Irreducible) {
    const auto v = check_bound(spec, s);
    j["verdict"] = Json{{"applicable", v.applicable}, {"m_s", v.m_s}, {"bound", v.bound},
                        {"bound_source", v.bound_source}, {"pass", v.pass}};
    violation = !v.pass;
  }
  return {j, violation};
}

Json table_json(const TableReport& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json row{{"group", r.group}, {"row", r.row}};
    if (t.which == 1) {
      row["condition"] = r.condition;
      row["listed_zero_mult"] = r.listed_zero_mult;
      row["listed_dim"] = r.listed_dim;
    } else {
      row["p"] = r.p;
    }
    row["highest"] = weight_json(r.highest);
    row["zero_mult"] = r.computed_zero_mult;
    row["dim"] = big_json(r.computed_dim);
    row["weights"] = r.weight_count;
    row["all_mult_one"] = r.all_mult_one;
    if (t.which == 2) row["crosscheck"] = r.crosscheck;
    row["status"] = r.status;
    row["note"] = r.note;
    rows.push_back(row);
  }
  return Json{{"table", t.which}, {"pass", t.pass()}, {"rows", rows}};
}

Output cmd_table(int which, const ModuleArgs& m, bool char_given) {
  std::vector<TableScope> scope;
  if (!m.type.empty()) {
    scope.push_back({m.type, m.rank, char_given ? m.p : 7});
  } else {
    scope = which == 1 ? default_table1_scope() : default_table2_scope();
    if (which == 2 && char_given) {
      for (auto& s : scope) s.p = m.p;
    }
  }
  const auto rep = which == 1 ? verify_table1(scope) : verify_table2(scope);
  return {table_json(rep), !rep.pass()};
}

Json scan_json(const ScanReport& r) {
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    ws.push_back(Json{{"index", w.index}, {"exponents", w.exponents}, {"m_s", w.m_s}, {"fixed_dim", w.fixed_dim},
                      {"exceptional", w.exceptional}});
  }
  Json vs = Json::array();
  for (const auto& v : r.violations) {
    vs.push_back(Json{{"property", v.property}, {"index", v.index}, {"exponents", v.exponents}, {"detail", v.detail}});
  }
  return Json{{"module", r.module},
              {"N", r.N},
              {"seed", r.seed},
              {"samples", r.samples},
              {"regular_count", r.regular_count},
              {"almost_cyclic_count", r.almost_cyclic_count},
              {"regular_almost_cyclic_count", r.regular_almost_cyclic_count},
              {"max_m_s", r.max_m_s},
              {"properties", r.properties},
              {"pass", r.violations.empty()},
              {"witnesses", ws},
              {"violations", vs}};
}

struct ScanArgs {
  int64_t order = 60;
  uint64_t samples = 10000;
  uint64_t seed = 0;
  std::string properties;
  unsigned threads = 0;
  size_t witness_cap = 16;
};

ScanOptions scan_options(const ScanArgs& a) {
  ScanOptions o;
  o.N = a.order;
  o.seed = a.seed;
  o.count = a.samples;
  o.threads = a.threads;
  o.witness_cap = a.witness_cap;
  for (const auto& name : split(a.properties, ',')) {
    auto p = parse_property(name);
    if (!p) throw Error(ErrorCode::InvalidArgument, "unknown property: " + name);
    o.properties.push_back(*p);
  }
  return o;
}

Output cmd_scan(const ModuleArgs& m, const ScanArgs& a) {
  const auto rep = scan(build_module(m), scan_options(a));
  return {scan_json(rep), !rep.violations.empty()};
}

Output scan_suites(const std::vector<std::string>& suites, const ScanArgs& a) {
  ScanOptions o = scan_options(a);
  Json runs = Json::array();
  Json violations = Json::array();
  Json skipped = Json::array();
  uint64_t total = 0;
  for (const auto& name : suites) {
    for (const auto& job : scan_suite(name)) {
      for (int64_t N : scan_orders(job.spec.p)) {
        o.N = N;
        ScanReport r;
        try {
          r = scan(job.spec, o);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::Unsupported) throw;
          skipped.push_back(Json{{"suite", name}, {"module", module_name(job.spec)}, {"reason", e.what()}});
          break;
        }
        total += r.samples;
        runs.push_back(Json{{"suite", name},
                            {"module", r.module},
                            {"N", N},
                            {"samples", r.samples},
                            {"regular", r.regular_count},
                            {"regular_almost_cyclic", r.regular_almost_cyclic_count},
                            {"max_m_s", r.max_m_s},
                            {"witnesses", r.witnesses.size()},
                            {"violations", r.violations.size()}});
        for (const auto& v : r.violations) {
          violations.push_back(Json{{"module", r.module}, {"N", N}, {"property", v.property}, {"index", v.index},
                                    {"detail", v.detail}});
        }
      }
    }
  }
  Json j{{"suites", suites}, {"samples_per_run", a.samples}, {"seed", a.seed},
         {"total_samples", total}, {"pass", violations.empty()}, {"runs", runs}, {"violations", violations},
         {"skipped", skipped}};
  return {j, !violations.empty()};
}

Json construction_json(const std::string& name, const Construction& c) {
  Json j{{"example", name}, {"module", module_name(c.spec)}, {"element", element_json(c.element)}};
  put_spectrum(j, c.report);
  return j;
}

bool e2x_holds(const Construction& c, int n) {
  const auto& r = c.report;
  return r.almost_cyclic && r.exceptional && r.exceptional->is_identity() && r.fixed_dim == n + 1 && r.m_s == n + 1;
}

bool ex5_holds(const Construction& c, Ex5Variant v, int m) {
  const auto& r = c.report;
  if (!r.almost_cyclic) return false;
  const ValueContext ctx = c.element.context();
  switch (v) {
    case Ex5Variant::One: return r.fixed_dim == m;
    case Ex5Variant::OneNeg: return r.exceptional && *r.exceptional == AbelianValue::minus_one(ctx) && r.m_s == m;
    case Ex5Variant::Two: return r.fixed_dim == m + 1;
    case Ex5Variant::Three:
      return r.exceptional && *r.exceptional == AbelianValue::root_of_unity(ctx, 2) && r.m_s == m + 1;
  }
  return false;
}

Output cmd_e2x(int n, int p) {
  const auto c = example_e2x(n, p);
  Json j = construction_json("e2x", c);
  const bool ok = e2x_holds(c, n);
  j["pass"] = ok;
  return {j, !ok};
}

Output cmd_ex5(const std::string& variant, int m, int p) {
  const auto v = parse_ex5_variant(variant);
  const auto c = example_ex5(v, m, p);
  Json j = construction_json(std::string("ex5-") + ex5_variant_name(v), c);
  const bool ok = ex5_holds(c, v, m);
  j["pass"] = ok;
  return {j, !ok};
}

Json g2_json(const G2Example& g) {
  Json lr = Json::array();
  for (const auto& v : g.long_root_values) lr.push_back(v.str());
  return Json{{"element", element_json(g.element)}, {"regular", g.regular}, {"long_root_values", lr},
              {"v1", spectrum_json(g.v1)}, {"v2", spectrum_json(g.v2)}};
}

Output cmd_g2(int variant, int p, int64_t b_order) {
  if (variant == 2) {
    const auto g = example_g2_two();
    Json j = g2_json(g);
    const bool ok = g.v1.almost_cyclic && g.v2.almost_cyclic;
    j["pass"] = ok;
    return {j, !ok};
  }
  if (variant != 1) throw Error(ErrorCode::InvalidArgument, "variant must be 1 or 2");
  const auto g = example_g2_one(p, b_order > 0 ? std::optional<int64_t>(b_order) : std::nullopt);
  Json j = g2_json(g);
  const bool expected = b_order != 4;
  const bool ok = g.v1.almost_cyclic == expected;
  j["b_order"] = b_order > 0 ? Json(b_order) : Json("free");
  j["pass"] = ok;
  return {j, !ok};
}

Json zsigmondy_json(uint64_t q, int r, const ZsigmondyResult& z) {
  Json ev = Json::array();
  for (const auto& [ell, ord] : z.evidence) ev.push_back(Json{{"prime", ell}, {"order", ord}});
  return Json{{"q", q}, {"r", r}, {"status", z.status_name()}, {"ell", z.ell}, {"exponent", z.exponent}, {"evidence", ev}};
}

Json sl2_json(const Sl2Classification& c) {
  Json cls = Json::array();
  for (const auto& [e, k] : c.classes) cls.push_back(Json{{"exponent", e}, {"mult", k}});
  return Json{{"p", c.p}, {"i", c.i}, {"a_order", c.a_order}, {"exponents", c.exponents}, {"m_s", c.m_s},
              {"cyclic", c.cyclic}, {"almost_cyclic", c.almost_cyclic},
              {"almost_cyclic_with_mult2", c.almost_cyclic_with_mult2}, {"membership", c.membership},
              {"classes", cls}};
}

Json ev3_json(const Ev3Witness& w) {
  return Json{{"q", w.q}, {"r", w.r}, {"s_order", w.s_order}, {"s_order_source", w.s_order_source},
              {"order_of_q", w.order_of_q}, {"one_mult", w.one_mult}, {"complement_dim", w.complement_dim},
              {"complement_irreducible", w.complement_irreducible}, {"m_s", w.m_s}, {"exponents", w.exponents},
              {"orbit_sizes", w.orbit_sizes}};
}

// ---------------------------------------------------------------- lemma checks

Output lemma_e60() {
  const auto r = lemma_e60_check();
  return {Json{{"pass", r.pass}, {"quadruples", r.quadruples}}, !r.pass};
}

Output lemma_11d() {
  Json rows = Json::array();
  bool ok = true;
  for (int n : {4, 5, 6}) {
    for (int which : {1, n - 1, n}) {
      const auto r = lemma_11d_check(n, which);
      ok = ok && r.pass;
      rows.push_back(Json{{"module", r.module}, {"pairs", r.pairs}, {"unlinked", r.unlinked},
                          {"mismatches", r.mismatches}, {"exceptions_linked", r.exceptions_linked}, {"pass", r.pass}});
    }
  }
  return {Json{{"pass", ok}, {"modules", rows}}, !ok};
}

Output lemma_2g3() {
  const auto free = example_g2_one(5, std::nullopt);
  const auto o4 = example_g2_one(5, 4);
  const auto o6 = example_g2_one(5, 6);
  const auto two = example_g2_two();
  const bool ok = free.v1.almost_cyclic && free.v1.m_s == 2 && !o4.v1.almost_cyclic && o6.v1.almost_cyclic &&
                  two.v1.almost_cyclic && two.v2.almost_cyclic;
  Json j{{"pass", ok}, {"free_b", g2_json(free)}, {"b_order_4", g2_json(o4)}, {"b_order_6", g2_json(o6)},
         {"p3", g2_json(two)}};
  return {j, !ok};
}

Output lemma_e2x() {
  Json rows = Json::array();
  bool ok = true;
  for (auto [n, p] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
    const auto c = example_e2x(n, p);
    const bool pass = e2x_holds(c, n);
    ok = ok && pass;
    rows.push_back(Json{{"n", n}, {"p", p}, {"N", c.element.context().torsion}, {"dim", c.report.total},
                        {"fixed_dim", c.report.fixed_dim}, {"m_s", c.report.m_s},
                        {"distinct", c.report.degree()}, {"pass", pass}});
  }
  return {Json{{"pass", ok}, {"runs", rows}}, !ok};
}

Output lemma_ex5() {
  Json rows = Json::array();
  bool ok = true;
  auto add = [&](Ex5Variant v, int m, int p) {
    const auto c = example_ex5(v, m, p);
    const bool pass = ex5_holds(c, v, m);
    ok = ok && pass;
    rows.push_back(Json{{"variant", ex5_variant_name(v)}, {"m", m}, {"p", p}, {"module", module_name(c.spec)},
                        {"fixed_dim", c.report.fixed_dim}, {"m_s", c.report.m_s},
                        {"exceptional", c.report.exceptional ? Json(c.report.exceptional->str()) : Json(nullptr)},
                        {"pass", pass}});
  };
  for (int m : {2, 3, 4}) add(Ex5Variant::One, m, 0);
  for (int m : {2, 4}) add(Ex5Variant::OneNeg, m, 0);
  for (int m : {2, 3}) add(Ex5Variant::Two, m, 5);
  for (int m : {2, 3}) add(Ex5Variant::Three, m, 5);
  return {Json{{"pass", ok}, {"runs", rows}}, !ok};
}

Output lemma_os4() {
  Json rows = Json::array();
  bool ok = true;
  for (uint64_t p : {2, 3, 5}) {
    for (int i : {1, 2}) {
      const uint64_t order = p == 3 ? 8 : p + 1;
      const auto c = sl2_classify(p, i, order);
      ok = ok && c.almost_cyclic_with_mult2;
      rows.push_back(sl2_json(c));
    }
  }
  const auto neg = sl2_classify(3, 1, 4);
  ok = ok && !neg.almost_cyclic;
  rows.push_back(sl2_json(neg));
  return {Json{{"pass", ok}, {"classifications", rows}}, !ok};
}

Output lemma_s2s() {
  Json rows = Json::array();
  bool ok = true;
  for (uint64_t p : {2, 3}) {
    for (int d = 2; d <= 6; ++d) {
      for (int i = 1; i <= 12; ++i) {
        Json row{{"p", p}, {"d", d}, {"i", i}};
        bool pass = true;
        if (i % d == 0) {
          bool rejected = false;
          try {
            sl2_min_field(p, d, i);
          } catch (const Error&) {
            rejected = true;
          }
          row["min_field"] = "rejected";
          pass = rejected;
        } else {
          const int m = sl2_min_field(p, d, i);
          const int t = sl2_trace_field_degree(p, d, i);
          row["min_field"] = m;
          row["trace_field"] = t;
          pass = m == t;
        }
        row["pass"] = pass;
        ok = ok && pass;
        rows.push_back(row);
      }
    }
  }
  return {Json{{"pass", ok}, {"fields", rows}}, !ok};
}

Output lemma_x6x() {
  Json rows = Json::array();
  bool ok = true;
  for (uint64_t p : {2, 3, 5}) {
    const auto x = x6x_check(p, 1, 2, 2);
    ok = ok && x.one_for_rho_i && !x.one_for_rho_i_prime;
    rows.push_back(Json{{"p", p}, {"i", x.i}, {"i_prime", x.i_prime}, {"j", x.j}, {"hypotheses_met", x.hypotheses_met},
                        {"one_for_rho_i", x.one_for_rho_i}, {"one_for_rho_i_prime", x.one_for_rho_i_prime},
                        {"distinguished", x.distinguished}});
  }
  return {Json{{"pass", ok}, {"triples", rows}}, !ok};
}

Output lemma_es3() {
  Json rows = Json::array();
  Json exceptions = Json::array();
  bool ok = true;
  for (uint64_t q = 2; q <= 64; ++q) {
    if (prime_power_base(q).first == 0) continue;
    for (int r = 1; r <= 6; ++r) {
      const auto z = zsigmondy(q, r);
      const bool expect_exceptional = r == 1 && (q == 8 || prime_power_base(q + 1).first == 2);
      const bool as_claimed = expect_exceptional ? z.status == ZsigmondyResult::Status::ExceptionalPower
                                                 : z.status == ZsigmondyResult::Status::Prime;
      if (!as_claimed) exceptions.push_back(zsigmondy_json(q, r, z));
      if (q == 2 && r == 3) {
        ok = ok && z.status == ZsigmondyResult::Status::NoneFound;
      } else {
        ok = ok && as_claimed;
      }
      rows.push_back(Json{{"q", q}, {"r", r}, {"status", z.status_name()}, {"ell", z.ell}});
    }
  }
  return {Json{{"pass", ok}, {"exceptions", exceptions}, {"results", rows}}, !ok};
}

Output lemma_ev3() {
  Json rows = Json::array();
  bool ok = true;
  for (auto [q, r] : std::vector<std::pair<uint64_t, int>>{{2, 1}, {2, 2}, {3, 2}, {2, 3}}) {
    const auto w = ev3_witness(q, r);
    ok = ok && w.one_mult == 2 * r && w.complement_irreducible;
    rows.push_back(ev3_json(w));
  }
  bool rejected = false;
  try {
    ev3_witness(3, 1);
  } catch (const Error&) {
    rejected = true;
  }
  ok = ok && rejected;
  return {Json{{"pass", ok}, {"q3_r1_rejected", rejected}, {"witnesses", rows}}, !ok};
}

Output lemma_sharp() {
  Json rows = Json::array();
  bool ok = true;
  for (int p : {0, 3, 5, 7}) {
    for (const auto& r : a1_sharpness(p, 1, 40)) {
      ok = ok && r.pass;
      rows.push_back(Json{{"module", r.module}, {"p", r.p}, {"expected", r.expected}, {"found", r.found},
                          {"witness_order", r.witness_order ? Json(*r.witness_order) : Json(nullptr)},
                          {"witness_exponent", r.witness_exponent ? Json(*r.witness_exponent) : Json(nullptr)},
                          {"pass", r.pass}});
    }
  }
  return {Json{{"pass", ok}, {"modules", rows}}, !ok};
}

Output cmd_lemma(const std::string& id, const ScanArgs& a) {
  if (id == "e60") return lemma_e60();
  if (id == "11d") return lemma_11d();
  if (id == "2g3") return lemma_2g3();
  if (id == "e2x") return lemma_e2x();
  if (id == "ex5") return lemma_ex5();
  if (id == "os4") return lemma_os4();
  if (id == "s2s") return lemma_s2s();
  if (id == "x6x") return lemma_x6x();
  if (id == "es3") return lemma_es3();
  if (id == "ev3") return lemma_ev3();
  if (id == "sharp") return lemma_sharp();
  if (id == "aa8" || id == "we4" || id == "ep9") return scan_suites({id}, a);
  if (id == "scans") return scan_suites(scan_suite_names(), a);
  throw Error(ErrorCode::InvalidArgument, "unknown lemma id: " + id);
}

// ---------------------------------------------------------------- config files

// Expands key=value lines into --key=value tokens placed after the subcommand path.
std::vector<std::string> expand_config(const CLI::App& app, std::vector<std::string> args) {
  std::string path;
  for (size_t k = 0; k < args.size(); ++k) {
    if (args[k] == "--config" && k + 1 < args.size()) {
      path = args[k + 1];
      args.erase(args.begin() + static_cast<long>(k), args.begin() + static_cast<long>(k) + 2);
      break;
    }
    if (args[k].rfind("--config=", 0) == 0) {
      path = args[k].substr(9);
      args.erase(args.begin() + static_cast<long>(k));
      break;
    }
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read config file " + path);
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    line.erase(0, line.find_first_not_of(" \t"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::InvalidArgument, "config line without '=': " + line);
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    key.erase(key.find_last_not_of(" \t") + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    if (key.rfind("--", 0) != 0) key = "--" + key;
    tokens.push_back(key + "=" + value);
  }
  const CLI::App* cur = &app;
  size_t insert_at = 0;
  for (size_t k = 0; k < args.size(); ++k) {
    const CLI::App* next = nullptr;
    for (const auto* sub : cur->get_subcommands({})) {
      if (sub->get_name() == args[k]) next = sub;
    }
    if (next) {
      cur = next;
      insert_at = k + 1;
    }
  }
  args.insert(args.begin() + static_cast<long>(insert_at), tokens.begin(), tokens.end());
  return args;
}

void emit_error(const std::string& code, const std::string& message, const std::string& format, std::ostream& out) {
  Json j{{"error", Json{{"code", code}, {"message", message}}}};
  render(j, format == "csv" || format == "md" ? format : "json", out);
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eigenvalue spectra of torus elements and almost-cyclic verification"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.fallthrough();
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "md"}));
  app.add_option("--config", "Plain key=value file of default flag values");

  ModuleArgs mod;
  ScanArgs scan_args;
  bool char_given = false;
  std::string torus, lemma_id, variant = "1";
  int n = 2, p = 2, m = 2, d = 2, i = 1, r = 1;
  uint64_t q = 2, a_order = 0;
  int64_t b_order = 0;
  std::function<Output()> action;

  auto* rootsys = app.add_subcommand("rootsys", "Root system data")->require_subcommand(1);
  auto* info = rootsys->add_subcommand("info", "Roots, Cartan matrix and Weyl group order");
  add_group_options(info, mod, true);
  info->callback([&] { action = [&] { return cmd_rootsys_info(mod); }; });

  auto* weights = app.add_subcommand("weights", "Weight multisets")->require_subcommand(1);
  auto* compute = weights->add_subcommand("compute", "Weights with multiplicities of an irreducible module");
  add_module_options(compute, mod, false);
  compute->callback([&] { action = [&] { return cmd_weights(mod); }; });

  auto* spec = app.add_subcommand("spectrum", "Eigenvalue spectra")->require_subcommand(1);
  auto* eval = spec->add_subcommand("eval", "Spectrum of a torus element on a module");
  add_module_options(eval, mod, true);
  eval->add_option("--torus", torus, "Torus element as JSON, or @file")->required();
  eval->callback([&] { action = [&] { return cmd_spectrum(mod, torus); }; });

  auto add_scan_options = [&](CLI::App* sub) {
    sub->add_option("--samples", scan_args.samples, "Samples per run");
    sub->add_option("--seed", scan_args.seed, "Generator seed")->envname("ACYC_SEED");
    sub->add_option("--threads", scan_args.threads, "Worker threads (0: all cores)");
    sub->add_option("--witness-cap", scan_args.witness_cap, "Maximum witnesses kept");
  };

  auto* verify = app.add_subcommand("verify", "Table and lemma verification")->require_subcommand(1);
  auto* t1 = verify->add_subcommand("table1", "Zero-weight multiplicities and dimensions at characteristic 0");
  add_group_options(t1, mod, false);
  t1->callback([&] { action = [&] { return cmd_table(1, mod, false); }; });
  auto* t2 = verify->add_subcommand("table2", "Modules all of whose weights have multiplicity 1");
  add_group_options(t2, mod, false);
  auto* t2char = t2->add_option("--char", mod.p, "Characteristic");
  t2->callback([&] {
    char_given = t2char->count() > 0;
    action = [&] { return cmd_table(2, mod, char_given); };
  });
  auto* lemma = verify->add_subcommand("lemma", "Named lemma and example checks");
  lemma->add_option("--id", lemma_id, "e60, 11d, 2g3, e2x, ex5, os4, s2s, x6x, es3, ev3, sharp, aa8, we4, ep9, scans")
      ->required();
  add_scan_options(lemma);
  lemma->callback([&] { action = [&] { return cmd_lemma(lemma_id, scan_args); }; });

  auto* example = app.add_subcommand("example", "Extremal constructions")->require_subcommand(1);
  auto* e2x = example->add_subcommand("e2x", "A_n element with identity eigenvalue of multiplicity n+1");
  e2x->add_option("--n", n, "Rank n >= 2");
  e2x->add_option("--p", p, "Prime");
  e2x->callback([&] { action = [&] { return cmd_e2x(n, p); }; });
  auto* ex5 = example->add_subcommand("ex5", "A_n elements with a large eigenspace");
  ex5->add_option("--variant", variant, "1, 1-neg, 2 or 3");
  ex5->add_option("--m", m, "Parameter m");
  ex5->add_option("--p", p, "Characteristic");
  ex5->callback([&] { action = [&] { return cmd_ex5(variant, m, p); }; });
  auto* g2 = example->add_subcommand("g2", "G2 spectra on the two fundamental modules");
  g2->add_option("--variant", variant, "1 or 2");
  g2->add_option("--p", p, "Characteristic for variant 1");
  g2->add_option("--b-order", b_order, "Order of b; omit for a free parameter");
  g2->callback([&] {
    action = [&] {
      if (g2->get_option("--p")->count() == 0) p = 5;
      return cmd_g2(static_cast<int>(parse_int(variant)), p, b_order);
    };
  });

  auto* sc = app.add_subcommand("scan", "Seeded random search over torsion torus elements");
  add_module_options(sc, mod, true);
  sc->add_option("--order", scan_args.order, "Torsion order N");
  sc->add_option("--properties", scan_args.properties, "Comma-separated properties (default: applicable)");
  add_scan_options(sc);
  sc->callback([&] { action = [&] { return cmd_scan(mod, scan_args); }; });

  auto* finite = app.add_subcommand("finite", "Finite field arithmetic")->require_subcommand(1);
  auto* zs = finite->add_subcommand("zsigmondy", "Odd prime of q^r + 1 not dividing q^j - 1 for j <= r");
  zs->add_option("--q", q, "Prime power")->required();
  zs->add_option("--r", r, "Exponent")->required();
  zs->callback([&] { action = [&] { return Output{zsigmondy_json(q, r, zsigmondy(q, r)), false}; }; });
  auto* sl2 = finite->add_subcommand("sl2", "Field of definition and spectra for highest weight (1+p^i)w1");
  sl2->add_option("--p", p, "Prime")->required();
  sl2->add_option("--d", d, "Field degree");
  sl2->add_option("--i", i, "Twist exponent")->required();
  sl2->add_option("--a-order", a_order, "Order of a in s = diag(a, 1/a)");
  sl2->callback([&] {
    action = [&] {
      const auto up = static_cast<uint64_t>(p);
      Json j{{"p", p}, {"d", d}, {"i", i}, {"min_field", sl2_min_field(up, d, i)},
             {"trace_field", sl2_trace_field_degree(up, d, i)}};
      if (a_order > 0) j["classification"] = sl2_json(sl2_classify(up, i, a_order));
      return Output{j, false};
    };
  });
  auto* ev3 = finite->add_subcommand("ev3", "Almost-cyclic witness in GL_4r(q)");
  ev3->add_option("--q", q, "Prime power")->required();
  ev3->add_option("--r", r, "Parameter r")->required();
  ev3->callback([&] { action = [&] { return Output{ev3_json(ev3_witness(q, r)), false}; }; });

  try {
    auto args = expand_config(app, raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit_error("usage", e.what(), format, out);
    err << "acyc: " << e.what() << "\n";
    return kError;
  } catch (const Error& e) {
    emit_error(error_code_name(e.code()), e.what(), format, out);
    err << "acyc: " << e.what() << "\n";
    return kError;
  }
  try {
    const Output o = action();
    render(o.data, format, out);
    return o.violation ? kViolation : kOk;
  } catch (const Error& e) {
    emit_error(error_code_name(e.code()), e.what(), format, out);
    err << "acyc: " << error_code_name(e.code()) << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    emit_error("internal", e.what(), format, out);
    err << "acyc: internal: " << e.what() << "\n";
  }
  return kError;
}

}  // namespace acyc::cli
