#include "almostcyclic/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace acyc {

namespace {

int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  for (int k = 0; k < e; ++k) {
    if (r > INT64_MAX / b) throw Error(ErrorCode::InvalidArgument, "parameter overflows 64 bits");
    r *= b;
  }
  return r;
}

const ModuleSpec& strip_twists(const ModuleSpec& spec) {
  const ModuleSpec* m = &spec;
  while (m->kind == ModuleSpec::Kind::FrobeniusTwist) m = &m->parts[0];
  return *m;
}

// The restricted weight mu with lambda = p^k mu, if lambda has that shape.
std::optional<Weight> frobenius_core(const ModuleSpec& irr) {
  if (irr.p == 0) return irr.highest;
  auto parts = steinberg_decompose(irr.highest, irr.p);
  if (parts.size() != 1) return std::nullopt;
  return parts.front().first;
}

Construction make_construction(ModuleSpec spec, TorusElement s) {
  WeightMultiset ms = module_weights(spec);
  SpectrumReport r = spectrum(s, ms);
  return Construction{std::move(spec), std::move(s), std::move(ms), std::move(r)};
}

}  // namespace

// ---------------------------------------------------------------- bound check

std::pair<int64_t, std::string> module_bound(const ModuleSpec& spec) {
  const ModuleSpec& irr = strip_twists(spec);
  if (irr.kind != ModuleSpec::Kind::Irreducible) {
    throw Error(ErrorCode::InvalidArgument, "the multiplicity bound applies to irreducible modules only");
  }
  const RootSystem& rs = *irr.rs;
  if (rs.family() == Family::A) return {rs.rank() + 1, "A_n"};
  if (auto core = frobenius_core(irr)) {
    for (const auto& row : table1_rows(rs.family(), rs.rank(), irr.p)) {
      if (row.highest == *core) return {row.zero_mult, "Table1-twist"};
    }
  }
  if (rs.family() == Family::E && rs.rank() == 6) return {3, "E6"};
  return {2, "generic-2"};
}

Verdict check_bound(const ModuleSpec& spec, const TorusElement& s) {
  Verdict v;
  auto [bound, source] = module_bound(spec);
  v.bound = bound;
  v.bound_source = source;
  v.spectrum = spectrum(s, module_weights(spec));
  v.m_s = v.spectrum.m_s;
  v.applicable = is_regular(s) && v.spectrum.almost_cyclic;
  v.pass = !v.applicable || v.m_s <= v.bound;
  return v;
}

// ---------------------------------------------------------------- constructions

Construction example_e2x(int n, int p) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "need n >= 2");
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "need a prime p");
  auto rs = build_root_system(Family::A, n);
  const int64_t N = (ipow(p, n + 1) - 1) / (p - 1);
  const ValueContext ctx{0, N};
  std::vector<AbelianValue> eps;
  for (int i = 0; i <= n; ++i) eps.push_back(AbelianValue::root_of_unity(ctx, ipow(p, i) % N));
  auto s = torus_from_eps_values(rs, ctx, eps);
  Weight lambda = rs->fundamental(1) + p * rs->fundamental(n);
  return make_construction(ModuleSpec::irreducible(rs, p, lambda), std::move(s));
}

Ex5Variant parse_ex5_variant(const std::string& s) {
  if (s == "1") return Ex5Variant::One;
  if (s == "1-neg") return Ex5Variant::OneNeg;
  if (s == "2") return Ex5Variant::Two;
  if (s == "3") return Ex5Variant::Three;
  throw Error(ErrorCode::InvalidArgument, "variant must be one of 1, 1-neg, 2, 3");
}

const char* ex5_variant_name(Ex5Variant v) {
  switch (v) {
    case Ex5Variant::One: return "1";
    case Ex5Variant::OneNeg: return "1-neg";
    case Ex5Variant::Two: return "2";
    case Ex5Variant::Three: return "3";
  }
  return "?";
}

Construction example_ex5(Ex5Variant variant, int m, int p) {
  if (p < 0 || (p > 0 && !is_prime(p))) throw Error(ErrorCode::InvalidArgument, "p must be 0 or a prime");
  if (variant != Ex5Variant::One && p == 2) throw Error(ErrorCode::InvalidArgument, "this variant needs p != 2");
  switch (variant) {
    case Ex5Variant::One:
    case Ex5Variant::OneNeg: {
      if (m < 2) throw Error(ErrorCode::InvalidArgument, "need m >= 2");
      if (variant == Ex5Variant::OneNeg && m % 2 != 0) {
        throw Error(ErrorCode::InvalidArgument, "determinant (-1)^m must be 1: m must be even");
      }
      auto rs = build_root_system(Family::A, 2 * m - 1);
      const ValueContext ctx{m, variant == Ex5Variant::OneNeg ? 2 : 1};
      std::vector<AbelianValue> eps;
      for (int i = 0; i < m; ++i) {
        AbelianValue a = AbelianValue::generator(ctx, i);
        if (variant == Ex5Variant::OneNeg) a += AbelianValue::minus_one(ctx);
        eps.push_back(a);
      }
      for (int i = m - 1; i >= 0; --i) eps.push_back(-AbelianValue::generator(ctx, i));
      auto s = torus_from_eps_values(rs, ctx, eps);
      return make_construction(ModuleSpec::irreducible(rs, p, rs->fundamental(2)), std::move(s));
    }
    case Ex5Variant::Two: {
      if (m < 1) throw Error(ErrorCode::InvalidArgument, "need m >= 1");
      auto rs = build_root_system(Family::A, 2 * m);
      const ValueContext ctx{m, 1};
      std::vector<AbelianValue> eps{AbelianValue(ctx)};
      for (int i = 0; i < m; ++i) eps.push_back(AbelianValue::generator(ctx, i));
      for (int i = m - 1; i >= 0; --i) eps.push_back(-AbelianValue::generator(ctx, i));
      auto s = torus_from_eps_values(rs, ctx, eps);
      return make_construction(ModuleSpec::irreducible(rs, p, 2 * rs->fundamental(1)), std::move(s));
    }
    case Ex5Variant::Three: {
      if (m < 1) throw Error(ErrorCode::InvalidArgument, "need m >= 1");
      auto rs = build_root_system(Family::A, 2 * m - 1);
      const ValueContext ctx{m - 1, 4 * static_cast<int64_t>(m)};
      const AbelianValue b = AbelianValue::root_of_unity(ctx, 1);
      std::vector<AbelianValue> eps{b, b + AbelianValue::minus_one(ctx)};
      for (int i = 0; i < m - 1; ++i) {
        eps.push_back(b.times(2) + AbelianValue::generator(ctx, i));
        eps.push_back(-AbelianValue::generator(ctx, i));
      }
      auto s = torus_from_eps_values(rs, ctx, eps);
      return make_construction(ModuleSpec::irreducible(rs, p, 2 * rs->fundamental(1)), std::move(s));
    }
  }
  throw Error(ErrorCode::Internal, "unknown variant");
}

namespace {

G2Example g2_report(const RootSystemPtr& rs, int p, TorusElement s) {
  G2Example g{std::move(s), false, {}, {}, {}};
  g.regular = is_regular(g.element);
  g.v1 = spectrum(g.element, module_weights(ModuleSpec::irreducible(rs, p, rs->fundamental(1))));
  g.v2 = spectrum(g.element, module_weights(ModuleSpec::irreducible(rs, p, rs->fundamental(2))));
  Rational longest = 0;
  for (const auto& a : rs->roots()) longest = std::max(longest, rs->form(a, a));
  for (const auto& a : rs->roots()) {
    if (rs->form(a, a) == longest) g.long_root_values.push_back(g.element.evaluate(a));
  }
  std::sort(g.long_root_values.begin(), g.long_root_values.end());
  return g;
}

}  // namespace

G2Example example_g2_one(int p, std::optional<int64_t> b_order) {
  if (p == 2) throw Error(ErrorCode::InvalidArgument, "needs p != 2");
  if (p < 0 || (p > 0 && !is_prime(p))) throw Error(ErrorCode::InvalidArgument, "p must be 0 or a prime");
  auto rs = build_root_system(Family::G, 2);
  ValueContext ctx{1, 2};
  AbelianValue b;
  if (b_order) {
    if (*b_order <= 2) throw Error(ErrorCode::InvalidArgument, "b^2 = 1: element is not regular");
    ctx = ValueContext{0, std::lcm(*b_order, int64_t{2})};
    b = AbelianValue::root_of_unity(ctx, ctx.torsion / *b_order);
  } else {
    b = AbelianValue::generator(ctx, 0);
  }
  std::vector<AbelianValue> eps{AbelianValue::minus_one(ctx), AbelianValue(ctx), b};
  return g2_report(rs, p, torus_from_eps_values(rs, ctx, eps));
}

G2Example example_g2_two() {
  auto rs = build_root_system(Family::G, 2);
  const ValueContext ctx{1, 2};
  const AbelianValue a = AbelianValue::generator(ctx, 0);
  const AbelianValue h = AbelianValue::minus_one(ctx);
  std::vector<AbelianValue> eps{a.times(2) + h, a + h, AbelianValue(ctx)};
  return g2_report(rs, 3, torus_from_eps_values(rs, ctx, eps));
}

// ---------------------------------------------------------------- root linkage

QuadrupleReport quadruple_link_check(const RootSystemPtr& rs, const Weight& lambda) {
  QuadrupleReport r;
  r.module = rs->name() + " L" + lambda.str();
  const auto omega = premet_weight_set(*rs, lambda, 0);
  const size_t n = omega.size();
  r.weights = n;
  std::unordered_set<Weight, WeightHash> set(omega.begin(), omega.end());
  std::vector<std::vector<char>> linked(n, std::vector<char>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      for (const auto& a : rs->roots()) {
        if (set.count(omega[i] - a) && set.count(omega[j] - a)) {
          linked[i][j] = linked[j][i] = 1;
          break;
        }
      }
    }
  }
  r.pass = true;
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a + 1; b < n; ++b) {
      for (size_t c = b + 1; c < n; ++c) {
        for (size_t d = c + 1; d < n; ++d) {
          ++r.quadruples;
          const bool ok = linked[a][b] || linked[a][c] || linked[a][d] || linked[b][c] || linked[b][d] || linked[c][d];
          if (!ok && r.pass) {
            r.pass = false;
            r.counterexample = {omega[a], omega[b], omega[c], omega[d]};
          }
        }
      }
    }
  }
  return r;
}

QuadrupleReport lemma_e60_check() {
  auto rs = build_root_system(Family::E, 6);
  return quadruple_link_check(rs, rs->fundamental(1));
}

PairLinkReport lemma_11d_check(int n, int which) {
  if (n < 4) throw Error(ErrorCode::InvalidArgument, "needs D_n with n > 3");
  if (which != 1 && which != n - 1 && which != n) throw Error(ErrorCode::InvalidArgument, "weight must be w1, w_{n-1} or w_n");
  auto rs = build_root_system(Family::D, n);
  PairLinkReport r;
  r.module = rs->name() + " L" + rs->fundamental(which).str();
  const auto omega = premet_weight_set(*rs, rs->fundamental(which), 0);
  for (size_t i = 0; i < omega.size(); ++i) {
    for (size_t j = i + 1; j < omega.size(); ++j) {
      ++r.pairs;
      const bool linked = root_linked(*rs, omega, omega[i], omega[j]).has_value();
      const Weight sum = omega[i] + omega[j];
      bool exception = sum.is_zero() && (n % 2 == 0 || which == 1);
      if (n % 2 == 1 && which != 1) {
        const auto e = to_eps(*rs, sum);
        int nonzero = 0;
        bool unit = true;
        for (const auto& x : e) {
          if (x != 0) ++nonzero;
          if (x != 0 && x != 1 && x != -1) unit = false;
        }
        exception = exception || (nonzero == 1 && unit);
      }
      if (!linked) ++r.unlinked;
      if (!linked && !exception) ++r.mismatches;
      if (linked && exception) ++r.exceptions_linked;
    }
  }
  r.pass = r.mismatches == 0;
  return r;
}

// ---------------------------------------------------------------- tables

bool TableReport::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const TableRowReport& r) { return r.status == "pass"; });
}

std::vector<TableScope> default_table1_scope() {
  std::vector<TableScope> s;
  for (int n = 2; n <= 6; ++n) s.push_back({"A", n, 0});
  for (auto [f, n] : std::vector<std::pair<const char*, int>>{
           {"B", 2}, {"B", 3}, {"B", 4}, {"C", 2}, {"C", 3}, {"C", 4}, {"D", 4}, {"G", 2}, {"F", 4}, {"E", 6}, {"E", 7}, {"E", 8}}) {
    s.push_back({f, n, 0});
  }
  return s;
}

std::vector<TableScope> default_table2_scope() {
  std::vector<TableScope> s;
  for (auto [f, n] : std::vector<std::pair<const char*, int>>{
           {"A", 3}, {"B", 3}, {"C", 3}, {"B", 2}, {"C", 2}, {"D", 4}, {"G", 2}, {"E", 6}, {"E", 7}}) {
    s.push_back({f, n, 7});
  }
  s.push_back({"F", 4, 3});
  s.push_back({"G", 2, 3});
  return s;
}

TableReport verify_table1(const std::vector<TableScope>& scope) {
  TableReport rep;
  rep.which = 1;
  for (const auto& sc : scope) {
    auto rs = build_root_system(sc.family, sc.rank);
    for (const auto& row : table1_rows(rs->family(), rs->rank(), 0)) {
      TableRowReport r;
      r.group = rs->name();
      r.row = row.label;
      r.condition = row.condition;
      r.highest = row.highest;
      r.listed_zero_mult = row.listed_zero_mult;
      r.listed_dim = row.listed_dim;
      r.note = row.note;
      const auto ms = freudenthal(rs, row.highest);
      r.computed_zero_mult = ms.zero_mult();
      r.computed_dim = weyl_dimension(*rs, row.highest);
      r.weight_count = ms.size();
      r.all_mult_one = std::all_of(ms.entries().begin(), ms.entries().end(),
                                   [](const auto& e) { return e.first.is_zero() || e.second == 1; });
      const bool ok = r.computed_zero_mult == r.listed_zero_mult && r.computed_dim == r.listed_dim &&
                      BigInt(ms.total()) == r.computed_dim;
      r.status = ok ? "pass" : "fail";
      rep.rows.push_back(std::move(r));
    }
  }
  return rep;
}

TableReport verify_table2(const std::vector<TableScope>& scope) {
  TableReport rep;
  rep.which = 2;
  for (const auto& sc : scope) {
    auto rs = build_root_system(sc.family, sc.rank);
    for (const auto& entry : table2_entries(*rs, sc.p)) {
      TableRowReport r;
      r.group = rs->name();
      r.row = entry.family_label;
      r.p = sc.p;
      r.highest = entry.highest;
      try {
        const auto cat = resolve_restricted(*rs, entry.highest, sc.p);
        const auto ms = restricted_weight_multiset(rs, entry.highest, sc.p);
        r.computed_zero_mult = ms.zero_mult();
        r.computed_dim = ms.total();
        r.weight_count = ms.size();
        r.all_mult_one = std::all_of(ms.entries().begin(), ms.entries().end(), [](const auto& e) { return e.second == 1; });
        bool cross = true;
        if (cat.rule == WeightRule::Box) {
          const int64_t pn = ipow(sc.p, rs->rank());
          r.crosscheck = "box";
          cross = ms.total() == (pn + 1) / 2 || ms.total() == (pn - 1) / 2;
        } else {
          const auto f = freudenthal(rs, entry.highest);
          const bool free = std::all_of(f.entries().begin(), f.entries().end(), [](const auto& e) { return e.second == 1; });
          if (free) {
            r.crosscheck = "weyl";
            cross = f == ms && BigInt(ms.total()) == weyl_dimension(*rs, entry.highest);
          } else {
            r.crosscheck = "modular";
          }
        }
        r.note = std::string(weight_rule_name(cat.rule)) + " rule";
        r.status = r.all_mult_one && cross ? "pass" : "fail";
      } catch (const Error& e) {
        r.status = "skipped";
        r.note = e.what();
      }
      rep.rows.push_back(std::move(r));
    }
  }
  return rep;
}

// ---------------------------------------------------------------- sharpness

std::vector<SharpnessReport> a1_sharpness(int p, int k, int64_t max_order) {
  if (p < 0 || (p > 0 && !is_prime(p))) throw Error(ErrorCode::InvalidArgument, "p must be 0 or a prime");
  auto rs = build_root_system(Family::A, 1);
  std::vector<std::pair<std::string, int64_t>> mods;
  if (p != 2) mods.emplace_back("2w1", 2);
  if (p != 2 && p != 3) mods.emplace_back("3w1", 3);
  if (p > 0 && k >= 1) mods.emplace_back("(1+p^" + std::to_string(k) + ")w1", 1 + ipow(p, k));
  std::vector<SharpnessReport> out;
  for (const auto& [label, a] : mods) {
    SharpnessReport r;
    r.module = "A1 " + label;
    r.p = p;
    r.expected = 2;
    Weight lambda(1);
    lambda[0] = static_cast<int32_t>(a);
    const auto ms = module_weights(ModuleSpec::irreducible(rs, p, lambda));
    for (int64_t N = 3; N <= max_order; ++N) {
      for (int64_t e = 1; e < N; ++e) {
        const ValueContext ctx{0, N};
        auto s = torus_from_fundamental_values(rs, ctx, {AbelianValue::root_of_unity(ctx, e)});
        if (!is_regular(s)) continue;
        const auto rep = spectrum(s, ms);
        if (rep.almost_cyclic && rep.m_s > r.found) {
          r.found = rep.m_s;
          r.witness_order = N;
          r.witness_exponent = e;
        }
      }
    }
    r.pass = r.found == r.expected;
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------- scans

const char* property_name(Property p) {
  switch (p) {
    case Property::IB2: return "ib2";
    case Property::TT4: return "tt4";
    case Property::DO1: return "do1";
    case Property::HH7: return "hh7";
    case Property::AA8: return "aa8";
    case Property::WE4: return "we4";
    case Property::EP9: return "ep9";
    case Property::C99: return "c99";
  }
  return "?";
}

std::vector<Property> all_properties() {
  return {Property::IB2, Property::TT4, Property::DO1, Property::HH7,
          Property::AA8, Property::WE4, Property::EP9, Property::C99};
}

std::optional<Property> parse_property(const std::string& s) {
  for (auto p : all_properties()) {
    if (s == property_name(p)) return p;
  }
  return std::nullopt;
}

namespace {

bool is_aa8_module(const ModuleSpec& spec) {
  if (spec.kind != ModuleSpec::Kind::DirectSum || spec.parts.size() != 2) return false;
  const RootSystem& rs = *spec.rs;
  if (rs.family() != Family::A || rs.rank() < 3) return false;
  const int n = rs.rank() + 1;
  const auto& a = spec.parts[0];
  const auto& b = spec.parts[1];
  return a.kind == ModuleSpec::Kind::Irreducible && b.kind == ModuleSpec::Kind::Irreducible &&
         a.highest == rs.fundamental(2) && b.highest == rs.fundamental(n - 2);
}

bool is_we4_module(const ModuleSpec& spec) {
  return spec.kind == ModuleSpec::Kind::Irreducible && spec.rs->family() == Family::A && spec.p != 2 &&
         spec.highest == 2 * spec.rs->fundamental(1);
}

// Index i with highest weight w_i, or 0.
int ep9_index(const ModuleSpec& spec) {
  if (spec.kind != ModuleSpec::Kind::Irreducible || spec.rs->family() != Family::A) return 0;
  for (int i = 1; i <= spec.rs->rank(); ++i) {
    if (spec.highest == spec.rs->fundamental(i)) return i;
  }
  return 0;
}

bool do1_module(const ModuleSpec& spec) {
  if (spec.kind != ModuleSpec::Kind::Irreducible || spec.highest.is_zero()) return false;
  if (spec.p == 0) return true;
  return spec.p > spec.rs->e_value() && spec.highest.is_restricted(spec.p);
}

struct ScanContext {
  const ModuleSpec* spec;
  const WeightMultiset* ms;
  std::vector<Property> props;
  std::unordered_set<Weight, WeightHash> support;
  int n = 0;
  int64_t dim = 0;
  int64_t zero_mult = 0;
  bool self_dual = false;
  bool irreducible = false;
  bool do1 = false;
  int64_t we4_bound = 0;
  int64_t ep9_bound = 0;
  std::vector<int64_t> nearly_natural;
};

bool has(const std::vector<Property>& v, Property p) { return std::find(v.begin(), v.end(), p) != v.end(); }

std::string describe(const SpectrumReport& r) {
  std::ostringstream os;
  os << "m_s=" << r.m_s << " fixed_dim=" << r.fixed_dim;
  if (r.exceptional) os << " exceptional=" << r.exceptional->str();
  return os.str();
}

void finish(ScanReport& r, size_t cap) {
  std::sort(r.witnesses.begin(), r.witnesses.end(), [](const ScanWitness& a, const ScanWitness& b) {
    return a.m_s != b.m_s ? a.m_s > b.m_s : a.index < b.index;
  });
  if (r.witnesses.size() > cap) r.witnesses.resize(cap);
  std::sort(r.violations.begin(), r.violations.end(), [](const ScanViolation& a, const ScanViolation& b) {
    return a.index != b.index ? a.index < b.index : a.property < b.property;
  });
}

void scan_range(const ScanContext& c, const ScanOptions& o, uint64_t begin, uint64_t end, ScanReport& out) {
  const RootSystemPtr& rs = c.spec->rs;
  for (uint64_t idx = begin; idx < end; ++idx) {
    const TorusElement s = sample_torus(rs, o.N, o.seed, idx);
    std::vector<int64_t> exps;
    for (int i = 0; i < c.n; ++i) exps.push_back(s.image(i).torsion());
    const SpectrumReport r = spectrum(s, *c.ms);
    const bool regular = is_regular(s);
    ++out.samples;
    if (regular) ++out.regular_count;
    if (r.almost_cyclic) ++out.almost_cyclic_count;
    const bool reg_ac = regular && r.almost_cyclic;
    auto violate = [&](Property p, const std::string& detail) {
      out.violations.push_back({property_name(p), idx, exps, detail});
    };
    if (reg_ac) {
      ++out.regular_almost_cyclic_count;
      out.max_m_s = std::max(out.max_m_s, r.m_s);
      if (r.m_s > 1) {
        out.witnesses.push_back({idx, exps, r.m_s, r.fixed_dim, r.exceptional ? r.exceptional->str() : ""});
      }
    }
    if (has(c.props, Property::IB2) && c.irreducible && reg_ac && r.m_s > c.n + 1) {
      violate(Property::IB2, describe(r) + " exceeds n+1=" + std::to_string(c.n + 1));
    }
    if (has(c.props, Property::TT4) && c.self_dual && r.almost_cyclic) {
      for (const auto& [v, m] : r.eigenvalues) {
        if (m > 1 && !v.is_involution()) violate(Property::TT4, "value " + v.str() + " has multiplicity " + std::to_string(m));
      }
    }
    if (has(c.props, Property::DO1) && c.do1 && reg_ac && c.zero_mult >= 1 && r.fixed_dim != c.zero_mult) {
      violate(Property::DO1, describe(r) + " but zero weight multiplicity " + std::to_string(c.zero_mult));
    }
    if (has(c.props, Property::HH7) && reg_ac && r.exceptional) {
      std::vector<Weight> cls;
      for (const auto& [w, m] : c.ms->entries()) {
        if (s.evaluate(w) == *r.exceptional) cls.push_back(w);
      }
      for (size_t i = 0; i < cls.size(); ++i) {
        for (size_t j = i + 1; j < cls.size(); ++j) {
          for (const auto& a : rs->roots()) {
            if (c.support.count(cls[i] - a) && c.support.count(cls[j] - a)) {
              violate(Property::HH7, cls[i].str() + " and " + cls[j].str() + " linked by " + a.str());
              break;
            }
          }
        }
      }
    }
    if (has(c.props, Property::AA8) && is_aa8_module(*c.spec) && reg_ac && r.m_s > 2) {
      violate(Property::AA8, describe(r) + " exceeds 2");
    }
    if (has(c.props, Property::WE4) && c.we4_bound > 0 && regular && r.m_s > c.we4_bound) {
      violate(Property::WE4, describe(r) + " exceeds " + std::to_string(c.we4_bound));
    }
    if (has(c.props, Property::EP9) && c.ep9_bound > 0 && reg_ac && r.m_s > c.ep9_bound) {
      violate(Property::EP9, describe(r) + " exceeds k=" + std::to_string(c.ep9_bound));
    }
    if (has(c.props, Property::C99) && c.irreducible && !regular && r.almost_cyclic && r.m_s > 1 && !is_central(s) &&
        std::find(c.nearly_natural.begin(), c.nearly_natural.end(), c.dim) == c.nearly_natural.end()) {
      violate(Property::C99, describe(r) + " on a module of dimension " + std::to_string(c.dim));
    }
    if (out.witnesses.size() > 4 * o.witness_cap) finish(out, o.witness_cap);
  }
  finish(out, o.witness_cap);
}

}  // namespace

std::vector<Property> applicable_properties(const ModuleSpec& spec) {
  std::vector<Property> out;
  const ModuleSpec& core = strip_twists(spec);
  const bool irr = core.kind == ModuleSpec::Kind::Irreducible;
  if (irr) out.push_back(Property::IB2);
  out.push_back(Property::TT4);
  if (spec.kind == ModuleSpec::Kind::Irreducible && do1_module(spec)) out.push_back(Property::DO1);
  out.push_back(Property::HH7);
  if (is_aa8_module(spec)) out.push_back(Property::AA8);
  if (is_we4_module(spec)) out.push_back(Property::WE4);
  if (ep9_index(spec) > 0) out.push_back(Property::EP9);
  if (irr) out.push_back(Property::C99);
  return out;
}

std::vector<int64_t> nearly_natural_dims(const RootSystem& rs, int p) {
  const int64_t n = rs.rank();
  std::vector<int64_t> d;
  switch (rs.family()) {
    case Family::A: d.push_back(n + 1); break;
    case Family::B: d.push_back(p == 2 ? 2 * n : 2 * n + 1); break;
    case Family::C: d.push_back(2 * n); break;
    case Family::D: d.push_back(2 * n); break;
    default: break;
  }
  if (rs.family() == Family::A && n == 3) d.push_back(6);
  if (rs.family() == Family::B && n == 2) d.push_back(4);
  if ((rs.family() == Family::B || rs.family() == Family::C) && n == 2 && p != 2) d.push_back(5);
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

ScanReport scan(const ModuleSpec& spec, const ScanOptions& opts) {
  if (opts.N < 2) throw Error(ErrorCode::InvalidArgument, "scan needs torsion order N >= 2");
  if (spec.p > 0 && opts.N % spec.p == 0) {
    throw Error(ErrorCode::InvalidArgument, "semisimple elements have order prime to the characteristic");
  }
  const WeightMultiset ms = module_weights(spec);
  ScanContext c;
  c.spec = &spec;
  c.ms = &ms;
  c.props = opts.properties.empty() ? applicable_properties(spec) : opts.properties;
  const auto support = ms.support();
  c.support = std::unordered_set<Weight, WeightHash>(support.begin(), support.end());
  c.n = spec.rs->rank();
  c.dim = ms.total();
  c.zero_mult = ms.zero_mult();
  c.self_dual = ms.is_self_dual();
  c.irreducible = strip_twists(spec).kind == ModuleSpec::Kind::Irreducible;
  c.do1 = spec.kind == ModuleSpec::Kind::Irreducible && do1_module(spec);
  if (is_we4_module(spec)) c.we4_bound = (c.n + 3) / 2;
  if (int i = ep9_index(spec)) {
    const int ii = std::min(i, c.n + 1 - i);
    c.ep9_bound = (c.n + 1) / ii;
  }
  c.nearly_natural = nearly_natural_dims(*spec.rs, spec.p);

  ScanReport rep;
  rep.module = spec.rs->name() + " " + spec.label() + (spec.p ? " p=" + std::to_string(spec.p) : " p=0");
  rep.N = opts.N;
  rep.seed = opts.seed;
  for (auto p : c.props) rep.properties.push_back(property_name(p));

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<uint64_t>(threads, std::max<uint64_t>(1, opts.count / 256)));
  std::vector<ScanReport> parts(threads);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const uint64_t chunk = (opts.count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const uint64_t b = std::min<uint64_t>(opts.count, t * chunk);
    const uint64_t e = std::min<uint64_t>(opts.count, b + chunk);
    auto job = [&, t, b, e] {
      try {
        scan_range(c, opts, b, e, parts[t]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    };
    if (threads == 1) {
      job();
    } else {
      pool.emplace_back(job);
    }
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  for (auto& part : parts) {
    rep.samples += part.samples;
    rep.regular_count += part.regular_count;
    rep.almost_cyclic_count += part.almost_cyclic_count;
    rep.regular_almost_cyclic_count += part.regular_almost_cyclic_count;
    rep.max_m_s = std::max(rep.max_m_s, part.max_m_s);
    rep.witnesses.insert(rep.witnesses.end(), part.witnesses.begin(), part.witnesses.end());
    rep.violations.insert(rep.violations.end(), part.violations.begin(), part.violations.end());
    finish(rep, opts.witness_cap);
  }
  finish(rep, opts.witness_cap);
  return rep;
}

std::vector<std::string> scan_suite_names() { return {"table2", "aa8", "we4", "ep9"}; }

std::vector<int64_t> scan_orders(int p) {
  std::vector<int64_t> out;
  for (int64_t N : {12, 30, 60, 120, 15, 45, 63, 105, 20, 40, 56, 110, 36, 84, 112}) {
    if (out.size() < 4 && (p == 0 || N % p != 0)) out.push_back(N);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ScanJob> scan_suite(const std::string& name) {
  std::vector<ScanJob> jobs;
  if (name == "table2") {
    const std::vector<std::pair<std::string, int>> groups = {{"A", 1}, {"A", 2}, {"A", 3}, {"A", 4}, {"B", 2},
                                                             {"C", 2}, {"C", 3}, {"G", 2}, {"D", 4}};
    for (const auto& [f, n] : groups) {
      auto rs = build_root_system(f, n);
      for (int p : {2, 3, 5}) {
        for (const auto& e : table2_entries(*rs, p)) jobs.push_back({name, ModuleSpec::irreducible(rs, p, e.highest)});
      }
    }
  } else if (name == "aa8") {
    for (int n = 5; n <= 8; ++n) {
      auto rs = build_root_system(Family::A, n - 1);
      jobs.push_back({name, ModuleSpec::direct_sum({ModuleSpec::irreducible(rs, 0, rs->fundamental(2)),
                                                    ModuleSpec::irreducible(rs, 0, rs->fundamental(n - 2))})});
    }
  } else if (name == "we4") {
    for (int n = 1; n <= 6; ++n) {
      auto rs = build_root_system(Family::A, n);
      jobs.push_back({name, ModuleSpec::irreducible(rs, 0, 2 * rs->fundamental(1))});
    }
  } else if (name == "ep9") {
    for (int n = 1; n <= 6; ++n) {
      auto rs = build_root_system(Family::A, n);
      for (int i = 1; i <= n; ++i) jobs.push_back({name, ModuleSpec::irreducible(rs, 0, rs->fundamental(i))});
    }
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown scan suite: " + name);
  }
  return jobs;
}

}  // namespace acyc
