#include "almostcyclic/weightcalc.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace acyc {

// ---------------------------------------------------------------- WeightMultiset

WeightMultiset::WeightMultiset(RootSystemPtr rs) : rs_(std::move(rs)) {
  if (!rs_) throw Error(ErrorCode::InvalidArgument, "weight multiset needs a root system");
}

void WeightMultiset::add(const Weight& w, int64_t mult) {
  rs_->check(w);
  if (mult <= 0) throw Error(ErrorCode::InvalidArgument, "multiplicities must be positive");
  entries_[w] += mult;
}

int64_t WeightMultiset::mult(const Weight& w) const {
  auto it = entries_.find(w);
  return it == entries_.end() ? 0 : it->second;
}

int64_t WeightMultiset::zero_mult() const { return mult(rs_->zero()); }

int64_t WeightMultiset::total() const {
  int64_t t = 0;
  for (const auto& [w, m] : entries_) t += m;
  return t;
}

std::vector<Weight> WeightMultiset::support() const {
  std::vector<Weight> s;
  s.reserve(entries_.size());
  for (const auto& [w, m] : entries_) s.push_back(w);
  return s;
}

bool WeightMultiset::is_weyl_invariant() const {
  for (const auto& [w, m] : entries_) {
    for (int i = 0; i < rs_->rank(); ++i) {
      if (mult(rs_->reflect(w, i)) != m) return false;
    }
  }
  return true;
}

bool WeightMultiset::is_self_dual() const {
  for (const auto& [w, m] : entries_) {
    if (mult(-w) != m) return false;
  }
  return true;
}

WeightMultiset WeightMultiset::scaled(int factor) const {
  WeightMultiset out(rs_);
  for (const auto& [w, m] : entries_) out.entries_[factor * w] += m;
  return out;
}

// ---------------------------------------------------------------- ModuleSpec

ModuleSpec ModuleSpec::irreducible(RootSystemPtr rs, int p, const Weight& lambda) {
  if (!rs) throw Error(ErrorCode::InvalidArgument, "module needs a root system");
  rs->check(lambda);
  if (!lambda.is_dominant()) throw Error(ErrorCode::NotDominant, "highest weight " + lambda.str() + " is not dominant");
  if (p < 0 || (p > 0 && !is_prime(p))) {
    throw Error(ErrorCode::InvalidArgument, "characteristic must be 0 or a prime, got " + std::to_string(p));
  }
  ModuleSpec m;
  m.rs = std::move(rs);
  m.p = p;
  m.kind = Kind::Irreducible;
  m.highest = lambda;
  return m;
}

namespace {

void check_parts(const std::vector<ModuleSpec>& parts) {
  if (parts.empty()) throw Error(ErrorCode::InvalidArgument, "composite module needs at least one part");
  for (const auto& q : parts) {
    if (q.rs->name() != parts.front().rs->name() || q.p != parts.front().p) {
      throw Error(ErrorCode::InvalidArgument, "composite module parts must share root system and characteristic");
    }
  }
}

}  // namespace

ModuleSpec ModuleSpec::tensor(std::vector<ModuleSpec> parts) {
  check_parts(parts);
  ModuleSpec m;
  m.rs = parts.front().rs;
  m.p = parts.front().p;
  m.kind = Kind::Tensor;
  m.highest = m.rs->zero();
  m.parts = std::move(parts);
  return m;
}

ModuleSpec ModuleSpec::direct_sum(std::vector<ModuleSpec> parts) {
  check_parts(parts);
  ModuleSpec m;
  m.rs = parts.front().rs;
  m.p = parts.front().p;
  m.kind = Kind::DirectSum;
  m.highest = m.rs->zero();
  m.parts = std::move(parts);
  return m;
}

ModuleSpec ModuleSpec::frobenius_twist(ModuleSpec inner, int k) {
  if (inner.p <= 0) throw Error(ErrorCode::InvalidArgument, "Frobenius twist needs positive characteristic");
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "Frobenius twist exponent must be at least 1");
  ModuleSpec m;
  m.rs = inner.rs;
  m.p = inner.p;
  m.kind = Kind::FrobeniusTwist;
  m.highest = m.rs->zero();
  m.twist = k;
  m.parts.push_back(std::move(inner));
  return m;
}

std::string ModuleSpec::label() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Irreducible: os << "L" << highest.str(); break;
    case Kind::FrobeniusTwist: os << "Fr^" << twist << "(" << parts[0].label() << ")"; break;
    case Kind::Tensor:
    case Kind::DirectSum:
      for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << (kind == Kind::Tensor ? " x " : " + ");
        os << parts[i].label();
      }
      break;
  }
  return os.str();
}

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------- weight sets

namespace {

std::vector<Weight> orbit_union(const RootSystem& rs, const std::vector<Weight>& dominant) {
  std::vector<Weight> out;
  for (const auto& mu : dominant) {
    auto o = weyl_orbit(rs, mu);
    out.insert(out.end(), o.begin(), o.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Weight> premet_weight_set(const RootSystem& rs, const Weight& lambda, int p) {
  rs.check(lambda);
  if (!lambda.is_dominant()) throw Error(ErrorCode::NotDominant, "weight " + lambda.str() + " is not dominant");
  if (p != 0) {
    if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "characteristic must be 0 or a prime");
    if (p <= rs.e_value()) {
      throw Error(ErrorCode::Unsupported, "weight set theorem needs p > e(G) = " + std::to_string(rs.e_value()) +
                                              "; use the restricted catalog");
    }
    if (!lambda.is_restricted(p)) {
      throw Error(ErrorCode::Unsupported, "weight " + lambda.str() + " is not " + std::to_string(p) + "-restricted");
    }
  }
  return orbit_union(rs, dominant_subweights(rs, lambda));
}

WeightMultiset freudenthal(const RootSystemPtr& rsp, const Weight& lambda) {
  const RootSystem& rs = *rsp;
  const auto dominant = dominant_subweights(rs, lambda);
  const int n = rs.rank();
  std::unordered_map<Weight, int64_t, WeightHash> m;
  m[lambda] = 1;
  const Weight rho = rs.rho();
  for (size_t idx = 1; idx < dominant.size(); ++idx) {
    const Weight& mu = dominant[idx];
    // (lambda+rho)^2 - (mu+rho)^2 = (lambda-mu, lambda+mu+2rho)
    auto c = rs.root_coords_scaled(lambda - mu);
    const Weight s = lambda + mu + 2 * rho;
    int64_t denom = 0;
    for (int j = 0; j < n; ++j) denom += c[j] / rs.inverse_cartan_denominator() * rs.length_factor(j) * s[j];
    int64_t num = 0;
    for (size_t a = 0; a < rs.positive_roots().size(); ++a) {
      const Weight& alpha = rs.positive_roots()[a];
      Weight nu = mu;
      for (;;) {
        nu += alpha;
        auto it = m.find(rs.dominant_conjugate(nu));
        if (it == m.end()) break;
        num += rs.pair_with_positive_root(nu, a) * it->second;
      }
    }
    num *= 2;
    if (denom <= 0 || num % denom != 0) {
      throw Error(ErrorCode::Internal, "Freudenthal recursion produced a non-integral multiplicity");
    }
    if (num > 0) m[mu] = num / denom;
  }
  WeightMultiset out(rsp);
  for (const auto& mu : dominant) {
    auto it = m.find(mu);
    if (it == m.end()) continue;
    for (const auto& w : weyl_orbit(rs, mu)) out.add(w, it->second);
  }
  return out;
}

BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  rs.check(lambda);
  if (!lambda.is_dominant()) throw Error(ErrorCode::NotDominant, "weight " + lambda.str() + " is not dominant");
  const Weight lr = lambda + rs.rho();
  const Weight rho = rs.rho();
  Rational d = 1;
  for (size_t a = 0; a < rs.positive_roots().size(); ++a) {
    d *= Rational(rs.pair_with_positive_root(lr, a), rs.pair_with_positive_root(rho, a));
  }
  if (boost::multiprecision::denominator(d) != 1) throw Error(ErrorCode::Internal, "non-integral Weyl dimension");
  return boost::multiprecision::numerator(d);
}

std::vector<std::pair<Weight, int>> steinberg_decompose(const Weight& lambda, int p) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "Steinberg expansion needs a prime p");
  if (!lambda.is_dominant()) throw Error(ErrorCode::NotDominant, "weight " + lambda.str() + " is not dominant");
  std::vector<std::pair<Weight, int>> out;
  Weight rest = lambda;
  for (int k = 0; !rest.is_zero(); ++k) {
    Weight digit(rest.rank());
    for (int i = 0; i < rest.rank(); ++i) {
      digit[i] = rest[i] % p;
      rest[i] /= p;
    }
    if (!digit.is_zero()) out.emplace_back(digit, k);
  }
  if (out.empty()) out.emplace_back(lambda, 0);
  return out;
}

WeightMultiset tensor_multiset(const WeightMultiset& a, const WeightMultiset& b) {
  if (a.root_system().name() != b.root_system().name()) {
    throw Error(ErrorCode::InvalidArgument, "tensor factors over different root systems");
  }
  std::unordered_map<Weight, int64_t, WeightHash> acc;
  for (const auto& [x, mx] : a.entries()) {
    for (const auto& [y, my] : b.entries()) acc[x + y] += mx * my;
  }
  WeightMultiset out(a.root_system_ptr());
  for (const auto& [w, m] : acc) out.add(w, m);
  return out;
}

WeightMultiset direct_sum_multiset(const WeightMultiset& a, const WeightMultiset& b) {
  if (a.root_system().name() != b.root_system().name()) {
    throw Error(ErrorCode::InvalidArgument, "direct summands over different root systems");
  }
  WeightMultiset out = a;
  for (const auto& [w, m] : b.entries()) out.add(w, m);
  return out;
}

WeightMultiset module_weights(const ModuleSpec& spec) {
  switch (spec.kind) {
    case ModuleSpec::Kind::Irreducible: {
      if (spec.p == 0) return freudenthal(spec.rs, spec.highest);
      WeightMultiset out(spec.rs);
      out.add(spec.rs->zero());
      int64_t scale = 1;
      int last = 0;
      for (const auto& [digit, k] : steinberg_decompose(spec.highest, spec.p)) {
        for (; last < k; ++last) scale *= spec.p;
        out = tensor_multiset(out, restricted_weight_multiset(spec.rs, digit, spec.p).scaled(static_cast<int>(scale)));
      }
      return out;
    }
    case ModuleSpec::Kind::FrobeniusTwist: {
      int64_t scale = 1;
      for (int k = 0; k < spec.twist; ++k) scale *= spec.p;
      return module_weights(spec.parts[0]).scaled(static_cast<int>(scale));
    }
    case ModuleSpec::Kind::Tensor: {
      WeightMultiset out = module_weights(spec.parts[0]);
      for (size_t i = 1; i < spec.parts.size(); ++i) out = tensor_multiset(out, module_weights(spec.parts[i]));
      return out;
    }
    case ModuleSpec::Kind::DirectSum: {
      WeightMultiset out = module_weights(spec.parts[0]);
      for (size_t i = 1; i < spec.parts.size(); ++i) out = direct_sum_multiset(out, module_weights(spec.parts[i]));
      return out;
    }
  }
  throw Error(ErrorCode::Internal, "unknown module kind");
}

// ---------------------------------------------------------------- catalog

const char* weight_rule_name(WeightRule r) {
  switch (r) {
    case WeightRule::Premet: return "premet";
    case WeightRule::CharZeroSet: return "char0-set";
    case WeightRule::OrbitPlusZero: return "orbit+0";
    case WeightRule::OrbitOnly: return "orbit";
    case WeightRule::Box: return "box";
  }
  return "?";
}

std::vector<Weight> c_box_half(const RootSystem& rs, const Weight& lambda, int p) {
  if (rs.family() != Family::C || p % 2 == 0) {
    throw Error(ErrorCode::InvalidArgument, "box description needs type C and odd p");
  }
  const int n = rs.rank();
  const int h = (p - 1) / 2;
  Rational s = 0;
  for (const auto& x : to_eps(rs, lambda)) s += x;
  const int parity = static_cast<int>(boost::multiprecision::numerator(s) % 2 + 2) % 2;
  std::vector<Weight> out;
  std::vector<int> l(n, -h);
  for (;;) {
    int sum = std::accumulate(l.begin(), l.end(), 0);
    if (((sum % 2) + 2) % 2 == parity) {
      Weight w(n);
      for (int i = 0; i + 1 < n; ++i) w[i] = l[i] - l[i + 1];
      w[n - 1] = l[n - 1];
      out.push_back(w);
    }
    int i = 0;
    while (i < n && l[i] == h) l[i++] = -h;
    if (i == n) break;
    ++l[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

WeightMultiset restricted_weight_multiset(const RootSystemPtr& rsp, const Weight& lambda, int p) {
  const RootSystem& rs = *rsp;
  const CatalogEntry e = resolve_restricted(rs, lambda, p);
  std::vector<Weight> set;
  switch (e.rule) {
    case WeightRule::Premet: set = premet_weight_set(rs, lambda, p); break;
    case WeightRule::CharZeroSet: set = premet_weight_set(rs, lambda, 0); break;
    case WeightRule::OrbitOnly: set = weyl_orbit(rs, lambda); break;
    case WeightRule::OrbitPlusZero:
      set = weyl_orbit(rs, lambda);
      set.push_back(rs.zero());
      break;
    case WeightRule::Box: {
      set = c_box_half(rs, lambda, p);
      if (!std::binary_search(set.begin(), set.end(), lambda)) {
        throw Error(ErrorCode::Internal, "box half does not contain its highest weight");
      }
      break;
    }
  }
  WeightMultiset out(rsp);
  for (const auto& w : set) out.add(w, w.is_zero() ? e.zero_mult : 1);
  if (e.dim && out.total() != *e.dim) {
    throw Error(ErrorCode::Internal, "catalog row " + e.row + " has dimension " + std::to_string(*e.dim) +
                                         " but its weights count " + std::to_string(out.total()));
  }
  if (!out.is_weyl_invariant()) throw Error(ErrorCode::Internal, "catalog multiset is not W-invariant");
  return out;
}

}  // namespace acyc
