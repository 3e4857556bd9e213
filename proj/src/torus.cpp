#include "almostcyclic/torus.hpp"

#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace acyc {

namespace {

int64_t mod(int64_t a, int64_t n) {
  int64_t r = a % n;
  return r < 0 ? r + n : r;
}

void same_context(const ValueContext& a, const ValueContext& b) {
  if (!(a == b)) throw Error(ErrorCode::ContextMismatch, "values live in different value groups");
}

bool integral(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

int64_t to_i64(const Rational& q) { return static_cast<int64_t>(boost::multiprecision::numerator(q)); }

}  // namespace

// ---------------------------------------------------------------- AbelianValue

AbelianValue::AbelianValue(ValueContext ctx) : ctx_(ctx), free_(static_cast<size_t>(ctx.free), 0) {
  if (ctx.free < 0 || ctx.torsion < 1) throw Error(ErrorCode::InvalidArgument, "invalid value context");
}

AbelianValue::AbelianValue(ValueContext ctx, std::vector<int64_t> free, int64_t torsion) : AbelianValue(ctx) {
  if (static_cast<int>(free.size()) != ctx.free) {
    throw Error(ErrorCode::ContextMismatch, "free part has the wrong length for its context");
  }
  free_ = std::move(free);
  t_ = mod(torsion, ctx.torsion);
}

AbelianValue AbelianValue::generator(ValueContext ctx, int i) {
  AbelianValue v(ctx);
  if (i < 0 || i >= ctx.free) throw Error(ErrorCode::InvalidArgument, "free generator index out of range");
  v.free_[i] = 1;
  return v;
}

AbelianValue AbelianValue::root_of_unity(ValueContext ctx, int64_t exponent) {
  AbelianValue v(ctx);
  v.t_ = mod(exponent, ctx.torsion);
  return v;
}

AbelianValue AbelianValue::minus_one(ValueContext ctx) {
  if (ctx.torsion % 2 != 0) throw Error(ErrorCode::InvalidArgument, "-1 needs an even torsion order");
  return root_of_unity(ctx, ctx.torsion / 2);
}

bool AbelianValue::is_identity() const {
  if (t_ != 0) return false;
  for (auto x : free_) {
    if (x != 0) return false;
  }
  return true;
}

bool AbelianValue::is_involution() const { return times(2).is_identity(); }

AbelianValue& AbelianValue::operator+=(const AbelianValue& o) {
  same_context(ctx_, o.ctx_);
  for (size_t i = 0; i < free_.size(); ++i) free_[i] += o.free_[i];
  t_ = mod(t_ + o.t_, ctx_.torsion);
  return *this;
}

AbelianValue& AbelianValue::operator-=(const AbelianValue& o) {
  same_context(ctx_, o.ctx_);
  for (size_t i = 0; i < free_.size(); ++i) free_[i] -= o.free_[i];
  t_ = mod(t_ - o.t_, ctx_.torsion);
  return *this;
}

AbelianValue AbelianValue::operator-() const { return AbelianValue(ctx_) - *this; }

AbelianValue AbelianValue::times(int64_t k) const {
  AbelianValue v = *this;
  for (auto& x : v.free_) x *= k;
  v.t_ = static_cast<int64_t>(
      mod(static_cast<int64_t>((static_cast<__int128>(t_) * k) % ctx_.torsion), ctx_.torsion));
  return v;
}

std::optional<AbelianValue> AbelianValue::divide(int64_t d) const {
  if (d == 0) return std::nullopt;
  AbelianValue h(ctx_);
  for (size_t i = 0; i < free_.size(); ++i) {
    if (free_[i] % d != 0) return std::nullopt;
    h.free_[i] = free_[i] / d;
  }
  const int64_t n = ctx_.torsion;
  for (int64_t x = 0; x < n; ++x) {
    if (mod(static_cast<int64_t>((static_cast<__int128>(x) * d) % n), n) == t_) {
      h.t_ = x;
      return h;
    }
  }
  return std::nullopt;
}

std::strong_ordering AbelianValue::operator<=>(const AbelianValue& o) const {
  if (auto c = free_ <=> o.free_; c != 0) return c;
  return t_ <=> o.t_;
}

bool AbelianValue::operator==(const AbelianValue& o) const { return free_ == o.free_ && t_ == o.t_; }

std::string AbelianValue::str() const {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < free_.size(); ++i) {
    if (free_[i] == 0) continue;
    os << (any ? "*" : "") << "a" << (i + 1);
    if (free_[i] != 1) os << "^" << free_[i];
    any = true;
  }
  if (t_ != 0) {
    os << (any ? "*" : "") << "z";
    if (t_ != 1) os << "^" << t_;
    any = true;
  }
  return any ? os.str() : "1";
}

// ---------------------------------------------------------------- TorusElement

TorusElement::TorusElement(RootSystemPtr rs, ValueContext ctx, std::vector<std::optional<AbelianValue>> images,
                           std::optional<std::vector<AbelianValue>> eps_values)
    : rs_(std::move(rs)), ctx_(ctx), images_(std::move(images)), eps_(std::move(eps_values)) {
  if (static_cast<int>(images_.size()) != rs_->rank()) {
    throw Error(ErrorCode::RankMismatch, "torus element needs one value per fundamental weight");
  }
  for (const auto& v : images_) {
    if (v) same_context(v->context(), ctx_);
  }
}

const AbelianValue& TorusElement::image(int i) const {
  if (!images_[i]) {
    throw Error(ErrorCode::SpinEvaluation, "value of omega_" + std::to_string(i + 1) + " needs a division that the context does not provide");
  }
  return *images_[i];
}

AbelianValue TorusElement::evaluate(const Weight& mu) const {
  rs_->check(mu);
  AbelianValue v(ctx_);
  bool complete = true;
  for (int i = 0; i < rs_->rank(); ++i) {
    if (mu[i] != 0 && !images_[i]) complete = false;
  }
  if (complete) {
    for (int i = 0; i < rs_->rank(); ++i) {
      if (mu[i] != 0) v += images_[i]->times(mu[i]);
    }
    return v;
  }
  if (eps_) {
    auto e = to_eps(*rs_, mu);
    bool ok = true;
    for (const auto& x : e) ok = ok && integral(x);
    if (ok) {
      for (size_t j = 0; j < e.size(); ++j) {
        if (e[j] != 0) v += (*eps_)[j].times(to_i64(e[j]));
      }
      return v;
    }
  }
  throw Error(ErrorCode::SpinEvaluation, "weight " + mu.str() + " needs a spin value that the context cannot halve");
}

TorusElement TorusElement::reflected(int i) const {
  std::vector<AbelianValue> f;
  for (int k = 0; k < rs_->rank(); ++k) f.push_back(image(k));
  AbelianValue alpha(ctx_);
  for (int k = 0; k < rs_->rank(); ++k) alpha += f[k].times(rs_->cartan(k, i));
  std::vector<std::optional<AbelianValue>> g(f.begin(), f.end());
  g[i] = f[i] - alpha;
  return TorusElement(rs_, ctx_, std::move(g));
}

TorusElement torus_from_fundamental_values(const RootSystemPtr& rs, ValueContext ctx,
                                           const std::vector<AbelianValue>& values) {
  if (static_cast<int>(values.size()) != rs->rank()) {
    throw Error(ErrorCode::RankMismatch, "expected " + std::to_string(rs->rank()) + " fundamental values");
  }
  std::vector<std::optional<AbelianValue>> images(values.begin(), values.end());
  return TorusElement(rs, ctx, std::move(images));
}

TorusElement torus_from_eps_values(const RootSystemPtr& rs, ValueContext ctx, const std::vector<AbelianValue>& eps,
                                   const std::map<int, AbelianValue>& spin_values) {
  const int n = rs->rank();
  if (static_cast<int>(eps.size()) != rs->eps_dim()) {
    throw Error(ErrorCode::RankMismatch, "expected " + std::to_string(rs->eps_dim()) + " epsilon values");
  }
  for (const auto& v : eps) same_context(v.context(), ctx);
  if (rs->family() == Family::E) {
    throw Error(ErrorCode::Unsupported, "epsilon-value construction is not available for type E; use fundamental values");
  }
  std::vector<std::optional<AbelianValue>> images(n);
  if (rs->family() == Family::A) {
    AbelianValue sum(ctx);
    for (const auto& v : eps) sum += v;
    if (!sum.is_identity()) throw Error(ErrorCode::InvalidArgument, "type-A epsilon values must sum to the identity");
    AbelianValue acc(ctx);
    for (int i = 0; i < n; ++i) {
      acc += eps[i];
      images[i] = acc;
    }
    return TorusElement(rs, ctx, std::move(images), eps);
  }

  auto combine = [&](const RationalVector& row, int64_t scale) {
    AbelianValue v(ctx);
    for (size_t j = 0; j < row.size(); ++j) {
      Rational c = row[j] * scale;
      if (c != 0) v += eps[j].times(to_i64(c));
    }
    return v;
  };
  const auto& rows = rs->omega_to_eps();
  int gen = -1;
  int64_t den = 1;
  for (int i = 0; i < n; ++i) {
    bool whole = true;
    for (const auto& x : rows[i]) {
      if (!integral(x)) {
        whole = false;
        den = std::lcm(den, static_cast<int64_t>(boost::multiprecision::denominator(x)));
      }
    }
    if (whole) {
      images[i] = combine(rows[i], 1);
    } else if (gen < 0) {
      gen = i;
    }
  }
  if (gen >= 0) {
    const AbelianValue target = combine(rows[gen], den);
    std::optional<AbelianValue> h;
    if (auto it = spin_values.find(gen + 1); it != spin_values.end()) {
      if (!(it->second.times(den) == target)) {
        throw Error(ErrorCode::InvalidArgument, "supplied spin value does not divide the epsilon combination");
      }
      h = it->second;
    } else {
      h = target.divide(den);
    }
    for (int i = gen; i < n; ++i) {
      if (images[i]) continue;
      RationalVector d(rows[i].size());
      for (size_t j = 0; j < d.size(); ++j) {
        d[j] = rows[i][j] - rows[gen][j];
        if (!integral(d[j])) {
          throw Error(ErrorCode::Unsupported, "epsilon construction needs a single spin class for " + rs->name());
        }
      }
      if (h) images[i] = *h + combine(d, 1);
      if (auto it = spin_values.find(i + 1); it != spin_values.end() && i != gen) {
        if (!h || !(it->second == *images[i])) {
          throw Error(ErrorCode::InvalidArgument, "supplied spin values are inconsistent");
        }
      }
    }
  }
  return TorusElement(rs, ctx, std::move(images), eps);
}

AbelianValue evaluate(const TorusElement& s, const Weight& mu) { return s.evaluate(mu); }

bool is_regular(const TorusElement& s) {
  for (const auto& a : s.root_system().positive_roots()) {
    if (s.evaluate(a).is_identity()) return false;
  }
  return true;
}

bool is_central(const TorusElement& s) {
  for (const auto& a : s.root_system().simple_roots()) {
    if (!s.evaluate(a).is_identity()) return false;
  }
  return true;
}

bool is_strictly_regular(const TorusElement& s) {
  if (!is_regular(s)) return false;
  std::vector<AbelianValue> seen;
  for (const auto& a : s.root_system().roots()) seen.push_back(s.evaluate(a));
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

bool separates_weights(const TorusElement& s, const WeightMultiset& ms) {
  std::vector<AbelianValue> vals;
  for (const auto& [w, m] : ms.entries()) vals.push_back(s.evaluate(w));
  std::sort(vals.begin(), vals.end());
  return std::adjacent_find(vals.begin(), vals.end()) == vals.end();
}

uint64_t counter_hash(uint64_t seed, uint64_t index, uint64_t lane) {
  auto mix = [](uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ index) ^ lane);
}

TorusElement sample_torus(const RootSystemPtr& rs, int64_t N, uint64_t seed, uint64_t index) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "torsion order must be positive");
  const ValueContext ctx{0, N};
  const uint64_t n = static_cast<uint64_t>(N);
  const uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % n;
  std::vector<AbelianValue> values;
  uint64_t lane = 0;
  for (int i = 0; i < rs->rank(); ++i) {
    uint64_t x = counter_hash(seed, index, lane++);
    while (x >= limit) x = counter_hash(seed, index, lane++);
    values.push_back(AbelianValue::root_of_unity(ctx, static_cast<int64_t>(x % n)));
  }
  return torus_from_fundamental_values(rs, ctx, values);
}

}  // namespace acyc
