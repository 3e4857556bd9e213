#include "almostcyclic/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace acyc {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidType: return "invalid_type";
    case ErrorCode::RankMismatch: return "rank_mismatch";
    case ErrorCode::NotDominant: return "not_dominant";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::NotInLattice: return "not_in_lattice";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::SpinEvaluation: return "spin_evaluation";
    case ErrorCode::ContextMismatch: return "context_mismatch";
    case ErrorCode::NotRegular: return "not_regular";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

// ---------------------------------------------------------------- Weight

Weight::Weight(int rank) {
  if (rank < 0 || rank > kMaxRank) {
    throw Error(ErrorCode::InvalidArgument, "weight rank out of range: " + std::to_string(rank));
  }
  n_ = static_cast<int8_t>(rank);
}

Weight::Weight(std::initializer_list<int> coords) : Weight(static_cast<int>(coords.size())) {
  int i = 0;
  for (int c : coords) c_[i++] = c;
}

Weight Weight::from_vector(const std::vector<int>& coords) {
  Weight w(static_cast<int>(coords.size()));
  for (size_t i = 0; i < coords.size(); ++i) w.c_[i] = coords[i];
  return w;
}

std::vector<int> Weight::coords() const { return std::vector<int>(c_.begin(), c_.begin() + n_); }

bool Weight::is_zero() const {
  return std::all_of(c_.begin(), c_.begin() + n_, [](int c) { return c == 0; });
}

bool Weight::is_dominant() const {
  return std::all_of(c_.begin(), c_.begin() + n_, [](int c) { return c >= 0; });
}

bool Weight::is_restricted(int p) const {
  return is_dominant() && std::all_of(c_.begin(), c_.begin() + n_, [p](int c) { return c < p; });
}

Weight& Weight::operator+=(const Weight& o) {
  for (int i = 0; i < n_; ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (int i = 0; i < n_; ++i) c_[i] -= o.c_[i];
  return *this;
}

Weight& Weight::operator*=(int k) {
  for (int i = 0; i < n_; ++i) c_[i] *= k;
  return *this;
}

Weight Weight::operator-() const {
  Weight w = *this;
  for (int i = 0; i < n_; ++i) w.c_[i] = -w.c_[i];
  return w;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < n_; ++i) os << (i ? "," : "") << c_[i];
  os << ')';
  return os.str();
}

size_t WeightHash::operator()(const Weight& w) const noexcept {
  uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<uint64_t>(w.rank());
  for (int i = 0; i < w.rank(); ++i) {
    h ^= static_cast<uint64_t>(static_cast<uint32_t>(w[i])) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<size_t>(h);
}

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

Family parse_family(const std::string& s) {
  if (s.size() == 1) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c >= 'A' && c <= 'G') return static_cast<Family>(c - 'A');
  }
  throw Error(ErrorCode::InvalidType, "unknown root system family '" + s + "'");
}

std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

// ---------------------------------------------------------------- planche data

namespace {

struct Row {
  int den;
  std::vector<int> num;
};

RationalVector to_rational(const Row& r) {
  RationalVector v;
  for (int x : r.num) v.emplace_back(x, r.den);
  return v;
}

Row unit(int dim, int i, int coeff = 1) {
  Row r{1, std::vector<int>(dim, 0)};
  r.num[i] = coeff;
  return r;
}

Row diff(int dim, int i, int j) {
  Row r{1, std::vector<int>(dim, 0)};
  r.num[i] = 1;
  r.num[j] = -1;
  return r;
}

struct Planche {
  int eps_dim;
  std::vector<Row> simple;
  std::vector<Row> omega;
};

Planche planche_a(int n) {
  Planche p{n + 1, {}, {}};
  for (int i = 0; i < n; ++i) p.simple.push_back(diff(n + 1, i, i + 1));
  for (int i = 1; i <= n; ++i) {
    Row r{n + 1, std::vector<int>(n + 1, -i)};
    for (int j = 0; j < i; ++j) r.num[j] += n + 1;
    p.omega.push_back(r);
  }
  return p;
}

Planche planche_b(int n) {
  Planche p{n, {}, {}};
  for (int i = 0; i + 1 < n; ++i) p.simple.push_back(diff(n, i, i + 1));
  p.simple.push_back(unit(n, n - 1));
  for (int i = 1; i < n; ++i) {
    Row r{1, std::vector<int>(n, 0)};
    for (int j = 0; j < i; ++j) r.num[j] = 1;
    p.omega.push_back(r);
  }
  p.omega.push_back(Row{2, std::vector<int>(n, 1)});
  return p;
}

Planche planche_c(int n) {
  Planche p{n, {}, {}};
  for (int i = 0; i + 1 < n; ++i) p.simple.push_back(diff(n, i, i + 1));
  p.simple.push_back(unit(n, n - 1, 2));
  for (int i = 1; i <= n; ++i) {
    Row r{1, std::vector<int>(n, 0)};
    for (int j = 0; j < i; ++j) r.num[j] = 1;
    p.omega.push_back(r);
  }
  return p;
}

Planche planche_d(int n) {
  Planche p{n, {}, {}};
  for (int i = 0; i + 1 < n; ++i) p.simple.push_back(diff(n, i, i + 1));
  Row last{1, std::vector<int>(n, 0)};
  last.num[n - 2] = 1;
  last.num[n - 1] = 1;
  p.simple.push_back(last);
  for (int i = 1; i <= n - 2; ++i) {
    Row r{1, std::vector<int>(n, 0)};
    for (int j = 0; j < i; ++j) r.num[j] = 1;
    p.omega.push_back(r);
  }
  Row minus{2, std::vector<int>(n, 1)};
  minus.num[n - 1] = -1;
  p.omega.push_back(minus);
  p.omega.push_back(Row{2, std::vector<int>(n, 1)});
  return p;
}

std::vector<Row> e_simple(int n) {
  std::vector<Row> s;
  s.push_back(Row{2, {1, -1, -1, -1, -1, -1, -1, 1}});
  Row a2{1, std::vector<int>(8, 0)};
  a2.num[0] = 1;
  a2.num[1] = 1;
  s.push_back(a2);
  for (int i = 3; i <= n; ++i) s.push_back(diff(8, i - 2, i - 3));
  return s;
}

Planche planche_e(int n) {
  Planche p{8, e_simple(n), {}};
  if (n == 6) {
    p.omega = {
        Row{3, {0, 0, 0, 0, 0, -2, -2, 2}},
        Row{2, {1, 1, 1, 1, 1, -1, -1, 1}},
        Row{6, {-3, 3, 3, 3, 3, -5, -5, 5}},
        Row{1, {0, 0, 1, 1, 1, -1, -1, 1}},
        Row{3, {0, 0, 0, 3, 3, -2, -2, 2}},
        Row{3, {0, 0, 0, 0, 3, -1, -1, 1}},
    };
  } else if (n == 7) {
    p.omega = {
        Row{1, {0, 0, 0, 0, 0, 0, -1, 1}},
        Row{2, {1, 1, 1, 1, 1, 1, -2, 2}},
        Row{2, {-1, 1, 1, 1, 1, 1, -3, 3}},
        Row{1, {0, 0, 1, 1, 1, 1, -2, 2}},
        Row{2, {0, 0, 0, 2, 2, 2, -3, 3}},
        Row{1, {0, 0, 0, 0, 1, 1, -1, 1}},
        Row{2, {0, 0, 0, 0, 0, 2, -1, 1}},
    };
  } else {
    p.omega = {
        Row{1, {0, 0, 0, 0, 0, 0, 0, 2}},
        Row{2, {1, 1, 1, 1, 1, 1, 1, 5}},
        Row{2, {-1, 1, 1, 1, 1, 1, 1, 7}},
        Row{1, {0, 0, 1, 1, 1, 1, 1, 5}},
        Row{1, {0, 0, 0, 1, 1, 1, 1, 4}},
        Row{1, {0, 0, 0, 0, 1, 1, 1, 3}},
        Row{1, {0, 0, 0, 0, 0, 1, 1, 2}},
        Row{1, {0, 0, 0, 0, 0, 0, 1, 1}},
    };
  }
  return p;
}

Planche planche_f() {
  Planche p{4, {}, {}};
  p.simple = {diff(4, 1, 2), diff(4, 2, 3), unit(4, 3), Row{2, {1, -1, -1, -1}}};
  p.omega = {Row{1, {1, 1, 0, 0}}, Row{1, {2, 1, 1, 0}}, Row{2, {3, 1, 1, 1}}, Row{1, {1, 0, 0, 0}}};
  return p;
}

Planche planche_g() {
  Planche p{3, {}, {}};
  p.simple = {Row{1, {1, -1, 0}}, Row{1, {-2, 1, 1}}};
  p.omega = {Row{1, {0, -1, 1}}, Row{1, {-1, -1, 2}}};
  return p;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void validate_type(Family f, int n) {
  auto bad = [&](const std::string& why) {
    throw Error(ErrorCode::InvalidType,
                std::string("invalid simple type ") + family_letter(f) + std::to_string(n) + ": " + why);
  };
  if (n < 1) bad("rank must be positive");
  switch (f) {
    case Family::A: break;
    case Family::B:
    case Family::C:
      if (n < 2) bad("rank 1 is rejected, use A1");
      break;
    case Family::D:
      if (n < 3) bad("rank must be at least 3");
      break;
    case Family::E:
      if (n < 6 || n > 8) bad("rank must be 6, 7 or 8");
      break;
    case Family::F:
      if (n != 4) bad("rank must be 4");
      break;
    case Family::G:
      if (n != 2) bad("rank must be 2");
      break;
  }
  if (n > kMaxRank) bad("rank exceeds the supported maximum " + std::to_string(kMaxRank));
}

// Exact inverse of an integer matrix, returned as (numerators, common denominator).
std::pair<std::vector<std::vector<int64_t>>, int64_t> integer_inverse(const std::vector<std::vector<int>>& a) {
  const size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::Internal, "singular Cartan matrix");
    std::swap(m[piv], m[col]);
    Rational inv = 1 / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (size_t c = 0; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  BigInt den = 1;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      BigInt d = boost::multiprecision::denominator(m[i][n + j]);
      den = den / boost::multiprecision::gcd(den, d) * d;
    }
  }
  std::vector<std::vector<int64_t>> num(n, std::vector<int64_t>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      Rational v = m[i][n + j] * Rational(den);
      num[i][j] = static_cast<int64_t>(boost::multiprecision::numerator(v));
    }
  }
  return {num, static_cast<int64_t>(den)};
}

std::vector<int> components_of(const std::vector<std::vector<int>>& cartan, const std::vector<int>& subset,
                               int start) {
  std::vector<int> comp{start};
  std::vector<bool> seen(cartan.size(), false);
  seen[start] = true;
  for (size_t k = 0; k < comp.size(); ++k) {
    for (int j : subset) {
      if (!seen[j] && cartan[comp[k]][j] != 0) {
        seen[j] = true;
        comp.push_back(j);
      }
    }
  }
  return comp;
}

}  // namespace

// ---------------------------------------------------------------- RootSystem

std::string RootSystem::name() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

Weight RootSystem::fundamental(int i) const {
  if (i < 1 || i > rank_) {
    throw Error(ErrorCode::InvalidArgument, "fundamental weight index out of range: " + std::to_string(i));
  }
  Weight w(rank_);
  w[i - 1] = 1;
  return w;
}

Weight RootSystem::rho() const {
  Weight w(rank_);
  for (int i = 0; i < rank_; ++i) w[i] = 1;
  return w;
}

void RootSystem::check(const Weight& w) const {
  if (w.rank() != rank_) {
    throw Error(ErrorCode::RankMismatch, "weight " + w.str() + " has rank " + std::to_string(w.rank()) +
                                             ", root system " + name() + " has rank " + std::to_string(rank_));
  }
}

Weight RootSystem::reflect(const Weight& w, int i) const {
  Weight r = w;
  const int c = w[i];
  if (c == 0) return r;
  for (int k = 0; k < rank_; ++k) r[k] -= c * cartan_[k][i];
  return r;
}

Weight RootSystem::dominant_conjugate(const Weight& w) const {
  Weight r = w;
  for (;;) {
    int i = 0;
    while (i < rank_ && r[i] >= 0) ++i;
    if (i == rank_) return r;
    r = reflect(r, i);
  }
}

std::vector<int64_t> RootSystem::root_coords_scaled(const Weight& w) const {
  std::vector<int64_t> c(rank_, 0);
  for (int i = 0; i < rank_; ++i) {
    int64_t s = 0;
    for (int j = 0; j < rank_; ++j) s += inv_num_[i][j] * w[j];
    c[i] = s;
  }
  return c;
}

Rational RootSystem::form(const Weight& a, const Weight& b) const {
  check(a);
  check(b);
  Rational s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (b[j] == 0) continue;
      s += Rational(inv_num_[i][j] * length_[i] * a[i] * b[j], inv_den_);
    }
  }
  return s;
}

int64_t RootSystem::pair_with_positive_root(const Weight& w, size_t root_index) const {
  const auto& p = positive_pairing_[root_index];
  int64_t s = 0;
  for (int j = 0; j < rank_; ++j) s += p[j] * w[j];
  return s;
}

RootSystemPtr build_root_system(Family family, int rank) {
  validate_type(family, rank);
  Planche pl;
  switch (family) {
    case Family::A: pl = planche_a(rank); break;
    case Family::B: pl = planche_b(rank); break;
    case Family::C: pl = planche_c(rank); break;
    case Family::D: pl = planche_d(rank); break;
    case Family::E: pl = planche_e(rank); break;
    case Family::F: pl = planche_f(); break;
    case Family::G: pl = planche_g(); break;
  }

  std::shared_ptr<RootSystem> rs(new RootSystem());
  RootSystem& r = *rs;
  r.family_ = family;
  r.rank_ = rank;
  r.eps_dim_ = pl.eps_dim;
  for (const auto& row : pl.simple) r.simple_eps_.push_back(to_rational(row));
  for (const auto& row : pl.omega) r.omega_eps_.push_back(to_rational(row));

  const int n = rank;
  std::vector<Rational> sq(n);
  for (int i = 0; i < n; ++i) sq[i] = dot(r.simple_eps_[i], r.simple_eps_[i]);
  r.cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational c = 2 * dot(r.simple_eps_[j], r.simple_eps_[i]) / sq[i];
      if (boost::multiprecision::denominator(c) != 1) throw Error(ErrorCode::Internal, "non-integral Cartan entry");
      r.cartan_[i][j] = static_cast<int>(boost::multiprecision::numerator(c));
    }
  }
  // omega_i paired with alpha_j^vee must be the identity matrix.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational c = 2 * dot(r.omega_eps_[i], r.simple_eps_[j]) / sq[j];
      if (c != (i == j ? 1 : 0)) throw Error(ErrorCode::Internal, "inconsistent planche data for " + r.name());
    }
  }
  Rational minsq = *std::min_element(sq.begin(), sq.end());
  Rational maxsq = *std::max_element(sq.begin(), sq.end());
  r.length_.resize(n);
  for (int i = 0; i < n; ++i) r.length_[i] = static_cast<int>(boost::multiprecision::numerator(Rational(sq[i] / minsq)));
  r.e_value_ = static_cast<int>(boost::multiprecision::numerator(Rational(maxsq / minsq)));

  for (int j = 0; j < n; ++j) {
    Weight a(n);
    for (int i = 0; i < n; ++i) a[i] = r.cartan_[i][j];
    r.simple_.push_back(a);
  }
  auto inv = integer_inverse(r.cartan_);
  r.inv_num_ = inv.first;
  r.inv_den_ = inv.second;

  // Reflection closure of the simple roots.
  std::unordered_set<Weight, WeightHash> seen(r.simple_.begin(), r.simple_.end());
  std::deque<Weight> queue(r.simple_.begin(), r.simple_.end());
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Weight v = r.reflect(w, i);
      if (seen.insert(v).second) queue.push_back(v);
    }
  }
  r.roots_.assign(seen.begin(), seen.end());
  std::sort(r.roots_.begin(), r.roots_.end());
  for (const auto& a : r.roots_) {
    auto c = r.root_coords_scaled(a);
    bool positive = true;
    std::vector<int> coords(n);
    for (int i = 0; i < n; ++i) {
      if (c[i] % r.inv_den_ != 0) throw Error(ErrorCode::Internal, "root outside the root lattice");
      coords[i] = static_cast<int>(c[i] / r.inv_den_);
      if (coords[i] < 0) positive = false;
    }
    if (positive) {
      r.positive_.push_back(a);
      r.positive_coords_.push_back(coords);
      std::vector<int64_t> pairing(n);
      for (int j = 0; j < n; ++j) pairing[j] = static_cast<int64_t>(coords[j]) * r.length_[j];
      r.positive_pairing_.push_back(pairing);
    }
  }

  // |W_J| = |W_J . omega_i| * |W_{J \ i}|, one connected component at a time.
  std::function<uint64_t(std::vector<int>)> order = [&](std::vector<int> subset) -> uint64_t {
    if (subset.empty()) return 1;
    auto comp = components_of(r.cartan_, subset, subset.front());
    std::sort(comp.begin(), comp.end());
    std::vector<int> rest;
    for (int j : subset) {
      if (!std::binary_search(comp.begin(), comp.end(), j)) rest.push_back(j);
    }
    const int pick = comp.back();
    Weight w(n);
    w[pick] = 1;
    std::unordered_set<Weight, WeightHash> orbit{w};
    std::deque<Weight> q{w};
    while (!q.empty()) {
      Weight x = q.front();
      q.pop_front();
      for (int j : comp) {
        Weight y = r.reflect(x, j);
        if (orbit.insert(y).second) q.push_back(y);
      }
    }
    std::vector<int> smaller;
    for (int j : comp) {
      if (j != pick) smaller.push_back(j);
    }
    return static_cast<uint64_t>(orbit.size()) * order(smaller) * order(rest);
  };
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  r.weyl_order_ = order(all);
  return rs;
}

RootSystemPtr build_root_system(const std::string& family, int rank) {
  return build_root_system(parse_family(family), rank);
}

// ---------------------------------------------------------------- operations

bool dominance_leq(const RootSystem& rs, const Weight& mu, const Weight& lambda) {
  return depth_below(rs, mu, lambda) >= 0;
}

int64_t depth_below(const RootSystem& rs, const Weight& mu, const Weight& lambda) {
  rs.check(mu);
  rs.check(lambda);
  auto c = rs.root_coords_scaled(lambda - mu);
  int64_t h = 0;
  for (int64_t x : c) {
    if (x < 0 || x % rs.inverse_cartan_denominator() != 0) return -1;
    h += x / rs.inverse_cartan_denominator();
  }
  return h;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& lambda) {
  rs.check(lambda);
  std::unordered_set<Weight, WeightHash> seen{lambda};
  std::vector<Weight> out{lambda};
  for (size_t k = 0; k < out.size(); ++k) {
    for (int i = 0; i < rs.rank(); ++i) {
      if (out[k][i] == 0) continue;
      Weight v = rs.reflect(out[k], i);
      if (seen.insert(v).second) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

RationalVector to_eps(const RootSystem& rs, const Weight& mu) {
  rs.check(mu);
  RationalVector v(rs.eps_dim(), 0);
  for (int i = 0; i < rs.rank(); ++i) {
    if (mu[i] == 0) continue;
    for (int j = 0; j < rs.eps_dim(); ++j) v[j] += mu[i] * rs.omega_to_eps()[i][j];
  }
  return v;
}

Weight from_eps(const RootSystem& rs, const RationalVector& input) {
  if (static_cast<int>(input.size()) != rs.eps_dim()) {
    throw Error(ErrorCode::RankMismatch, "epsilon vector has length " + std::to_string(input.size()) + ", " +
                                             rs.name() + " expects " + std::to_string(rs.eps_dim()));
  }
  RationalVector v = input;
  if (rs.eps_modulo_sum()) {
    Rational mean = 0;
    for (const auto& x : v) mean += x;
    mean /= static_cast<int>(v.size());
    for (auto& x : v) x -= mean;
  }
  Weight w(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    const auto& a = rs.simple_roots_eps()[i];
    Rational c = 2 * dot(v, a) / dot(a, a);
    if (boost::multiprecision::denominator(c) != 1) {
      throw Error(ErrorCode::NotInLattice, "epsilon vector pairs non-integrally with a simple coroot");
    }
    w[i] = static_cast<int>(boost::multiprecision::numerator(c));
  }
  if (to_eps(rs, w) != v) {
    throw Error(ErrorCode::NotInLattice, "epsilon vector lies outside the span of the weight lattice");
  }
  return w;
}

bool is_radical(const RootSystem& rs, const Weight& lambda) {
  rs.check(lambda);
  for (int64_t x : rs.root_coords_scaled(lambda)) {
    if (x % rs.inverse_cartan_denominator() != 0) return false;
  }
  return true;
}

std::vector<Weight> dominant_subweights(const RootSystem& rs, const Weight& lambda) {
  rs.check(lambda);
  if (!lambda.is_dominant()) throw Error(ErrorCode::NotDominant, "weight " + lambda.str() + " is not dominant");
  std::unordered_map<Weight, int64_t, WeightHash> depth{{lambda, 0}};
  std::vector<Weight> order{lambda};
  for (size_t k = 0; k < order.size(); ++k) {
    const Weight mu = order[k];
    const int64_t d = depth[mu];
    for (size_t a = 0; a < rs.positive_roots().size(); ++a) {
      Weight nu = mu - rs.positive_roots()[a];
      if (!nu.is_dominant() || depth.count(nu)) continue;
      const auto& c = rs.positive_root_coords()[a];
      depth[nu] = d + std::accumulate(c.begin(), c.end(), int64_t{0});
      order.push_back(nu);
    }
  }
  std::sort(order.begin(), order.end(), [&](const Weight& x, const Weight& y) {
    int64_t dx = depth_below(rs, x, lambda), dy = depth_below(rs, y, lambda);
    return dx != dy ? dx < dy : x < y;
  });
  return order;
}

bool is_minuscule(const RootSystem& rs, const Weight& lambda) {
  rs.check(lambda);
  if (!lambda.is_dominant()) throw Error(ErrorCode::NotDominant, "weight " + lambda.str() + " is not dominant");
  if (lambda.is_zero()) throw Error(ErrorCode::InvalidArgument, "minuscule test needs a nonzero weight");
  std::vector<Weight> premet;
  for (const auto& mu : dominant_subweights(rs, lambda)) {
    auto o = weyl_orbit(rs, mu);
    premet.insert(premet.end(), o.begin(), o.end());
  }
  std::sort(premet.begin(), premet.end());
  return premet == weyl_orbit(rs, lambda);
}

}  // namespace acyc
