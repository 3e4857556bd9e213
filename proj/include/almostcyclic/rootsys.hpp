#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "almostcyclic/errors.hpp"

namespace acyc {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using RationalVector = std::vector<Rational>;

inline constexpr int kMaxRank = 8;

// Integer vector in the fundamental-weight basis.
class Weight {
 public:
  Weight() = default;
  explicit Weight(int rank);
  Weight(std::initializer_list<int> coords);
  static Weight from_vector(const std::vector<int>& coords);

  int rank() const { return n_; }
  int operator[](int i) const { return c_[i]; }
  int& operator[](int i) { return c_[i]; }
  std::vector<int> coords() const;

  bool is_zero() const;
  bool is_dominant() const;
  bool is_restricted(int p) const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(int k);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) { return a *= k; }
  Weight operator-() const;

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;

  std::string str() const;

 private:
  int8_t n_ = 0;
  std::array<int32_t, kMaxRank> c_{};
};

struct WeightHash {
  size_t operator()(const Weight& w) const noexcept;
};

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
Family parse_family(const std::string& s);

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

class RootSystem {
 public:
  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  // cartan(i, j) = <alpha_j, alpha_i^vee>; column j is alpha_j in the fundamental basis.
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  const std::vector<Weight>& simple_roots() const { return simple_; }
  const std::vector<Weight>& positive_roots() const { return positive_; }
  // All roots, sorted lexicographically.
  const std::vector<Weight>& roots() const { return roots_; }
  // Simple-root coordinates of each positive root (parallel to positive_roots()).
  const std::vector<std::vector<int>>& positive_root_coords() const { return positive_coords_; }
  // Squared length of alpha_i relative to the shortest simple root.
  int length_factor(int i) const { return length_[i]; }

  int eps_dim() const { return eps_dim_; }
  // Row i is omega_i in epsilon coordinates.
  const std::vector<RationalVector>& omega_to_eps() const { return omega_eps_; }
  const std::vector<RationalVector>& simple_roots_eps() const { return simple_eps_; }
  // True when epsilon vectors are read modulo (1,...,1).
  bool eps_modulo_sum() const { return family_ == Family::A; }

  int e_value() const { return e_value_; }
  uint64_t weyl_order() const { return weyl_order_; }

  Weight zero() const { return Weight(rank_); }
  Weight fundamental(int i) const;  // 1-based index
  Weight rho() const;

  Weight reflect(const Weight& w, int i) const;
  Weight dominant_conjugate(const Weight& w) const;
  // Simple-root coordinates of w, as numerators over inverse_cartan_denominator().
  std::vector<int64_t> root_coords_scaled(const Weight& w) const;
  int64_t inverse_cartan_denominator() const { return inv_den_; }

  // Symmetric invariant form scaled so that (alpha_i, alpha_j) = length_factor(i) * cartan(i, j).
  // Returned exactly as a rational.
  Rational form(const Weight& a, const Weight& b) const;
  // (w, alpha) for a positive root given by index, in the same scaling (always integral).
  int64_t pair_with_positive_root(const Weight& w, size_t root_index) const;

  void check(const Weight& w) const;

 private:
  friend RootSystemPtr build_root_system(Family family, int rank);
  RootSystem() = default;

  Family family_ = Family::A;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> length_;
  std::vector<Weight> simple_;
  std::vector<Weight> positive_;
  std::vector<std::vector<int>> positive_coords_;
  std::vector<std::vector<int64_t>> positive_pairing_;
  std::vector<Weight> roots_;
  std::vector<std::vector<int64_t>> inv_num_;
  int64_t inv_den_ = 1;
  int eps_dim_ = 0;
  std::vector<RationalVector> omega_eps_;
  std::vector<RationalVector> simple_eps_;
  int e_value_ = 1;
  uint64_t weyl_order_ = 1;
};

RootSystemPtr build_root_system(Family family, int rank);
RootSystemPtr build_root_system(const std::string& family, int rank);

bool dominance_leq(const RootSystem& rs, const Weight& mu, const Weight& lambda);
// Sorted lexicographically.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& lambda);
RationalVector to_eps(const RootSystem& rs, const Weight& mu);
Weight from_eps(const RootSystem& rs, const RationalVector& v);
bool is_radical(const RootSystem& rs, const Weight& lambda);
bool is_minuscule(const RootSystem& rs, const Weight& lambda);
// Dominant weights mu with mu <= lambda, ordered by depth below lambda then lexicographically.
std::vector<Weight> dominant_subweights(const RootSystem& rs, const Weight& lambda);
// Height of lambda - mu in simple roots, or -1 when mu is not below lambda.
int64_t depth_below(const RootSystem& rs, const Weight& mu, const Weight& lambda);

std::string rational_str(const Rational& q);

}  // namespace acyc
