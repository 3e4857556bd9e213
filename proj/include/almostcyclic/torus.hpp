#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "almostcyclic/rootsys.hpp"
#include "almostcyclic/weightcalc.hpp"

namespace acyc {

// Value group Z^free x Z/torsion.
struct ValueContext {
  int free = 0;
  int64_t torsion = 1;
  bool operator==(const ValueContext&) const = default;
};

// Additive notation: identity is zero, "-1" is torsion N/2.
class AbelianValue {
 public:
  AbelianValue() = default;
  explicit AbelianValue(ValueContext ctx);
  AbelianValue(ValueContext ctx, std::vector<int64_t> free, int64_t torsion);

  static AbelianValue identity(ValueContext ctx) { return AbelianValue(ctx); }
  static AbelianValue generator(ValueContext ctx, int i);
  static AbelianValue root_of_unity(ValueContext ctx, int64_t exponent);
  // The value -1; needs an even torsion order.
  static AbelianValue minus_one(ValueContext ctx);

  const ValueContext& context() const { return ctx_; }
  const std::vector<int64_t>& free() const { return free_; }
  int64_t torsion() const { return t_; }

  bool is_identity() const;
  // 2v = 0, i.e. v is 1 or -1.
  bool is_involution() const;

  AbelianValue& operator+=(const AbelianValue& o);
  AbelianValue& operator-=(const AbelianValue& o);
  friend AbelianValue operator+(AbelianValue a, const AbelianValue& b) { return a += b; }
  friend AbelianValue operator-(AbelianValue a, const AbelianValue& b) { return a -= b; }
  AbelianValue operator-() const;
  AbelianValue times(int64_t k) const;
  // Some h with d*h = *this (smallest torsion representative), if one exists.
  std::optional<AbelianValue> divide(int64_t d) const;

  std::strong_ordering operator<=>(const AbelianValue& o) const;
  bool operator==(const AbelianValue& o) const;

  // Multiplicative rendering, e.g. "a1^2*a2^-1*z^3" or "1".
  std::string str() const;

 private:
  ValueContext ctx_;
  std::vector<int64_t> free_;
  int64_t t_ = 0;
};

class TorusElement {
 public:
  TorusElement(RootSystemPtr rs, ValueContext ctx, std::vector<std::optional<AbelianValue>> images,
               std::optional<std::vector<AbelianValue>> eps_values = std::nullopt);

  const RootSystem& root_system() const { return *rs_; }
  const RootSystemPtr& root_system_ptr() const { return rs_; }
  const ValueContext& context() const { return ctx_; }
  bool has_image(int i) const { return images_[i].has_value(); }
  const AbelianValue& image(int i) const;
  const std::optional<std::vector<AbelianValue>>& eps_values() const { return eps_; }

  AbelianValue evaluate(const Weight& mu) const;
  // The element w^-1 . s for w = s_i, so that evaluate(s, s_i mu) = reflected(i).evaluate(mu).
  TorusElement reflected(int i) const;

 private:
  RootSystemPtr rs_;
  ValueContext ctx_;
  std::vector<std::optional<AbelianValue>> images_;
  std::optional<std::vector<AbelianValue>> eps_;
};

TorusElement torus_from_fundamental_values(const RootSystemPtr& rs, ValueContext ctx,
                                           const std::vector<AbelianValue>& values);
// spin_values optionally fixes omega_i values that need a division (1-based keys).
TorusElement torus_from_eps_values(const RootSystemPtr& rs, ValueContext ctx,
                                   const std::vector<AbelianValue>& eps_values,
                                   const std::map<int, AbelianValue>& spin_values = {});

AbelianValue evaluate(const TorusElement& s, const Weight& mu);
bool is_regular(const TorusElement& s);
bool is_strictly_regular(const TorusElement& s);
bool is_central(const TorusElement& s);
bool separates_weights(const TorusElement& s, const WeightMultiset& ms);
TorusElement sample_torus(const RootSystemPtr& rs, int64_t N, uint64_t seed, uint64_t index);

// Counter-based generator output for (seed, index, lane).
uint64_t counter_hash(uint64_t seed, uint64_t index, uint64_t lane);

}  // namespace acyc
