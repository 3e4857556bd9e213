#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "almostcyclic/rootsys.hpp"

namespace acyc {

// Finite map weight -> positive multiplicity over a fixed root system.
class WeightMultiset {
 public:
  explicit WeightMultiset(RootSystemPtr rs);

  void add(const Weight& w, int64_t mult = 1);
  int64_t mult(const Weight& w) const;
  bool contains(const Weight& w) const { return entries_.count(w) > 0; }
  int64_t zero_mult() const;
  int64_t total() const;
  size_t size() const { return entries_.size(); }

  const std::map<Weight, int64_t>& entries() const { return entries_; }
  std::vector<Weight> support() const;
  const RootSystem& root_system() const { return *rs_; }
  const RootSystemPtr& root_system_ptr() const { return rs_; }

  bool is_weyl_invariant() const;
  bool is_self_dual() const;
  WeightMultiset scaled(int factor) const;

  bool operator==(const WeightMultiset& o) const { return entries_ == o.entries_; }

 private:
  RootSystemPtr rs_;
  std::map<Weight, int64_t> entries_;
};

struct ModuleSpec {
  enum class Kind { Irreducible, Tensor, DirectSum, FrobeniusTwist };

  RootSystemPtr rs;
  int p = 0;
  Kind kind = Kind::Irreducible;
  Weight highest;
  std::vector<ModuleSpec> parts;
  int twist = 0;

  static ModuleSpec irreducible(RootSystemPtr rs, int p, const Weight& lambda);
  static ModuleSpec tensor(std::vector<ModuleSpec> parts);
  static ModuleSpec direct_sum(std::vector<ModuleSpec> parts);
  static ModuleSpec frobenius_twist(ModuleSpec inner, int k);

  std::string label() const;
};

bool is_prime(int64_t p);

// Union of W-orbits of the dominant weights below lambda.
std::vector<Weight> premet_weight_set(const RootSystem& rs, const Weight& lambda, int p);
WeightMultiset freudenthal(const RootSystemPtr& rs, const Weight& lambda);
BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda);
std::vector<std::pair<Weight, int>> steinberg_decompose(const Weight& lambda, int p);
WeightMultiset tensor_multiset(const WeightMultiset& a, const WeightMultiset& b);
WeightMultiset direct_sum_multiset(const WeightMultiset& a, const WeightMultiset& b);
WeightMultiset module_weights(const ModuleSpec& spec);

// ------------------------------------------------------------ restricted catalog

enum class WeightRule {
  Premet,        // Premet set at the given characteristic
  CharZeroSet,   // support of the characteristic-zero module
  OrbitPlusZero, // W.lambda together with 0
  OrbitOnly,     // W.lambda
  Box,           // parity half of the C_n box
};

const char* weight_rule_name(WeightRule r);

struct CatalogEntry {
  std::string source;  // "table1", "table2", "minuscule", "trivial"
  std::string row;     // human readable row label
  WeightRule rule = WeightRule::Premet;
  int64_t zero_mult = 1;
  std::optional<int64_t> dim;
  std::string note;
};

// Resolves (rs, lambda, p) against the catalog; throws Unsupported when not covered.
CatalogEntry resolve_restricted(const RootSystem& rs, const Weight& lambda, int p);
WeightMultiset restricted_weight_multiset(const RootSystemPtr& rs, const Weight& lambda, int p);
// Box vectors l with |l_i| <= (p-1)/2 and sum l_i congruent to the epsilon sum of lambda (C_n only).
std::vector<Weight> c_box_half(const RootSystem& rs, const Weight& lambda, int p);

// ------------------------------------------------------------ table data

struct Table1Row {
  std::string label;
  Family family;
  int n;
  Weight highest;
  std::string condition;
  int64_t listed_zero_mult;
  int64_t listed_dim;
  int64_t zero_mult;  // value consistent with the weight count
  int64_t dim;
  std::string note;
};

// Rows of the first table that apply to (family, n, p); p = 0 means characteristic zero.
std::vector<Table1Row> table1_rows(Family family, int n, int p);

struct Table2Entry {
  std::string family_label;
  Weight highest;
};

std::vector<Table2Entry> table2_entries(const RootSystem& rs, int p);

}  // namespace acyc
