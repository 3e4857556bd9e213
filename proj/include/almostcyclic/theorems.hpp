#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "almostcyclic/spectra.hpp"
#include "almostcyclic/torus.hpp"
#include "almostcyclic/weightcalc.hpp"

namespace acyc {

// ------------------------------------------------------------ bound check

struct Verdict {
  bool applicable = false;  // s regular and almost cyclic on V
  int64_t m_s = 0;
  int64_t bound = 0;
  std::string bound_source;  // "A_n", "Table1-twist", "E6", "generic-2"
  bool pass = true;
  SpectrumReport spectrum;
};

// Bound for an irreducible module; Tensor and DirectSum specs are rejected.
std::pair<int64_t, std::string> module_bound(const ModuleSpec& spec);
Verdict check_bound(const ModuleSpec& spec, const TorusElement& s);

// ------------------------------------------------------------ constructions

struct Construction {
  ModuleSpec spec;
  TorusElement element;
  WeightMultiset weights;
  SpectrumReport report;
};

// A_n, highest weight w1 + p w_n, eps_i = a^(p^(i-1)) with a of order (p^(n+1)-1)/(p-1).
Construction example_e2x(int n, int p);

enum class Ex5Variant { One, OneNeg, Two, Three };
Ex5Variant parse_ex5_variant(const std::string& s);
const char* ex5_variant_name(Ex5Variant v);
// Variant One/OneNeg: A_{2m-1}, w2; Two: A_{2m}, 2w1; Three: A_{2m-1}, 2w1 with b^(2m) = -1.
Construction example_ex5(Ex5Variant variant, int m, int p);

struct G2Example {
  TorusElement element;
  bool regular = false;
  SpectrumReport v1;
  SpectrumReport v2;
  std::vector<AbelianValue> long_root_values;
};

// b_order empty: b is a free parameter; otherwise b is a primitive root of unity of that order.
G2Example example_g2_one(int p, std::optional<int64_t> b_order);
// p = 3 with a free parameter a.
G2Example example_g2_two();

// ------------------------------------------------------------ root linkage checks

struct QuadrupleReport {
  std::string module;
  size_t weights = 0;
  uint64_t quadruples = 0;
  bool pass = false;
  std::vector<Weight> counterexample;
};

// Every 4-subset of the weights of V_lambda contains a root-linked pair.
QuadrupleReport quadruple_link_check(const RootSystemPtr& rs, const Weight& lambda);
QuadrupleReport lemma_e60_check();

struct PairLinkReport {
  std::string module;
  uint64_t pairs = 0;
  uint64_t unlinked = 0;
  uint64_t mismatches = 0;         // unlinked pairs outside the exception list
  uint64_t exceptions_linked = 0;  // exception pairs that are nevertheless linked
  bool pass = false;
};

// D_n, lambda = w_which with which in {1, n-1, n}: every unlinked pair is in the exception list.
PairLinkReport lemma_11d_check(int n, int which);

// ------------------------------------------------------------ tables

struct TableRowReport {
  std::string group;
  std::string row;
  std::string condition;
  int p = 0;
  Weight highest;
  int64_t listed_zero_mult = 0;
  int64_t listed_dim = 0;
  int64_t computed_zero_mult = 0;
  BigInt computed_dim = 0;
  size_t weight_count = 0;
  bool all_mult_one = false;
  std::string crosscheck;  // table 2: "weyl" or "modular"
  std::string status;      // "pass", "fail", "skipped"
  std::string note;
};

struct TableReport {
  int which = 1;
  std::vector<TableRowReport> rows;
  bool pass() const;
};

struct TableScope {
  std::string family;
  int rank;
  int p;  // table 2 only
};

// Rows evaluable at characteristic zero over the given groups.
TableReport verify_table1(const std::vector<TableScope>& scope);
TableReport verify_table2(const std::vector<TableScope>& scope);
std::vector<TableScope> default_table1_scope();
std::vector<TableScope> default_table2_scope();

// ------------------------------------------------------------ sharpness

struct SharpnessReport {
  std::string module;
  int p = 0;
  int64_t expected = 0;
  int64_t found = 0;  // largest m_s over regular almost-cyclic elements found
  std::optional<int64_t> witness_order;
  std::optional<int64_t> witness_exponent;
  bool pass = false;
};

// A_1 modules 2w1, 3w1 and (1 + p^k) w1: search torsion elements up to max_order.
std::vector<SharpnessReport> a1_sharpness(int p, int k, int64_t max_order);

// ------------------------------------------------------------ scans

enum class Property { IB2, TT4, DO1, HH7, AA8, WE4, EP9, C99 };
const char* property_name(Property p);
std::optional<Property> parse_property(const std::string& s);
std::vector<Property> all_properties();
// Properties whose hypotheses can hold for this module.
std::vector<Property> applicable_properties(const ModuleSpec& spec);

struct ScanWitness {
  uint64_t index = 0;
  std::vector<int64_t> exponents;  // values of w_1..w_n in Z/N
  int64_t m_s = 0;
  int64_t fixed_dim = 0;
  std::string exceptional;
  bool operator==(const ScanWitness&) const = default;
};

struct ScanViolation {
  std::string property;
  uint64_t index = 0;
  std::vector<int64_t> exponents;
  std::string detail;
  bool operator==(const ScanViolation&) const = default;
};

struct ScanReport {
  std::string module;
  int64_t N = 0;
  uint64_t seed = 0;
  uint64_t samples = 0;
  uint64_t regular_count = 0;
  uint64_t almost_cyclic_count = 0;
  uint64_t regular_almost_cyclic_count = 0;
  int64_t max_m_s = 0;  // over regular almost-cyclic samples
  std::vector<std::string> properties;
  std::vector<ScanWitness> witnesses;
  std::vector<ScanViolation> violations;
  bool operator==(const ScanReport&) const = default;
};

struct ScanOptions {
  int64_t N = 60;
  uint64_t seed = 0;
  uint64_t count = 10000;
  std::vector<Property> properties;  // empty: applicable_properties(spec)
  size_t witness_cap = 16;
  unsigned threads = 0;  // 0: hardware concurrency
};

ScanReport scan(const ModuleSpec& spec, const ScanOptions& opts);

struct ScanJob {
  std::string suite;
  ModuleSpec spec;
};

// Named module families: "table2" (A1-A4, B2, C2, C3, G2, D4 at p in {2,3,5}), "aa8", "we4", "ep9".
std::vector<ScanJob> scan_suite(const std::string& name);
std::vector<std::string> scan_suite_names();
// Four torsion orders N <= 120 prime to p used by the suites.
std::vector<int64_t> scan_orders(int p);

// Dimensions allowed for non-regular almost-cyclic elements with a repeated eigenvalue.
std::vector<int64_t> nearly_natural_dims(const RootSystem& rs, int p);

}  // namespace acyc
