#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "almostcyclic/torus.hpp"
#include "almostcyclic/weightcalc.hpp"

namespace acyc {

struct SpectrumReport {
  std::map<AbelianValue, int64_t> eigenvalues;
  int64_t m_s = 0;
  int64_t fixed_dim = 0;
  int64_t total = 0;
  bool cyclic = true;
  bool almost_cyclic = true;
  std::optional<AbelianValue> exceptional;

  // Number of distinct eigenvalues (degree of the minimal polynomial).
  size_t degree() const { return eigenvalues.size(); }
  int64_t mult(const AbelianValue& v) const;
};

SpectrumReport spectrum(const TorusElement& s, const WeightMultiset& ms);

// First root alpha in sorted order with mu - alpha and nu - alpha both in omega.
std::optional<Weight> root_linked(const RootSystem& rs, const std::vector<Weight>& omega, const Weight& mu,
                                  const Weight& nu);

struct LinkViolation {
  Weight mu;
  Weight nu;
  Weight root;
  AbelianValue value;
};

// Pairs of weights with equal eigenvalue that are linked by a root.
// For regular s the list is empty whenever s is almost cyclic on the module.
std::vector<LinkViolation> hh7_audit(const TorusElement& s, const WeightMultiset& ms);

}  // namespace acyc
