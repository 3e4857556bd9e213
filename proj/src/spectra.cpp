#include "almostcyclic/spectra.hpp"

#include <algorithm>
#include <unordered_set>

namespace acyc {

int64_t SpectrumReport::mult(const AbelianValue& v) const {
  auto it = eigenvalues.find(v);
  return it == eigenvalues.end() ? 0 : it->second;
}

SpectrumReport spectrum(const TorusElement& s, const WeightMultiset& ms) {
  if (&s.root_system() != &ms.root_system() && s.root_system().name() != ms.root_system().name()) {
    throw Error(ErrorCode::RankMismatch, "torus element and module live on different root systems");
  }
  SpectrumReport r;
  for (const auto& [w, m] : ms.entries()) r.eigenvalues[s.evaluate(w)] += m;
  int repeated = 0;
  for (const auto& [v, m] : r.eigenvalues) {
    r.total += m;
    r.m_s = std::max(r.m_s, m);
    if (v.is_identity()) r.fixed_dim = m;
    if (m > 1) {
      ++repeated;
      r.exceptional = v;
    }
  }
  r.cyclic = repeated == 0;
  r.almost_cyclic = repeated <= 1;
  if (!r.almost_cyclic) r.exceptional.reset();
  return r;
}

std::optional<Weight> root_linked(const RootSystem& rs, const std::vector<Weight>& omega, const Weight& mu,
                                  const Weight& nu) {
  if (mu == nu) throw Error(ErrorCode::InvalidArgument, "root linkage needs two distinct weights");
  std::unordered_set<Weight, WeightHash> set(omega.begin(), omega.end());
  for (const auto& a : rs.roots()) {
    if (set.count(mu - a) && set.count(nu - a)) return a;
  }
  return std::nullopt;
}

std::vector<LinkViolation> hh7_audit(const TorusElement& s, const WeightMultiset& ms) {
  const auto omega = ms.support();
  std::map<AbelianValue, std::vector<Weight>> classes;
  for (const auto& w : omega) classes[s.evaluate(w)].push_back(w);
  std::vector<LinkViolation> out;
  for (const auto& [v, ws] : classes) {
    for (size_t i = 0; i < ws.size(); ++i) {
      for (size_t j = i + 1; j < ws.size(); ++j) {
        if (auto a = root_linked(s.root_system(), omega, ws[i], ws[j])) out.push_back({ws[i], ws[j], *a, v});
      }
    }
  }
  return out;
}

}  // namespace acyc
