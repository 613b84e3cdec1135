#include "eqk/stanley_reisner.hpp"

#include <algorithm>

namespace eqk {

StanleyReisner::StanleyReisner(std::size_t vertices, std::vector<RaySet> faces) : n_(vertices), faces_(std::move(faces)) {
  for (auto& f : faces_) std::sort(f.begin(), f.end());
  for (std::size_t i = 0; i < faces_.size(); ++i) index_.emplace(faces_[i], i);
  if (!index_.count(RaySet{})) throw Error(ErrorCode::InvalidInput, "complex lacks the empty face");
}

StanleyReisner StanleyReisner::positive(const Fan& fan) {
  return StanleyReisner(fan.positive_rays().size(), fan.positive_cones());
}

StanleyReisner StanleyReisner::full(const Fan& fan) {
  std::vector<RaySet> faces;
  for (const auto& c : fan.cones()) faces.push_back(c.rays);
  return StanleyReisner(fan.rays().size(), std::move(faces));
}

std::optional<std::size_t> StanleyReisner::face_index(const RaySet& f) const {
  RaySet s = f;
  std::sort(s.begin(), s.end());
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GroupRingElement StanleyReisner::face_product(const LatticePtr& lattice, const RaySet& f) const {
  GroupRingElement p = GroupRingElement::constant(lattice, 1);
  for (auto j : f) {
    Vec e(lattice->rank(), 0);
    e[j] = 1;
    p = p * (GroupRingElement::constant(lattice, 1) - GroupRingElement::monomial(lattice, e));
  }
  return p;
}

GroupRingElement StanleyReisner::restrict_to_face(const GroupRingElement& f, const RaySet& face) const {
  std::vector<bool> keep(n_, false);
  for (auto j : face) keep[j] = true;
  return f.transform(f.lattice(), [&](Vec u) {
    for (std::size_t j = 0; j < n_; ++j)
      if (!keep[j]) u[j] = 0;
    return u;
  });
}

namespace {

// A monomial contributes to c_tau only for faces tau inside its support, and
// then contributes prod_{j in tau}(X_j^{e_j} - 1) times its other factors.
template <class Sink>
void expand_components(const GroupRingElement& f, std::size_t n, const std::vector<RaySet>& faces, Sink&& sink) {
  for (const auto& [u, c] : f.terms()) {
    Vec rest = u;
    for (std::size_t j = 0; j < n; ++j) rest[j] = 0;
    for (std::size_t t = 0; t < faces.size(); ++t) {
      const auto& tau = faces[t];
      if (!std::all_of(tau.begin(), tau.end(), [&](std::size_t j) { return u[j] != 0; })) continue;
      // subsets S of tau: sign (-1)^{|tau|-|S|}, exponent rest + sum_{j in S} e_j
      const std::size_t k = tau.size();
      for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        Vec e = rest;
        std::size_t bits = 0;
        for (std::size_t i = 0; i < k; ++i)
          if (mask >> i & 1) {
            e[tau[i]] = u[tau[i]];
            ++bits;
          }
        sink(t, e, (k - bits) % 2 ? checked_sub(0, c) : c);
      }
    }
  }
}

}  // namespace

std::vector<GroupRingElement> StanleyReisner::decompose(const GroupRingElement& f) const {
  if (f.rank() < n_) throw Error(ErrorCode::LatticeMismatch, "element has fewer coordinates than the complex");
  std::vector<TermAccumulator> acc(faces_.size(), TermAccumulator(f.lattice()));
  expand_components(f, n_, faces_, [&](std::size_t t, const Vec& e, Int c) { acc[t].add(e, c); });
  std::vector<GroupRingElement> out;
  for (const auto& a : acc) out.push_back(a.finish());

  for (std::size_t t = 0; t < faces_.size(); ++t)
    if (!in_component(out[t], faces_[t]))
      throw Error(ErrorCode::DecompositionResidual, "component escaped its summand");
  // eps_tau(sum) = eps_tau(f); maximal faces suffice since restrictions compose
  TermAccumulator sum(f.lattice());
  for (const auto& c : out) sum.add(c);
  GroupRingElement total = sum.finish();
  for (std::size_t t = 0; t < faces_.size(); ++t) {
    const auto& tau = faces_[t];
    bool maximal = true;
    for (std::size_t j = 0; j < n_ && maximal; ++j) {
      if (std::binary_search(tau.begin(), tau.end(), j)) continue;
      RaySet bigger = tau;
      bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), j), j);
      maximal = !index_.count(bigger);
    }
    if (maximal && !(restrict_to_face(total, tau) == restrict_to_face(f, tau)))
      throw Error(ErrorCode::DecompositionResidual, "components do not restrict back to the input");
  }
  return out;
}

GroupRingElement StanleyReisner::reduce(const GroupRingElement& f) const {
  if (f.rank() < n_) throw Error(ErrorCode::LatticeMismatch, "element has fewer coordinates than the complex");
  TermAccumulator acc(f.lattice());
  expand_components(f, n_, faces_, [&](std::size_t, const Vec& e, Int c) { acc.add(e, c); });
  return acc.finish();
}

bool StanleyReisner::in_component(const GroupRingElement& f, const RaySet& face) const {
  std::vector<bool> inside(n_, false);
  for (auto j : face) inside[j] = true;
  for (const auto& [u, c] : f.terms())
    for (std::size_t j = 0; j < n_; ++j)
      if (!inside[j] && u[j] != 0) return false;
  for (auto j : face) {
    GroupRingElement g = f.transform(f.lattice(), [&](Vec u) {
      u[j] = 0;
      return u;
    });
    if (!g.is_zero()) return false;
  }
  return true;
}

}  // namespace eqk
