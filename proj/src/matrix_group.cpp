#include "eqk/matrix_group.hpp"

#include <deque>

namespace eqk {

MatrixGroup MatrixGroup::generated_by(std::vector<IntMatrix> generators, std::size_t dim, std::size_t max_order) {
  MatrixGroup g;
  g.dim_ = dim;
  g.generators_ = std::move(generators);
  for (const auto& m : g.generators_)
    if (m.rows() != dim || m.cols() != dim) throw Error(ErrorCode::InvalidInput, "generator has wrong dimension");

  IntMatrix id = IntMatrix::identity(dim);
  g.lookup_.emplace(id.key(), 0);
  g.elements_.push_back(id);
  g.words_.push_back({});
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (std::size_t k = 0; k < g.generators_.size(); ++k) {
      IntMatrix next = g.elements_[head] * g.generators_[k];
      auto [it, inserted] = g.lookup_.emplace(next.key(), g.elements_.size());
      if (!inserted) continue;
      if (g.elements_.size() >= max_order)
        throw Error(ErrorCode::UnsupportedType,
                    "group order exceeds the supported bound of " + std::to_string(max_order));
      std::vector<int> w = g.words_[head];
      w.push_back(static_cast<int>(k));
      g.elements_.push_back(std::move(next));
      g.words_.push_back(std::move(w));
    }
  }
  return g;
}

std::optional<std::size_t> MatrixGroup::index_of(const IntMatrix& m) const {
  if (m.rows() != dim_ || m.cols() != dim_) return std::nullopt;
  auto it = lookup_.find(m.key());
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t MatrixGroup::multiply(std::size_t i, std::size_t j) const {
  auto idx = index_of(elements_[i] * elements_[j]);
  if (!idx) throw Error(ErrorCode::InvalidInput, "product left the group");
  return *idx;
}

std::size_t MatrixGroup::inverse(std::size_t i) const {
  auto idx = index_of(unimodular_inverse(elements_[i]));
  if (!idx) throw Error(ErrorCode::InvalidInput, "inverse left the group");
  return *idx;
}

CosetTable left_cosets(const MatrixGroup& group, const MatrixGroup& subgroup) {
  std::vector<std::size_t> sub_in_group;
  sub_in_group.reserve(subgroup.order());
  for (const auto& h : subgroup.elements()) {
    auto idx = group.index_of(h);
    if (!idx) throw Error(ErrorCode::NotSubgroup, "subgroup element is not in the group");
    sub_in_group.push_back(*idx);
  }
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  CosetTable t;
  t.coset_of.assign(group.order(), kUnset);
  for (std::size_t g = 0; g < group.order(); ++g) {
    if (t.coset_of[g] != kUnset) continue;
    const std::size_t c = t.representatives.size();
    t.representatives.push_back(g);
    for (std::size_t h : sub_in_group) t.coset_of[group.multiply(g, h)] = c;
  }
  return t;
}

}  // namespace eqk
