#include "eqk/fan.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace eqk {

namespace {

using Rational = boost::multiprecision::cpp_rational;

IntMatrix columns_of(const std::vector<Vec>& rays, const RaySet& cone, std::size_t dim) {
  std::vector<Vec> cols;
  for (auto j : cone) cols.push_back(rays[j]);
  return IntMatrix::from_columns(cols, dim);
}

}  // namespace

std::shared_ptr<const Fan> Fan::build(DatumPtr datum, const std::optional<FanSpec>& spec) {
  std::shared_ptr<Fan> f(new Fan());
  f->datum_ = std::move(datum);
  f->build_positive(spec);
  f->build_full();
  return f;
}

void Fan::build_positive(const std::optional<FanSpec>& spec) {
  const std::size_t r = dim();
  std::vector<RaySet> maxes;
  if (!spec) {
    for (std::size_t i = 0; i < r; ++i) {
      Vec e(r, 0);
      e[i] = 1;
      pos_rays_.push_back(e);
    }
    RaySet all(r);
    for (std::size_t i = 0; i < r; ++i) all[i] = i;
    maxes.push_back(all);
  } else {
    std::set<Vec> seen;
    for (const auto& v : spec->rays) {
      if (v.size() != r)
        throw Error(ErrorCode::InvalidInput, "ray " + to_string(v) + " should have " + std::to_string(r) + " coordinates");
      if (is_zero(v)) throw Error(ErrorCode::InvalidInput, "zero ray");
      if (std::any_of(v.begin(), v.end(), [](Int x) { return x < 0; }))
        throw Error(ErrorCode::NotInChamber, "ray " + to_string(v) + " lies outside the positive chamber");
      if (content(v) != 1) throw Error(ErrorCode::NotSmooth, "ray " + to_string(v) + " is not primitive");
      if (!seen.insert(v).second) throw Error(ErrorCode::InvalidInput, "duplicate ray " + to_string(v));
      pos_rays_.push_back(v);
    }
    std::set<RaySet> distinct;
    for (RaySet c : spec->max_cones) {
      std::sort(c.begin(), c.end());
      if (c.size() != r || std::adjacent_find(c.begin(), c.end()) != c.end())
        throw Error(ErrorCode::NotSubdivision, "a maximal cone needs " + std::to_string(r) + " distinct rays");
      for (auto j : c)
        if (j >= pos_rays_.size()) throw Error(ErrorCode::InvalidInput, "ray index out of range");
      if (!distinct.insert(c).second) throw Error(ErrorCode::NotSubdivision, "repeated maximal cone");
      maxes.push_back(c);
    }
    if (maxes.empty()) throw Error(ErrorCode::NotSubdivision, "no maximal cones");
  }

  // smoothness
  for (const auto& c : maxes) {
    Int d = determinant(columns_of(pos_rays_, c, r));
    if (d != 1 && d != -1)
      throw Error(ErrorCode::NotSmooth, "cone with determinant " + std::to_string(d) + " is not smooth");
  }
  std::vector<bool> used(pos_rays_.size(), false);
  for (const auto& c : maxes)
    for (auto j : c) used[j] = true;
  if (std::find(used.begin(), used.end(), false) != used.end())
    throw Error(ErrorCode::NotSubdivision, "a ray lies in no maximal cone");

  // The slice {sum v_i = 1} of the chamber is a unit simplex; each smooth
  // cone cuts out a simplex of normalized volume 1 / prod(coordinate sums).
  Rational volume = 0;
  for (const auto& c : maxes) {
    Rational piece = 1;
    for (auto j : c) {
      Int s = 0;
      for (Int x : pos_rays_[j]) s = checked_add(s, x);
      piece /= s;
    }
    volume += piece;
  }
  if (volume != 1) throw Error(ErrorCode::NotSubdivision, "maximal cones do not tile the chamber (volume mismatch)");

  // pseudo-manifold condition: wall facets once, interior facets twice with
  // the two cones on opposite sides
  std::map<RaySet, std::vector<std::pair<std::size_t, std::size_t>>> facets;  // facet -> (cone, omitted ray)
  for (std::size_t m = 0; m < maxes.size(); ++m)
    for (std::size_t k = 0; k < r; ++k) {
      RaySet fct;
      for (std::size_t t = 0; t < r; ++t)
        if (t != k) fct.push_back(maxes[m][t]);
      facets[fct].push_back({m, maxes[m][k]});
    }
  for (const auto& [fct, owners] : facets) {
    bool on_wall = false;
    for (std::size_t i = 0; i < r && !on_wall; ++i)
      on_wall = std::all_of(fct.begin(), fct.end(), [&](std::size_t j) { return pos_rays_[j][i] == 0; });
    if (on_wall) {
      if (owners.size() != 1) throw Error(ErrorCode::NotSubdivision, "a boundary facet is shared by several cones");
      continue;
    }
    if (owners.size() != 2) throw Error(ErrorCode::NotSubdivision, "an interior facet is not shared by exactly two cones");
    const auto& c0 = maxes[owners[0].first];
    IntMatrix u = unimodular_inverse(columns_of(pos_rays_, c0, r));
    std::size_t k = std::find(c0.begin(), c0.end(), owners[0].second) - c0.begin();
    if (dot(u.row(k), pos_rays_[owners[1].second]) >= 0)
      throw Error(ErrorCode::NotSubdivision, "two cones overlap across a facet");
  }

  wonderful_ = maxes.size() == 1 && pos_rays_.size() == r;
  if (wonderful_)
    for (std::size_t j = 0; j < r; ++j)
      wonderful_ = wonderful_ && std::count(pos_rays_[j].begin(), pos_rays_[j].end(), 0) == static_cast<long>(r) - 1;

  std::set<RaySet> all;
  for (const auto& c : maxes) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
      RaySet sub;
      for (std::size_t t = 0; t < r; ++t)
        if (mask >> t & 1) sub.push_back(c[t]);
      all.insert(sub);
    }
  }
  pos_cones_.assign(all.begin(), all.end());
  std::stable_sort(pos_cones_.begin(), pos_cones_.end(),
                   [](const RaySet& a, const RaySet& b) { return a.size() < b.size(); });
  for (std::size_t i = 0; i < pos_cones_.size(); ++i) pos_index_.emplace(pos_cones_[i], i);
  for (std::size_t i = 0; i < pos_cones_.size(); ++i)
    if (pos_cones_[i].size() == r) max_cones_.push_back(i);
}

void Fan::build_full() {
  const auto& wr = datum_->weyl_restricted();
  const std::size_t r = dim();
  for (const auto& g : wr.elements()) coweight_.push_back(r == 0 ? g : unimodular_inverse(g).transpose());

  rays_ = pos_rays_;
  for (std::size_t i = 0; i < rays_.size(); ++i) ray_index_.emplace(rays_[i], i);
  for (std::size_t g = 0; g < wr.order(); ++g)
    for (const auto& v : pos_rays_) {
      Vec img = coweight_[g] * v;
      if (ray_index_.emplace(img, rays_.size()).second) rays_.push_back(img);
    }
  for (std::size_t g = 0; g < wr.order(); ++g) {
    std::vector<std::size_t> perm;
    for (const auto& v : rays_) perm.push_back(ray_index_.at(coweight_[g] * v));
    ray_perm_.push_back(std::move(perm));
  }
  for (std::size_t g = 0; g < wr.order(); ++g)
    for (std::size_t t = 0; t < pos_cones_.size(); ++t) {
      RaySet img;
      for (auto j : pos_cones_[t]) img.push_back(ray_perm_[g][j]);
      std::sort(img.begin(), img.end());
      if (cone_index_.emplace(img, cones_.size()).second) cones_.push_back({img, g, t});
    }
}

std::optional<std::size_t> Fan::positive_cone_index(const RaySet& rays) const {
  RaySet s = rays;
  std::sort(s.begin(), s.end());
  auto it = pos_index_.find(s);
  if (it == pos_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Fan::require_positive_cone(const RaySet& rays) const {
  auto idx = positive_cone_index(rays);
  if (!idx) {
    std::string s;
    for (auto j : rays) s += (s.empty() ? "" : ",") + std::to_string(j + 1);
    throw Error(ErrorCode::ConeNotInFan, "<" + s + "> is not a cone of the positive fan");
  }
  return *idx;
}

std::optional<std::size_t> Fan::cone_index(const RaySet& rays) const {
  RaySet s = rays;
  std::sort(s.begin(), s.end());
  auto it = cone_index_.find(s);
  if (it == cone_index_.end()) return std::nullopt;
  return it->second;
}

bool Fan::is_face(std::size_t tau, std::size_t sigma) const {
  const auto& a = pos_cones_.at(tau);
  const auto& b = pos_cones_.at(sigma);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string Fan::cone_label(std::size_t positive_cone) const {
  std::string s;
  for (auto j : pos_cones_.at(positive_cone)) s += (s.empty() ? "" : ",") + std::to_string(j + 1);
  return "<" + s + ">";
}

std::optional<std::size_t> Fan::cone_from_label(const std::string& label) const {
  for (std::size_t i = 0; i < pos_cones_.size(); ++i)
    if (cone_label(i) == label) return i;
  return std::nullopt;
}

std::vector<RaySet> Fan::minimal_non_faces() const {
  std::vector<RaySet> out;
  const std::size_t n = pos_rays_.size();
  const std::size_t maxsize = std::min(n, dim() + 1);
  // subsets in increasing size; a non-face is minimal if all its facets are faces
  std::vector<RaySet> frontier = {{}};
  for (std::size_t size = 1; size <= maxsize; ++size) {
    std::vector<RaySet> next;
    std::set<RaySet> seen;
    for (const auto& base : frontier)
      for (std::size_t j = base.empty() ? 0 : base.back() + 1; j < n; ++j) {
        RaySet s = base;
        s.push_back(j);
        if (!seen.insert(s).second) continue;
        if (pos_index_.count(s)) {
          next.push_back(s);
          continue;
        }
        bool minimal = true;
        for (std::size_t t = 0; t < s.size() && minimal; ++t) {
          RaySet f = s;
          f.erase(f.begin() + t);
          minimal = pos_index_.count(f) > 0;
        }
        if (minimal) out.push_back(s);
      }
    frontier = std::move(next);
  }
  return out;
}

IntMatrix Fan::dual_basis(std::size_t max_cone) const {
  const auto& c = pos_cones_.at(max_cones_.at(max_cone));
  return unimodular_inverse(columns_of(pos_rays_, c, dim()));
}

const std::vector<std::size_t>& Fan::stabilizer(std::size_t positive_cone) const {
  std::lock_guard<std::mutex> lock(stab_mutex_);
  auto it = stab_cache_.find(positive_cone);
  if (it != stab_cache_.end()) return it->second;
  const auto& tau = pos_cones_.at(positive_cone);
  std::vector<std::size_t> out;
  for (std::size_t h = 0; h < datum_->weyl_H().order(); ++h) {
    const auto& perm = ray_perm_[datum_->restricted_image(h)];
    RaySet img;
    for (auto j : tau) img.push_back(perm[j]);
    std::sort(img.begin(), img.end());
    if (img == tau) out.push_back(h);
  }
  return stab_cache_.emplace(positive_cone, std::move(out)).first->second;
}

std::optional<Vec> Fan::shared_facet_character(std::size_t sigma, std::size_t sigma2) const {
  if (sigma == sigma2) return std::nullopt;
  const auto& a = pos_cones_.at(max_cones_.at(sigma));
  const auto& b = pos_cones_.at(max_cones_.at(sigma2));
  RaySet common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (common.size() + 1 != dim()) return std::nullopt;
  std::size_t k = 0;
  while (std::binary_search(b.begin(), b.end(), a[k])) ++k;
  return negate(dual_basis(sigma).row(k));
}

std::vector<std::size_t> Fan::facet_orthogonal_restricted_roots(std::size_t sigma) const {
  const auto& c = pos_cones_.at(max_cones_.at(sigma));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    std::size_t nonzero = std::count_if(c.begin(), c.end(), [&](std::size_t j) { return pos_rays_[j][i] != 0; });
    if (nonzero == 1) out.push_back(i);
  }
  return out;
}

std::size_t Fan::translate(std::size_t restricted, std::size_t positive_cone) const {
  RaySet img;
  for (auto j : pos_cones_.at(positive_cone)) img.push_back(ray_perm_[restricted][j]);
  auto idx = cone_index(img);
  if (!idx) throw Error(ErrorCode::ConeNotInFan, "internal: translate left the fan");
  return *idx;
}

}  // namespace eqk
