#include "eqk/symmetric_datum.hpp"

#include <algorithm>
#include <set>

namespace eqk {

namespace {

std::vector<CartanType> components_for(const DatumSpec& spec) {
  if (spec.types.empty()) throw Error(ErrorCode::InvalidInput, "datum spec has no Cartan type");
  if (!spec.group_case) return spec.types;
  if (spec.types.size() != 1) throw Error(ErrorCode::InvalidInput, "group case takes a single simple type");
  return {spec.types[0], spec.types[0]};
}

IntMatrix group_case_theta(std::size_t k) {
  // theta(alpha_i, 0) = (0, alpha_i) = -(0, -alpha_i)
  IntMatrix t(2 * k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    t(k + i, i) = -1;
    t(i, k + i) = -1;
  }
  return t;
}

// E M E^{-1}, required to be integral.
IntMatrix conjugate_by(const IntMatrix& e, const IntMatrix& m) {
  try {
    return solve_exact(e.transpose(), (e * m).transpose()).transpose();
  } catch (const Error&) {
    throw Error(ErrorCode::RootSystemViolation, "automorphism does not preserve the weight lattice");
  }
}

std::vector<LatticeAction> actions_for(const IntMatrix& q, const IntMatrix& s, const std::vector<IntMatrix>& gens) {
  std::vector<LatticeAction> out;
  for (const auto& g : gens) out.push_back({g, q * g * s});
  return out;
}

}  // namespace

IntMatrix quotient_by_minus_eigenlattice(const IntMatrix& theta) {
  const std::size_t n = theta.rows();
  IntMatrix k = integer_kernel(theta + IntMatrix::identity(n));
  if (k.cols() == n) return IntMatrix(0, n);
  if (k.cols() == 0) return IntMatrix::identity(n);
  SmithForm f = smith_normal_form(k);
  return row_hermite_form(f.U.row_block(k.cols(), n));
}

SymmetricDatum::SymmetricDatum(DatumSpec spec, RootSystem roots) : spec_(std::move(spec)), roots_(std::move(roots)) {}

std::shared_ptr<const SymmetricDatum> SymmetricDatum::build(const DatumSpec& spec) {
  std::shared_ptr<SymmetricDatum> d(new SymmetricDatum(spec, RootSystem(components_for(spec))));
  const std::size_t n = d->rank();
  if (n > 12) throw Error(ErrorCode::UnsupportedType, "rank above the supported bound");

  if (spec.group_case) {
    d->theta_ = group_case_theta(n / 2);
  } else {
    if (!spec.theta) throw Error(ErrorCode::InvalidInput, "theta_matrix is required unless group_case is set");
    d->theta_ = *spec.theta;
  }
  const IntMatrix& th = d->theta_;
  if (th.rows() != n || th.cols() != n)
    throw Error(ErrorCode::InvalidInput, "theta must be " + std::to_string(n) + "x" + std::to_string(n));
  const IntMatrix id = IntMatrix::identity(n);
  if (!(th * th == id)) throw Error(ErrorCode::NotInvolution, "theta^2 is not the identity");

  const auto& rs = d->roots_;
  for (const auto& a : rs.roots())
    if (!rs.is_root(th * a)) throw Error(ErrorCode::RootSystemViolation, "theta(" + to_string(a) + ") is not a root");

  for (std::size_t i = 0; i < n; ++i)
    if (th.column(i) == id.column(i)) d->delta_L_.push_back(i);
  std::vector<bool> in_L(n, false);
  for (auto i : d->delta_L_) in_L[i] = true;
  for (const auto& a : rs.roots()) {
    bool fixed = th * a == a;
    bool supported = true;
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != 0 && !in_L[i]) supported = false;
    if (fixed != supported)
      throw Error(ErrorCode::RootSystemViolation,
                  "the theta-fixed roots are not the roots spanned by the theta-fixed simple roots (at " +
                      to_string(a) + ")");
  }

  // restricted simple roots
  for (std::size_t i = 0; i < n; ++i) {
    if (in_L[i]) continue;
    Vec g = sub(id.column(i), th.column(i));
    if (std::find(d->gammas_.begin(), d->gammas_.end(), g) != d->gammas_.end()) continue;
    d->gammas_.push_back(g);
    d->gamma_source_.push_back(i);
    Vec a = id.column(i);
    d->gamma_lift_.push_back(rs.reflection(a) * rs.reflection(th * a));
  }
  const std::size_t r = d->gammas_.size();
  const std::size_t minus_dim = n - eqk::rank(th + id);
  if (r != minus_dim)
    throw Error(ErrorCode::NotMinimalRank, "rk(G/H) = " + std::to_string(r) + " but rk(G) - rk(H) = " +
                                               std::to_string(minus_dim));
  IntMatrix gamma = IntMatrix::from_columns(d->gammas_, n);
  IntMatrix qm = IntMatrix::identity(n);
  d->to_gamma_ = IntMatrix(0, n);
  if (r > 0) {
    SmithForm gf = smith_normal_form(gamma);
    auto divs = gf.elementary_divisors();
    if (gf.rank() != r || std::any_of(divs.begin(), divs.end(), [](Int x) { return x != 1; }))
      throw Error(ErrorCode::NotMinimalRank, "restricted simple roots do not form a basis of the -1 eigenlattice");
    d->to_gamma_ = gf.V * gf.U.row_block(0, r);
    qm = r == n ? IntMatrix(0, n) : row_hermite_form(gf.U.row_block(r, n));
  }

  // lattices and maps
  std::vector<std::string> xt_labels;
  for (std::size_t i = 0; i < n; ++i) xt_labels.push_back("a" + std::to_string(i + 1));
  d->xt_ = make_lattice("X*(T)", xt_labels);
  d->xth_ = make_lattice("X*(T_H)", n - r, "h");
  d->xtth_ = make_lattice("X*(T/T_H)", r, "g");
  d->q_.emplace(d->xt_, d->xth_, qm);
  d->incl_.emplace(d->xtth_, d->xt_, gamma);
  d->section_.emplace(split_surjection(*d->q_));
  if (!(qm * gamma == IntMatrix(n - r, r)))
    throw Error(ErrorCode::RootSystemViolation, "internal: q does not kill the restricted roots");

  // Weyl groups
  d->w_ = MatrixGroup::generated_by(rs.simple_reflections(), n);
  if (d->w_.order() != rs.weyl_order_formula())
    throw Error(ErrorCode::RootSystemViolation, "internal: Weyl group order mismatch");
  std::vector<IntMatrix> lgens;
  for (auto i : d->delta_L_) lgens.push_back(rs.simple_reflections()[i]);
  d->wl_ = MatrixGroup::generated_by(lgens, n);
  std::vector<IntMatrix> hgens = lgens;
  for (const auto& m : d->gamma_lift_) hgens.push_back(m);
  d->wh_ = MatrixGroup::generated_by(hgens, n);

  std::size_t fixed_count = 0;
  for (const auto& w : d->w_.elements())
    if (w * th == th * w) ++fixed_count;
  for (const auto& w : d->wh_.elements()) {
    auto idx = d->w_.index_of(w);
    if (!idx || !(w * th == th * w)) throw Error(ErrorCode::RootSystemViolation, "W_H is not inside W^theta");
    d->wh_in_w_.push_back(*idx);
  }
  if (fixed_count != d->wh_.order())
    throw Error(ErrorCode::RootSystemViolation, "W_H differs from the theta-centralizer in W");

  auto restricted = [&](const IntMatrix& w) { return d->to_gamma_ * w * gamma; };
  std::vector<IntMatrix> rgens;
  for (const auto& m : d->gamma_lift_) rgens.push_back(restricted(m));
  d->wr_ = MatrixGroup::generated_by(rgens, r);
  const IntMatrix& s = d->section_->matrix();
  std::size_t kernel_count = 0;
  for (const auto& w : d->wh_.elements()) {
    IntMatrix rw = restricted(w);
    if (!(gamma * rw == w * gamma)) throw Error(ErrorCode::RootSystemViolation, "internal: W_H does not preserve ker q");
    auto idx = d->wr_.index_of(rw);
    if (!idx) throw Error(ErrorCode::RootSystemViolation, "W_H image is not generated by the restricted reflections");
    d->wh_image_.push_back(*idx);
    if (*idx == 0) ++kernel_count;
    IntMatrix a = qm * w * s;
    if (!(a * qm == qm * w)) throw Error(ErrorCode::RootSystemViolation, "internal: W_H does not descend to T_H");
    d->wh_on_th_.push_back(std::move(a));
  }
  if (kernel_count != d->wl_.order() || d->wh_.order() != d->wl_.order() * d->wr_.order())
    throw Error(ErrorCode::RootSystemViolation, "1 -> W_L -> W_H -> W_{G/H} -> 1 is not exact");

  d->cosets_w_ = left_cosets(d->w_, d->wl_);
  d->cosets_wh_ = left_cosets(d->wh_, d->wl_);
  return d;
}

std::string SymmetricDatum::label() const {
  std::string s;
  for (const auto& c : roots_.components()) s += (s.empty() ? "" : "x") + c.label();
  if (spec_.group_case) s += " (group case)";
  return s;
}

Vec SymmetricDatum::to_quotient_coords(const Vec& x) const {
  Vec c = to_gamma_ * x;
  if (!(incl_->matrix() * c == x)) throw Error(ErrorCode::LatticeMismatch, to_string(x) + " is not in ker q");
  return c;
}

Vec SymmetricDatum::restrict_to_split(const Vec& x) const { return to_quotient_coords(sub(x, theta_ * x)); }

std::vector<Vec> SymmetricDatum::q_fiber(const Vec& beta) const {
  std::vector<Vec> out;
  for (const auto& a : roots_.roots())
    if ((*q_)(a) == beta) out.push_back(a);
  return out;
}

std::string SymmetricDatum::weyl_label(std::size_t w_index) const {
  const auto& word = w_.word(w_index);
  if (word.empty()) return "e";
  std::string s;
  for (int k : word) s += (s.empty() ? "s" : ".s") + std::to_string(k + 1);
  return s;
}

SplittingReport splitting_check(const SymmetricDatum& datum) {
  SplittingReport rep;
  std::vector<IntMatrix> lgens = datum.weyl_L().generators();
  std::vector<IntMatrix> hgens = datum.weyl_H().generators();

  auto run = [](const IntMatrix& q, const std::vector<IntMatrix>& wl, const std::vector<IntMatrix>& wh, bool& split,
                bool& wl_ok, bool& wh_ok) {
    auto src = make_lattice("source", q.cols(), "x");
    auto tgt = make_lattice("target", q.rows(), "y");
    LatticeMap qm(src, tgt, q);
    try {
      LatticeMap s = split_surjection(qm);
      split = true;
      auto al = actions_for(q, s.matrix(), wl);
      auto ah = actions_for(q, s.matrix(), wh);
      wl_ok = equivariant_section_exists(qm, al);
      wh_ok = equivariant_section_exists(qm, ah);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotSurjective) throw;
      split = wl_ok = wh_ok = false;
    }
  };

  run(datum.q().matrix(), lgens, hgens, rep.adjoint_splitting_exists, rep.adjoint_wl_invariant_splitting_exists,
      rep.adjoint_wh_invariant_splitting_exists);

  // weight lattice: alpha_j = sum_i a_ij varpi_i, so the root lattice embeds by the Cartan matrix
  const IntMatrix& e = datum.roots().cartan();
  IntMatrix theta_p = conjugate_by(e, datum.theta());
  std::vector<IntMatrix> lp, hp;
  for (const auto& g : lgens) lp.push_back(conjugate_by(e, g));
  for (const auto& g : hgens) hp.push_back(conjugate_by(e, g));
  run(quotient_by_minus_eigenlattice(theta_p), lp, hp, rep.splitting_exists, rep.wl_invariant_splitting_exists,
      rep.wh_invariant_splitting_exists);
  return rep;
}

}  // namespace eqk
