#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "eqk/decomposition.hpp"
#include "eqk/json_io.hpp"

namespace eqk {

// Independent reference implementations used to cross-check the library.
namespace oracle {

/// f - g maps to zero in Z[L / Z chi]: terms are grouped into classes of
/// exponents differing by an integer multiple of chi and each class must sum to 0.
bool congruent_by_projection(const GroupRingElement& f, const GroupRingElement& g, const Vec& chi);

/// Number of left cosets gH found by materializing each coset as a set.
std::size_t coset_count(const MatrixGroup& group, const MatrixGroup& subgroup);

/// Curves found by testing every pair of fixed points against every coset
/// element and every rule of the curve lemma.
std::set<Curve> brute_force_curves(const FixedPointSet& pts);

/// kg membership with every congruence decided by congruent_by_projection.
bool kg_membership(const Fan& fan, const std::vector<GroupRingElement>& f);

}  // namespace oracle

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

Json to_json(const CriterionResult& r);

struct SuiteOptions {
  std::uint64_t seed = 0x5eed5eedULL;
  std::size_t samples = 100;             // random elements / pairs per suite
  std::size_t congruence_triples = 1000;
};

/// Runs `body` (returning a detail string, throwing on failure) with timing.
CriterionResult run_criterion(int id, std::string name, double limit_seconds, const std::function<std::string()>& body);

/// Thrown by the checks below when a property fails.
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
void require(bool condition, const std::string& what);

// Property checks; each returns a short summary and throws CheckFailure.
std::string check_datum(const Fan& fan);
std::string check_fixed_points_and_curves(const FanPtr& fan);
std::string check_congruences(const FanPtr& fan, const SuiteOptions& opt);
std::string check_sr_decomposition(const FanPtr& fan, const SuiteOptions& opt);
std::string check_kiso(const SymmetricDatum& d, const SuiteOptions& opt);
std::string check_splitting(const SymmetricDatum& d, std::optional<std::pair<bool, bool>> expected);
std::string check_presentation(const FanPtr& fan);
std::string check_multifiltration(const FanPtr& fan, const SuiteOptions& opt);

/// All eight suites on one datum and fan (the CLI `verify` verb).
std::vector<CriterionResult> run_verification(const FanPtr& fan, const SuiteOptions& opt = {});

// Random inputs shared by the suites and the tests.
GroupRingElement random_element(const LatticePtr& l, std::mt19937_64& rng, std::size_t terms, Int range);
/// A W_tau-invariant element of C_tau (x) R(T_H).
GroupRingElement random_component(const KModel& m, std::size_t tau, std::mt19937_64& rng);
/// Random element of the filtration piece F_tau, as a decomposition.
GradedDecomposition random_filtered(const KModel& m, std::size_t tau, std::mt19937_64& rng);

}  // namespace eqk
