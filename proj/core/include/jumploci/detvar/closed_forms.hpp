#pragma once

#include <jumploci/exact/poly.hpp>
#include <jumploci/exact/rational.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jl {

// b x a matrices of rank <= a - k, 1 <= k <= a <= b.
struct GenericModel {
  int a = 1, b = 1, k = 1;
};

// Throws HypothesisError unless 1 <= k <= a <= b.
void validate_model(int a, int b, int k);

struct CodimDim {
  Integer codim;
  Integer dim;
};

struct LctResult {
  Rational value;
  std::vector<int> argmin;  // every index attaining the minimum
};

// One blowup step: center of codimension nu, multiplicity N of the new
// exceptional divisor in the pulled-back ideal.
struct ResolutionStep {
  int i = 0;
  std::string center;
  Integer N;
  Integer nu;
};

struct ResolutionData {
  std::vector<ResolutionStep> steps;
  LctResult min_ratio() const;  // min nu_i / N_i
  // -nu_i / N_i without duplicates, sorted decreasingly.
  std::vector<Rational> candidate_poles() const;
};

// J_index^(exponent); exponents <= 0 mean the unit factor.
struct ProfileFactor {
  int ideal_index = 0;
  Integer exponent;
  bool trivial = false;
};

struct MultiplierProfile {
  Rational c;
  std::vector<ProfileFactor> factors;
  bool trivial = false;                   // every factor is the unit ideal
  std::optional<Integer> power_of_j1;     // k = 1: J_1^(floor c + a - b)
};

struct Zeta {
  std::vector<Rational> poles;  // sorted decreasingly
  bool closed_form = false;     // false: candidates from resolution data
  bool subset_caveat = false;   // true when the actual poles may be fewer
};

struct MonodromyCheck {
  bool holds = false;
  std::vector<std::pair<Rational, Integer>> matched;  // (pole, b-function root)
  std::vector<Rational> unmatched;
  bool candidates_only = false;
};

struct MldPair {
  Integer along_next_stratum;
  Integer at_point;
};

CodimDim generic_codim_dim(const GenericModel& m);
Integer generic_multiplicity(const GenericModel& m);
LctResult generic_lct(const GenericModel& m);
MultiplierProfile multiplier_profile_generic(const GenericModel& m, const Rational& c);
Integer jet_component_count(const GenericModel& m, int n);
// prod_{i = b-a+1}^{b} (s + i) in the variable s, plus its roots (decreasing).
struct BFunction {
  MultiPoly poly;
  std::vector<Integer> roots;
};
BFunction bs_poly_maximal_minors(int a, int b);
Zeta zeta_square(int a, int k);
ResolutionData resolution_data_generic(const GenericModel& m);
Integer euler_obstruction(int a, int k);
MldPair mld_generic(int a, int k, int k_prime);
MonodromyCheck monodromy_check(int a, int b);
std::vector<ProfileFactor> hodge_profile_square(int a, int p);

struct MinexpBounds {
  std::optional<Rational> upper;  // dim X / e, only for e >= 2
  std::optional<Rational> lower;  // min nu/N over exceptional divisors
};
MinexpBounds minexp_bounds(int dim_x, int mult_e, const ResolutionData& res);

struct OneGenericSquare {
  Rational lct;
  Rational lower_open;             // minimal exponent > lower_open
  std::optional<Rational> upper;   // <= upper when dim N = 2a - 1
};
OneGenericSquare one_generic_square_minexp_bounds(int a, int dim_n);

struct ResiliencyReport {
  bool cohen_macaulay = false;
  std::optional<Integer> codim_nk;  // k(k + b - a) when Cohen-Macaulay applies
  bool variety = false;
  bool normal = false;
  bool minors_independent = false;
  bool minors_prime = false;
  std::optional<Integer> h_codim_bound;  // k(b - a + 2h - k) for N itself k-generic
  std::vector<std::string> triggers;
};
ResiliencyReport resiliency_bounds(int a, int b, int k, int codim_in_nprime, int h);

}  // namespace jl
