#pragma once

#include <jumploci/detvar/closed_forms.hpp>
#include <jumploci/detvar/hankel.hpp>
#include <jumploci/exact/json_io.hpp>

#include <optional>
#include <string>

namespace jl {

// Named fields in insertion order, each with a provenance note.
class InvariantReport {
 public:
  InvariantReport(std::string model, Json parameters);

  void set(const std::string& name, Json value, const std::string& provenance);
  void add_hypothesis(const std::string& h);
  bool has(const std::string& name) const;
  const Json& value(const std::string& name) const;
  // Copy every field of `other` (later set() calls may overwrite them).
  void absorb(const InvariantReport& other);
  Json to_json() const;

 private:
  std::string model_;
  Json parameters_;
  Json hypotheses_ = Json::array();
  Json fields_ = Json::object();
};

struct GenericReportOptions {
  std::optional<Rational> c;     // multiplier profile coefficient
  std::optional<int> jets;       // jet order n
  std::optional<int> hodge_p;    // square case only
  std::optional<int> k_prime;    // mld at a point of M_k' \ M_k'+1, square case
};

InvariantReport generic_invariants(const GenericModel& m, const GenericReportOptions& opt = {});
InvariantReport hankel_invariants(const HankelModel& h);

Json integer_json(const Integer& n);
Json rationals_json(const std::vector<Rational>& qs);
Json resolution_json(const ResolutionData& r);
Json lct_json(const LctResult& l);
Json profile_json(const std::vector<ProfileFactor>& f);

// Provenance labels.
inline constexpr const char* kClosedForm = "closed_form";
inline constexpr const char* kDerived = "derived, not quoted";
inline constexpr const char* kComputed = "computed";

}  // namespace jl
