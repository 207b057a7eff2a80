#pragma once

#include <jumploci/detvar/hankel.hpp>
#include <jumploci/detvar/report.hpp>
#include <jumploci/exact/polymatrix.hpp>

#include <optional>
#include <string>
#include <vector>

namespace jl {

// Curve of genus g, stable bundle E of rank n and degree d, twisting bundle F,
// jump level k, and l = h^0(E (x) F).
struct BNInput {
  int g = 0;
  int n = 1;
  int d = 0;
  int k = 1;
  int rank_f = 1;
  int deg_f = 0;
  std::optional<int> l;
};

// chi(E (x) F) = n deg F - rank F (n(g-1) - d).
Integer euler_char(int g, int n, int d, int rank_f, int deg_f);

struct Rho {
  Integer rho;
  Integer dim_moduli;  // n^2 (g-1) + 1
  Integer codim;       // k (k - chi)
};
Rho rho(int g, int n, int d, int k, int rank_f, int deg_f);

struct Normalization {
  BNInput output;
  bool swapped = false;
  bool everything = false;    // swapped k <= 0: the locus is the whole moduli space
  bool out_of_range = false;  // swapped degree < 0
  std::vector<std::string> transcript;
};
// Serre-duality swap when chi > 0 so that l <= l'.
Normalization normalize(const BNInput& in);

enum class PetriModel { Injective, Hyperelliptic, Unknown };
PetriModel parse_petri_model(const std::string& s);
std::string to_string(PetriModel m);

// Requires chi <= 0, 1 <= k <= l and an injective Petri map (recorded as a
// hypothesis). Delegates to the generic model (a, b) = (l, l - chi).
InvariantReport bn_report(const BNInput& in, const GenericReportOptions& opt = {});

struct LctChain {
  std::vector<std::string> terms;      // left to right, each ">=" the next
  std::vector<bool> equalities;        // per link
  std::vector<std::string> link_notes;
  std::optional<Rational> value;       // computable right-hand value
  std::string model;
};
LctChain lct_chain(const BNInput& in, PetriModel model);
Json lct_chain_json(const LctChain& c);

struct PetriHankel {
  int g = 0, d = 0, r = 0;
  int l = 0, l_prime = 0;
  PolyMatrix matrix;  // l' x l
};
// Multiplication S^r V (x) S^{g-1-d+r} V -> S^{g-1-d+2r} V of binary forms
// in the monomial bases, as a matrix of linear forms.
PetriHankel hyperelliptic_petri(int g, int d, int r);
Json petri_hankel_json(const PetriHankel& p);

// Hyperelliptic W^{k-1}_d = V_k at L with h^0(L) = l (default k); fields
// carry "unconditional" or "conditional on hyperelliptic local-model hypothesis".
InvariantReport hyperelliptic_report(int g, int d, int k, std::optional<int> l = {});

inline constexpr const char* kUnconditional = "unconditional";
inline constexpr const char* kConditional = "conditional on hyperelliptic local-model hypothesis";

}  // namespace jl
