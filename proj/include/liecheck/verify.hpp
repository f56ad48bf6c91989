#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecheck/torus.hpp"

namespace liecheck {

// Scanning enumerates torus elements as exponent vectors in (Z/N)^rank
// over a single order-N generator: the mu_N-points of the torus.

enum class ScanMode { exhaustive, sampled };

enum class Pipeline {
  // implication checks (record counterexamples; for exception modules
  // record a witness of the exceptional behaviour instead)
  cyclic_implies_strongly_regular,          // th1 shape
  regular_almost_cyclic_implies_strongly_regular,  // re1 shape
  strongly_regular_iff_almost_cyclic,       // sa1 shape, non-central s
  almost_cyclic_tensor_implies_cyclic_factors,     // td2(1), two modules
  // searches
  find_cyclic_not_strongly_regular,
  find_regular_cyclic_not_strongly_regular,
};

struct ScanSpec {
  GroupType group;
  CharTag chr;
  long long modulus = 12;
  std::vector<std::vector<Weight>> modules;  // each entry a direct sum
  Pipeline pipeline = Pipeline::cyclic_implies_strongly_regular;
  ScanMode mode = ScanMode::exhaustive;
  long long sample_count = 1000000;
  unsigned long long seed = 0;
  int threads = 1;
};

struct ScanHit {
  std::vector<long long> exponents;
  std::string detail;
};

struct LambdaResult {
  std::string lambda;
  std::string source;  // classification row that put it in the scan
  bool exception = false;
  long long checked = 0;
  long long central = 0;
  std::vector<ScanHit> counterexamples;
  std::optional<ScanHit> witness;
};

struct TheoremReport {
  std::string theorem;
  GroupType group;
  int p = 0;
  long long modulus = 0;
  std::string mode;
  std::string scope;  // "verified over mu_N-points (N=...)"
  long long elements = 0;
  std::vector<LambdaResult> lambdas;
  std::vector<std::pair<std::string, std::string>> skipped;  // lambda, reason
  long long wall_time_ms = 0;

  bool passed() const;              // no counterexamples anywhere
  bool witnesses_complete() const;  // every exception lambda has a witness
  // wall_time_ms is excluded when include_timing is false so replayed
  // reports compare byte-identical
  std::string json(bool include_timing = true) const;
};

TheoremReport scan(const ScanSpec& spec);
TheoremReport verify_th1(GroupType t, CharTag c, long long N, int threads = 1);
TheoremReport verify_re1(GroupType t, CharTag c, long long N, int threads = 1);
TheoremReport verify_sa1(GroupType t, CharTag c, long long N, int threads = 1);

// Multiset convolution of two eigenvalue lists over one value group.
Spectrum tensor_spectrum(const ValueGroup& vg, const Spectrum& a, const Spectrum& b);

// Same weights scaled by p^k.
WeightSystem frobenius_twist_spectrum(const WeightSystem& ws, int k, int p);

// Forbidden adjacent highest-weight pairs in small characteristic.
std::vector<std::pair<Weight, Weight>> td4_exclusions(GroupType t, int p);

// The mu_N-point with the given omega-basis exponents, as a torus
// element over one generator "z" of order N.
TorusElement element_from_exponents(const RootSystem& rs, long long N,
                                    const std::vector<long long>& exponents);

// Concrete classification-table instances used as scan candidates.
struct CandidateWeight {
  Weight w;
  std::string source;
};
std::vector<CandidateWeight> table1_instances(GroupType t, CharTag c,
                                              long long coeff_bound = 4);
std::vector<CandidateWeight> table2_instances(GroupType t, CharTag c);

// Exception membership for the two theorems.
bool in_table3(GroupType t, int p, const Weight& lam);
bool in_re1_exceptions(GroupType t, int p, const Weight& lam);

}  // namespace liecheck
