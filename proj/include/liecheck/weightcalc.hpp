#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "liecheck/rootsys.hpp"

namespace liecheck {

// Characteristic tag: 0 or a prime.
struct CharTag {
  int p = 0;
  CharTag() = default;
  explicit CharTag(int prime);  // validates
};

enum class TableClass { AllMultOne, NonzeroMultOne, NotListed };

struct TableEntry {
  TableClass cls = TableClass::NotListed;
  long long zero_mult = 0;  // meaningful for NonzeroMultOne only
  std::string row;          // which classification row matched
};

// mu <= lambda in the dominance order (lambda - mu a nonnegative
// integral combination of simple roots).
bool dominance_leq(const RootSystem& rs, const Weight& mu, const Weight& lam);

// Dominant weights mu <= lambda, lambda itself first, then by
// increasing height of lambda - mu, ties broken lexicographically.
std::vector<Weight> subdominant_weights(const RootSystem& rs, const Weight& lam);

// The weight set predicted for an irreducible restricted module in
// characteristic p when p = 0 or p > e(G): union of Weyl orbits of all
// subdominant weights.  The one small-characteristic exception with its
// own published set, (G2, p=2, w2), returns the roots plus zero.
std::set<Weight> premet_weight_set(const RootSystem& rs, const Weight& lam, CharTag c);

// Characteristic-zero multiplicities of all dominant weights of the
// irreducible module with highest weight lam (Freudenthal recursion).
std::map<Weight, long long> char0_dominant_multiplicities(const RootSystem& rs,
                                                          const Weight& lam);
long long freudenthal_multiplicity(const RootSystem& rs, const Weight& lam,
                                   const Weight& mu);

// Weyl dimension formula, exact.
long long weyl_dimension(const RootSystem& rs, const Weight& lam);

// Multiplicity-one classification lookup.  p-conditions are read in the
// characteristic-zero convention: at p = 0 every lower bound or
// exclusion on p is vacuous, and rows whose coefficients depend on p
// are skipped.
TableEntry table_lookup(GroupType t, CharTag c, const Weight& lam);

bool is_minuscule(GroupType t, const Weight& lam);

// Full weight table (weight -> multiplicity) of a direct sum of
// irreducible restricted modules.  Throws unsupported_error when a
// modular multiplicity is not determined by the classification data.
struct WeightSystem {
  GroupType type;
  int p = 0;
  std::vector<Weight> pieces;            // highest weights of the summands
  std::map<Weight, long long> table;     // every weight with multiplicity

  long long dim() const {
    long long d = 0;
    for (const auto& [w, m] : table) d += m;
    return d;
  }
};

WeightSystem weight_system(const RootSystem& rs, const std::vector<Weight>& pieces,
                           CharTag c);
WeightSystem weight_system(const RootSystem& rs, const Weight& lam, CharTag c);

std::string weight_system_json(const WeightSystem& ws);

}  // namespace liecheck
