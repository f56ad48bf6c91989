#pragma once

#include <map>
#include <string>
#include <vector>

#include "liecheck/weightcalc.hpp"

namespace liecheck {

// A finitely generated abelian value group, written multiplicatively:
// each generator is either free (order 0) or torsion of the given
// order (>= 2).  Elements are reduced exponent vectors.
struct Generator {
  std::string name;
  long long order = 0;  // 0 = infinite
};

struct GroupValue {
  std::vector<long long> e;
  bool operator==(const GroupValue&) const = default;
  bool operator<(const GroupValue& o) const { return e < o.e; }
};

class ValueGroup {
public:
  ValueGroup() = default;
  explicit ValueGroup(std::vector<Generator> gens);

  const std::vector<Generator>& gens() const { return gens_; }
  int size() const { return static_cast<int>(gens_.size()); }
  int index_of(const std::string& name) const;  // -1 if absent

  GroupValue identity() const { return GroupValue{std::vector<long long>(gens_.size(), 0)}; }
  GroupValue reduce(GroupValue v) const;
  GroupValue mul(const GroupValue& a, const GroupValue& b) const;
  GroupValue inverse(const GroupValue& a) const;
  GroupValue pow(const GroupValue& a, long long k) const;
  bool is_identity(const GroupValue& a) const;

  // Monomial syntax: "a^2*b1^-1", single "a", or "1" for the identity.
  GroupValue parse_value(const std::string& text) const;
  std::string format_value(const GroupValue& v) const;

private:
  std::vector<Generator> gens_;
};

// A semisimple torus element, described by its value on each
// fundamental weight; the value on any weight follows additively.
struct TorusElement {
  ValueGroup vg;
  std::vector<GroupValue> basis_values;  // one per fundamental weight
};

GroupValue evaluate(const TorusElement& t, const Weight& w);

bool is_central(const RootSystem& rs, const TorusElement& t);
bool is_regular(const RootSystem& rs, const TorusElement& t);
// All |Phi| root values pairwise distinct.
bool is_strongly_regular(const RootSystem& rs, const TorusElement& t);

// Eigenvalue list with multiplicities, sorted by exponent vector.
using Spectrum = std::vector<std::pair<GroupValue, long long>>;
Spectrum spectrum(const WeightSystem& ws, const TorusElement& t);

bool is_cyclic(const WeightSystem& ws, const TorusElement& t);
// At most one eigenvalue has multiplicity > 1.
bool is_almost_cyclic(const WeightSystem& ws, const TorusElement& t);
// Distinct weights of ws take distinct values at t.
bool separates_weights(const WeightSystem& ws, const TorusElement& t);

// Pairs of distinct roots (resp. weights) taking equal values; stops
// after max_pairs entries.
std::vector<std::pair<Weight, Weight>> equal_root_pairs(
    const RootSystem& rs, const TorusElement& t, std::size_t max_pairs = 16);
std::vector<std::pair<Weight, Weight>> equal_weight_pairs(
    const WeightSystem& ws, const TorusElement& t, std::size_t max_pairs = 16);

// Constraint solving: find a torus element with w_j(t) = v_j for the
// given weights.  Solved per generator through the Smith normal form
// of the constraint matrix.  When a free generator would need a root
// extraction of degree D the generator is rescaled (its exponents in
// the input are multiplied by D) and the substitution is reported in
// `rescale`.  Free directions left by a non-spanning constraint set
// get fresh infinite-order generators c1, c2, ...
struct Constraint {
  Weight w;
  GroupValue v;
};

struct SolveResult {
  TorusElement element;
  std::map<std::string, long long> rescale;
};

SolveResult solve_constraints(const RootSystem& rs, const ValueGroup& vg,
                              const std::vector<Constraint>& constraints);

// JSON round trip.  Layout:
// {"group":"C3","params":[{"name":"a","order":0}],
//  "values":{"w1":"a^1","w2":"a^4","w3":"a^4"}}
// A "eps" object may replace "values"; its entries constrain the
// epsilon characters and the element is produced by solve_constraints.
std::string torus_element_json(const TorusElement& t);
TorusElement torus_element_from_json(const RootSystem& rs, const std::string& text);

}  // namespace liecheck
