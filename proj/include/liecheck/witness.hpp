#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "liecheck/torus.hpp"

namespace liecheck {

// A fixed root subsystem, its simple roots written in ambient
// fundamental-weight coordinates.
struct SubsystemEmbedding {
  std::string id;  // "D5<E6", "A7<E7", "B4<F4", "D4<B4"
  GroupType ambient;
  GroupType sub;
  std::vector<Weight> sub_simple;
};

const std::vector<SubsystemEmbedding>& subsystem_embeddings();
const SubsystemEmbedding& embedding_by_id(const std::string& id);
// Checks every listed weight is an ambient root and the pairwise
// Cartan integers reproduce the subsystem Cartan matrix.
void validate_embedding(const RootSystem& ambient, const SubsystemEmbedding& emb);
// Restriction of an ambient weight to the subsystem torus:
// coefficient j is <mu, delta_j^vee>.
Weight restrict_weight(const RootSystem& ambient, const SubsystemEmbedding& emb,
                       const Weight& mu);

// One constraint of a witness recipe, in text form.  lhs is "eK"
// (epsilon character), "aK" (simple root) or a weight like "2*w1";
// for embedded recipes lhs refers to the subsystem.  rhs is a
// monomial over the declared generators.
struct ConstraintSpec {
  std::string lhs;
  std::string rhs;
};

// A target module (direct sum of highest weights, "0" allowed) with
// the predicate outcomes the source construction promises.
struct TargetSpec {
  std::vector<std::string> pieces;
  std::optional<bool> cyclic;
  std::optional<bool> almost_cyclic;
  std::optional<bool> separates;
  // eigenvalue 1 occurs with exactly the zero-weight multiplicity
  bool identity_mult_equals_zero_mult = false;

  std::string label() const;
};

struct WitnessCase {
  std::string id;
  GroupType group;
  int p = 0;
  std::vector<Generator> gens;
  std::vector<ConstraintSpec> constraints;
  std::string via;  // embedding id, or empty for a direct recipe
  bool odd_orders_required = false;
  std::optional<bool> expect_regular;
  std::optional<bool> expect_strongly_regular;
  std::vector<TargetSpec> targets;
  std::vector<int> invalid_p;  // characteristics with no such witness
  std::string note;
};

const std::vector<WitnessCase>& list_cases();
const WitnessCase& case_by_id(const std::string& id);

// Deterministic search for the 8 exponents behind the E7 witness:
// sum zero, 2*e1 = e2 + e3, all 56 values +-(ei+ej) distinct, no
// four-subset sum zero.  Result is cached.
const std::array<long long, 8>& e7_exponents();

TorusElement build_witness(const RootSystem& rs, const WitnessCase& c);
SolveResult build_witness_full(const RootSystem& rs, const WitnessCase& c);

struct PredicateOutcome {
  std::string name;
  bool expected = false;
  bool actual = false;
};

struct WitnessReport {
  std::string id;
  GroupType group;
  int p = 0;
  std::string status;  // "ok" | "mismatch" | "skipped"
  std::string skip_reason;
  std::vector<PredicateOutcome> predicates;
  std::vector<std::string> collisions;  // root pairs with equal value
  std::string element_json;
  std::string note;

  bool passed() const { return status == "ok"; }
  std::string json() const;
};

WitnessReport verify_witness(const RootSystem& rs, const WitnessCase& c);

}  // namespace liecheck
