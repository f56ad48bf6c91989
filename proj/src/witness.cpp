#include "liecheck/witness.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <nlohmann/json.hpp>
#include <set>

namespace liecheck {

const std::vector<SubsystemEmbedding>& subsystem_embeddings() {
  static const std::vector<SubsystemEmbedding> data = [] {
    std::vector<SubsystemEmbedding> v;
    {
      // D4 inside B4: delta_i = eps_i - eps_{i+1}, delta_4 = eps_3 + eps_4.
      RootSystem b4(GroupType{'B', 4});
      SubsystemEmbedding e{"D4<B4", {'B', 4}, {'D', 4}, {}};
      for (int i = 1; i <= 3; ++i)
        e.sub_simple.push_back(b4.eps_weight(i) - b4.eps_weight(i + 1));
      e.sub_simple.push_back(b4.eps_weight(3) + b4.eps_weight(4));
      v.push_back(std::move(e));
    }
    {
      // B4 inside F4; the two share the epsilon frame.  The source
      // construction describes H as generated by long root subgroups,
      // but a B4 subsystem necessarily contains the short roots
      // +-eps_i as well; we ship the standard extended-diagram B4.
      RootSystem f4(GroupType{'F', 4});
      SubsystemEmbedding e{"B4<F4", {'F', 4}, {'B', 4}, {}};
      for (int i = 1; i <= 3; ++i)
        e.sub_simple.push_back(f4.eps_weight(i) - f4.eps_weight(i + 1));
      e.sub_simple.push_back(f4.eps_weight(4));
      v.push_back(std::move(e));
    }
    {
      // D5 inside E6: the subdiagram on nodes 6-5-4-3 with node 2
      // attached at the branch point.
      RootSystem e6(GroupType{'E', 6});
      SubsystemEmbedding e{"D5<E6", {'E', 6}, {'D', 5}, {}};
      for (int node : {6, 5, 4, 3, 2})
        e.sub_simple.push_back(e6.simple_roots()[node - 1]);
      v.push_back(std::move(e));
    }
    {
      // A7 inside E7: extended diagram with the affine node (minus
      // the highest root) attached to node 1, dropping node 2.
      RootSystem e7(GroupType{'E', 7});
      SubsystemEmbedding e{"A7<E7", {'E', 7}, {'A', 7}, {}};
      e.sub_simple.push_back(-e7.highest_root());
      for (int node : {1, 3, 4, 5, 6, 7})
        e.sub_simple.push_back(e7.simple_roots()[node - 1]);
      v.push_back(std::move(e));
    }
    return v;
  }();
  return data;
}

const SubsystemEmbedding& embedding_by_id(const std::string& id) {
  for (const auto& e : subsystem_embeddings())
    if (e.id == id) return e;
  throw std::invalid_argument("unknown embedding " + id);
}

void validate_embedding(const RootSystem& ambient, const SubsystemEmbedding& emb) {
  if (!(ambient.type() == emb.ambient))
    throw std::invalid_argument("embedding " + emb.id + ": ambient type mismatch");
  std::set<Weight> roots(ambient.roots().begin(), ambient.roots().end());
  for (const auto& d : emb.sub_simple)
    if (!roots.count(d))
      throw std::invalid_argument("embedding " + emb.id +
                                  ": listed weight is not an ambient root");
  RootSystem sub(emb.sub);
  const int m = static_cast<int>(emb.sub_simple.size());
  if (m != sub.rank())
    throw std::invalid_argument("embedding " + emb.id + ": rank mismatch");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Rat d = ambient.inner(emb.sub_simple[j], emb.sub_simple[j]) / Rat(2);
      Rat c = ambient.inner(emb.sub_simple[i], emb.sub_simple[j]) / d;
      if (!c.is_integer() || c.as_integer() != sub.cartan()[i][j])
        throw std::invalid_argument("embedding " + emb.id +
                                    ": Cartan integers do not match");
    }
}

Weight restrict_weight(const RootSystem& ambient, const SubsystemEmbedding& emb,
                       const Weight& mu) {
  Weight out(static_cast<int>(emb.sub_simple.size()));
  for (std::size_t j = 0; j < emb.sub_simple.size(); ++j) {
    const Weight& d = emb.sub_simple[j];
    Rat half = ambient.inner(d, d) / Rat(2);
    out.c[j] = (ambient.inner(mu, d) / half).as_integer();
  }
  return out;
}

const std::array<long long, 8>& e7_exponents() {
  static const std::array<long long, 8> result = [] {
    for (long long B : {8, 12, 16, 20, 24, 32, 40, 48, 64}) {
      std::array<long long, 8> e{};
      std::vector<long long> chosen;
      std::set<long long> abs_sums;
      auto ok_with = [&](long long v) {
        for (long long u : chosen) {
          long long s = u + v;
          if (s == 0) return false;
          if (abs_sums.count(s < 0 ? -s : s)) return false;
        }
        std::set<long long> fresh;
        for (long long u : chosen) {
          long long s = u + v;
          if (!fresh.insert(s < 0 ? -s : s).second) return false;
        }
        return true;
      };
      auto push = [&](long long v) {
        for (long long u : chosen) {
          long long s = u + v;
          abs_sums.insert(s < 0 ? -s : s);
        }
        chosen.push_back(v);
      };
      auto pop = [&](long long v) {
        chosen.pop_back();
        for (long long u : chosen) {
          long long s = u + v;
          abs_sums.erase(s < 0 ? -s : s);
        }
      };
      auto distinct_from_chosen = [&](long long v) {
        return std::find(chosen.begin(), chosen.end(), v) == chosen.end();
      };
      std::function<bool(int, long long)> pick = [&](int depth, long long from) {
        if (depth == 7) {
          long long sum = 0;
          for (long long u : chosen) sum += u;
          long long v = -sum;
          if (v < -B || v > B) return false;
          if (!distinct_from_chosen(v) || !ok_with(v)) return false;
          // no vanishing four-subset sum (regularity of the lift)
          push(v);
          bool good = true;
          const auto& c = chosen;
          for (int a = 0; a < 8 && good; ++a)
            for (int b = a + 1; b < 8 && good; ++b)
              for (int x = b + 1; x < 8 && good; ++x)
                for (int y = x + 1; y < 8 && good; ++y)
                  if (c[a] + c[b] + c[x] + c[y] == 0) good = false;
          if (good) {
            for (int i = 0; i < 8; ++i) e[i] = chosen[i];
            return true;
          }
          pop(v);
          return false;
        }
        for (long long v = from; v <= B; ++v) {
          if (!distinct_from_chosen(v) || !ok_with(v)) continue;
          push(v);
          if (pick(depth + 1, v + 1)) return true;
          pop(v);
        }
        return false;
      };
      for (long long e1 = 1; e1 <= B; ++e1) {
        for (long long e2 = -B; e2 < e1; ++e2) {
          long long e3 = 2 * e1 - e2;
          if (e3 > B || e3 == e1 || e3 == e2) continue;
          chosen.clear();
          abs_sums.clear();
          if (!ok_with(e1)) continue;
          push(e1);
          if (!distinct_from_chosen(e2) || !ok_with(e2)) { pop(e1); continue; }
          push(e2);
          if (!distinct_from_chosen(e3) || !ok_with(e3)) { pop(e2); pop(e1); continue; }
          push(e3);
          if (pick(3, -B)) return e;
          pop(e3);
          pop(e2);
          pop(e1);
        }
      }
    }
    throw std::logic_error("exponent search exhausted its bounds");
  }();
  return result;
}

std::string TargetSpec::label() const {
  std::string s;
  for (const auto& p : pieces) {
    if (!s.empty()) s += " + ";
    s += p;
  }
  return s;
}

namespace {

WitnessCase make_case(std::string id, const char* group, int p,
                      std::vector<Generator> gens,
                      std::vector<ConstraintSpec> cons) {
  WitnessCase c;
  c.id = std::move(id);
  c.group = GroupType::parse(group);
  c.p = p;
  c.gens = std::move(gens);
  c.constraints = std::move(cons);
  return c;
}

TargetSpec target(std::vector<std::string> pieces) {
  TargetSpec t;
  t.pieces = std::move(pieces);
  return t;
}

std::vector<WitnessCase> build_catalogue() {
  std::vector<WitnessCase> cat;

  {  // natural module of SL2, element of order 4
    auto c = make_case("an-fund-a1", "A1", 0, {{"m", 4}}, {{"w1", "m"}});
    c.expect_regular = true;
    c.expect_strongly_regular = false;
    auto t = target({"w1"});
    t.cyclic = true;
    c.targets = {t};
    c.invalid_p = {2};
    c.note = "order-4 parameter; no such element exists in characteristic 2";
    cat.push_back(std::move(c));
  }
  {  // same element on the 3-dimensional module
    auto c = make_case("a1-va", "A1", 0, {{"m", 4}}, {{"w1", "m"}});
    c.expect_regular = true;
    c.expect_strongly_regular = false;
    auto t = target({"2*w1"});
    t.cyclic = false;
    t.almost_cyclic = true;
    c.targets = {t};
    c.invalid_p = {2};
    cat.push_back(std::move(c));
  }
  {  // eps = (a^3, a^2, a, b, a^-6 b^-1): cyclic on every fundamental
    auto c = make_case("an-fund-a4", "A4", 0, {{"a", 0}, {"b1", 0}},
                       {{"e1", "a^3"}, {"e2", "a^2"}, {"e3", "a"}, {"e4", "b1"}});
    c.expect_regular = true;
    c.expect_strongly_regular = false;
    for (int k = 1; k <= 4; ++k) {
      auto t = target({"w" + std::to_string(k)});
      t.cyclic = true;
      c.targets.push_back(t);
    }
    cat.push_back(std::move(c));
  }
  {  // same element, symmetric square: a^4 is the only repeated value
    auto c = make_case("an-2w1", "A4", 0, {{"a", 0}, {"b1", 0}},
                       {{"e1", "a^3"}, {"e2", "a^2"}, {"e3", "a"}, {"e4", "b1"}});
    c.expect_regular = true;
    c.expect_strongly_regular = false;
    auto t = target({"2*w1"});
    t.cyclic = false;
    t.almost_cyclic = true;
    c.targets = {t};
    cat.push_back(std::move(c));
  }
  {  // diag(a, -a, -a^-2) on the symmetric square of the natural module
    auto c = make_case("a2-2w1", "A2", 0, {{"a", 0}, {"m", 2}},
                       {{"e1", "a"}, {"e2", "m*a"}});
    c.expect_regular = true;
    c.expect_strongly_regular = false;
    auto t = target({"2*w1"});
    t.cyclic = false;
    t.almost_cyclic = true;
    c.targets = {t};
    c.invalid_p = {2};
    cat.push_back(std::move(c));
  }
  {  // diag(a, -a, -a^-2) on the 7-dimensional adjoint module, p=3
    auto c = make_case("a2p3-adjoint", "A2", 3, {{"a", 0}, {"m", 2}},
                       {{"e1", "a"}, {"e2", "m*a"}});
    c.expect_regular = true;
    c.expect_strongly_regular = false;
    auto t = target({"w1+w2"});
    t.cyclic = false;
    t.almost_cyclic = true;
    c.targets = {t};
    c.invalid_p = {2};
    cat.push_back(std::move(c));
  }
  {  // eps = (b0, b0^3, b0^5), b0 of prime order 23
    auto c = make_case("bn-cn2-spin-b3", "B3", 0, {{"b0", 23}},
                       {{"e1", "b0"}, {"e2", "b0^3"}, {"e3", "b0^5"}});
    c.odd_orders_required = true;
    c.expect_regular = true;
    c.expect_strongly_regular = false;
    auto t1 = target({"w1"});
    t1.cyclic = true;
    auto t3 = target({"w3"});
    t3.cyclic = true;
    auto ts = target({"w1", "w3"});
    ts.cyclic = true;
    c.targets = {t1, t3, ts};
    c.note = "order 23 instead of the smallest prime above 11; smaller "
             "primes collide the vector and spin exponent ranges";
    cat.push_back(std::move(c));
  }
  {  // the same element in characteristic 2: the trivial summand returns
    auto c = make_case("bn-cn2-spin-b3p2", "B3", 2, {{"b0", 23}},
                       {{"e1", "b0"}, {"e2", "b0^3"}, {"e3", "b0^5"}});
    c.odd_orders_required = true;
    c.expect_regular = true;
    c.expect_strongly_regular = false;
    auto t = target({"w1", "w3", "0"});
    t.cyclic = true;
    c.targets = {t};
    cat.push_back(std::move(c));
  }
  {  // C3 in characteristic 2: cyclic on each piece, not on the sum
    auto c = make_case("bn-cn2-spin-c3p2", "C3", 2, {{"b0", 23}},
                       {{"e1", "b0"}, {"e2", "b0^3"}, {"e3", "b0^5"}});
    c.expect_regular = true;
    c.expect_strongly_regular = false;
    auto t1 = target({"w1"});
    t1.cyclic = true;
    auto t3 = target({"w3"});
    t3.cyclic = true;
    auto ts = target({"w1", "w3"});
    ts.cyclic = false;
    ts.almost_cyclic = false;
    c.targets = {t1, t3, ts};
    cat.push_back(std::move(c));
  }
  {  // D4 half-spin package
    auto c = make_case("dn-halfspin", "D4", 0, {{"b0", 23}, {"b1", 13}},
                       {{"e1", "b0"}, {"e2", "b0^3"}, {"e3", "b0^5"}, {"e4", "b1"}});
    c.odd_orders_required = true;
    c.expect_regular = true;
    c.expect_strongly_regular = false;
    auto ts = target({"w1", "w3", "w4", "0"});
    ts.cyclic = true;
    auto t2 = target({"w2"});
    t2.almost_cyclic = false;
    c.targets = {ts, t2};
    cat.push_back(std::move(c));
  }
  {  // eps = (a, a^3, b1, b2): almost cyclic on the 27-dim wedge square
    auto c = make_case("cn-w2", "C4", 0, {{"a", 0}, {"b1", 0}, {"b2", 0}},
                       {{"e1", "a"}, {"e2", "a^3"}, {"e3", "b1"}, {"e4", "b2"}});
    c.expect_regular = true;
    c.expect_strongly_regular = false;
    auto t1 = target({"w1"});
    t1.cyclic = true;
    auto t2 = target({"w2"});
    t2.cyclic = false;
    t2.almost_cyclic = true;
    c.targets = {t1, t2};
    cat.push_back(std::move(c));
  }
  {  // B3 at p=2 with eps = (a, a^2, b1)
    auto c = make_case("bn2-w2", "B3", 2, {{"a", 0}, {"b1", 0}},
                       {{"e1", "a"}, {"e2", "a^2"}, {"e3", "b1"}});
    c.expect_regular = true;
    c.expect_strongly_regular = false;
    auto t = target({"w2"});
    t.cyclic = false;
    t.almost_cyclic = true;
    c.targets = {t};
    cat.push_back(std::move(c));
  }
  {  // separating element for C3: covers w1, w2, w3
    auto c = make_case("cn-separator-c3", "C3", 0, {{"a", 0}, {"b3", 0}},
                       {{"e1", "a"}, {"e2", "a^3"}, {"e3", "b3"}});
    c.expect_regular = true;
    c.expect_strongly_regular = false;
    auto t1 = target({"w1"});
    t1.cyclic = true;
    auto t2 = target({"w2"});
    t2.cyclic = false;
    t2.almost_cyclic = true;
    t2.separates = true;
    auto t3 = target({"w3"});
    t3.cyclic = true;
    c.targets = {t1, t2, t3};
    cat.push_back(std::move(c));
  }
  {  // the same element at p=3: cyclic on the 14-dim module
    auto c = make_case("cn-separator-c3p3", "C3", 3, {{"a", 0}, {"b3", 0}},
                       {{"e1", "a"}, {"e2", "a^3"}, {"e3", "b3"}});
    c.expect_regular = true;
    c.expect_strongly_regular = false;
    auto t3 = target({"w3"});
    t3.cyclic = true;
    c.targets = {t3};
    c.note = "the companion w2 module at (C3, p=3) has no tabulated "
             "multiplicity data and is deliberately absent";
    cat.push_back(std::move(c));
  }
  {  // separating element for C4: w1, w2, w3, w4
    auto c = make_case("cn-separator-c4", "C4", 0,
                       {{"a", 0}, {"b3", 0}, {"b4", 0}},
                       {{"e1", "a"}, {"e2", "a^3"}, {"e3", "b3"}, {"e4", "b4"}});
    c.expect_regular = true;
    c.expect_strongly_regular = false;
    auto t1 = target({"w1"});
    t1.cyclic = true;
    auto t2 = target({"w2"});
    t2.cyclic = false;
    t2.almost_cyclic = true;
    auto t3 = target({"w3"});
    t3.cyclic = false;
    t3.separates = true;
    auto t4 = target({"w4"});
    t4.cyclic = false;
    t4.almost_cyclic = true;
    c.targets = {t1, t2, t3, t4};
    cat.push_back(std::move(c));
  }
  {  // C2 with eps = (a, a^3): cyclic on both fundamentals
    auto c = make_case("c2-both", "C2", 0, {{"a", 0}},
                       {{"e1", "a"}, {"e2", "a^3"}});
    c.expect_regular = true;
    c.expect_strongly_regular = false;
    auto t1 = target({"w1"});
    t1.cyclic = true;
    auto t2 = target({"w2"});
    t2.cyclic = true;
    c.targets = {t1, t2};
    cat.push_back(std::move(c));
  }
  {  // G2 with both simple roots sent to a
    auto c = make_case("g2-w1", "G2", 0, {{"a", 0}},
                       {{"a1", "a"}, {"a2", "a"}});
    c.expect_regular = true;
    c.expect_strongly_regular = false;
    auto t = target({"w1"});
    t.cyclic = true;
    c.targets = {t};
    cat.push_back(std::move(c));
  }
  {  // the same values at p=3: cyclic on both 7-dim modules
    auto c = make_case("g2p3-w2", "G2", 3, {{"a", 0}},
                       {{"a1", "a"}, {"a2", "a"}});
    c.expect_regular = true;
    c.expect_strongly_regular = false;
    auto t1 = target({"w1"});
    t1.cyclic = true;
    auto t2 = target({"w2"});
    t2.cyclic = true;
    c.targets = {t1, t2};
    cat.push_back(std::move(c));
  }
  {  // non-regular G2 element whose fixed space on V_a is the full
     // zero weight space
    auto c = make_case("g2p3-nonreg", "G2", 3, {{"b", 0}},
                       {{"a1", "1"}, {"a2", "b"}});
    c.expect_regular = false;
    auto t = target({"w2"});
    t.identity_mult_equals_zero_mult = true;
    c.targets = {t};
    cat.push_back(std::move(c));
  }
  {  // the B4-frame element inside F4
    auto c = make_case("f4-w4", "F4", 0, {{"b0", 23}, {"b1", 13}},
                       {{"e1", "b0"}, {"e2", "b0^3"}, {"e3", "b0^5"}, {"e4", "b1"}});
    c.odd_orders_required = true;
    c.expect_regular = true;
    c.expect_strongly_regular = false;
    auto t = target({"w4"});
    t.cyclic = false;
    t.almost_cyclic = true;
    c.targets = {t};
    cat.push_back(std::move(c));
  }
  {  // same element at p=3: zero weight drops to multiplicity one
    auto c = make_case("f4-w4-p3", "F4", 3, {{"b0", 23}, {"b1", 13}},
                       {{"e1", "b0"}, {"e2", "b0^3"}, {"e3", "b0^5"}, {"e4", "b1"}});
    c.odd_orders_required = true;
    c.expect_regular = true;
    c.expect_strongly_regular = false;
    auto t = target({"w4"});
    t.cyclic = true;
    c.targets = {t};
    cat.push_back(std::move(c));
  }
  {  // F4 adjoint at p=2: eps -> (a1, a2, a1 a2, a3)
    auto c = make_case("f4p2-adjoint", "F4", 2,
                       {{"a1", 0}, {"a2", 0}, {"a3", 7}},
                       {{"e1", "a1"}, {"e2", "a2"}, {"e3", "a1*a2"}, {"e4", "a3"}});
    c.expect_regular = true;
    c.expect_strongly_regular = false;
    auto t1 = target({"w1"});
    t1.cyclic = false;
    t1.almost_cyclic = true;
    auto t4 = target({"w4"});
    t4.almost_cyclic = false;
    c.targets = {t1, t4};
    c.note = "a1, a2 generic: with the literal orders 3 and 5 the values "
             "of eps2-eps1 and eps1+eps3 coincide and kill almost-cyclicity";
    cat.push_back(std::move(c));
  }
  {  // non-regular F4 element, p=2 weight data
    auto c = make_case("f4-nonreg", "F4", 2,
                       {{"b1", 0}, {"b2", 0}, {"b3", 0}},
                       {{"e1", "1"}, {"e2", "b1"}, {"e3", "b2"}, {"e4", "b3"}});
    c.expect_regular = false;
    auto t = target({"w1"});
    t.identity_mult_equals_zero_mult = true;
    c.targets = {t};
    cat.push_back(std::move(c));
  }
  {  // D5 package lifted into E6: cyclic on both 27-dim modules
    auto c = make_case("e6-minuscule", "E6", 0,
                       {{"b0", 23}, {"b1", 13}, {"b2", 17}},
                       {{"e1", "b0"}, {"e2", "b0^3"}, {"e3", "b0^5"},
                        {"e4", "b1"}, {"e5", "b2"}});
    c.via = "D5<E6";
    c.odd_orders_required = true;
    c.expect_regular = true;
    c.expect_strongly_regular = false;
    auto t1 = target({"w1"});
    t1.cyclic = true;
    auto t6 = target({"w6"});
    t6.cyclic = true;
    c.targets = {t1, t6};
    cat.push_back(std::move(c));
  }
  {  // A7 exponent element: cyclic on wedge^2 + wedge^6, and the
     // relation 2e1 = e2 + e3 forces equal root values on the adjoint
    const auto& e = e7_exponents();
    std::vector<ConstraintSpec> cons;
    for (int i = 0; i < 8; ++i)
      cons.push_back({"e" + std::to_string(i + 1),
                      "a^" + std::to_string(e[i])});
    auto c = make_case("aa7-a7", "A7", 0, {{"a", 0}}, cons);
    c.expect_regular = true;
    c.expect_strongly_regular = false;
    auto ts = target({"w2", "w6"});
    ts.cyclic = true;
    auto ta = target({"w1+w7"});
    ta.almost_cyclic = false;
    c.targets = {ts, ta};
    cat.push_back(std::move(c));

    auto c7 = make_case("e7-w7", "E7", 0, {{"a", 0}}, cons);
    c7.via = "A7<E7";
    c7.expect_regular = true;
    c7.expect_strongly_regular = false;
    auto t7 = target({"w7"});
    t7.cyclic = true;
    c7.targets = {t7};
    c7.note = "exponents found by deterministic search: sum zero, "
              "2e1=e2+e3, all 56 pair-sum values distinct";
    cat.push_back(std::move(c7));
  }
  return cat;
}

}  // namespace

const std::vector<WitnessCase>& list_cases() {
  static const std::vector<WitnessCase> cat = build_catalogue();
  return cat;
}

const WitnessCase& case_by_id(const std::string& id) {
  for (const auto& c : list_cases())
    if (c.id == id) return c;
  throw std::invalid_argument("unknown witness case " + id);
}

namespace {

Weight parse_lhs(const RootSystem& rs, const std::string& lhs) {
  if (lhs.size() >= 2 && lhs[0] == 'e' &&
      std::isdigit(static_cast<unsigned char>(lhs[1])))
    return rs.eps_weight(std::stoi(lhs.substr(1)));
  if (lhs.size() >= 2 && lhs[0] == 'a' &&
      std::isdigit(static_cast<unsigned char>(lhs[1]))) {
    int i = std::stoi(lhs.substr(1));
    if (i < 1 || i > rs.rank())
      throw std::invalid_argument("bad simple root index in " + lhs);
    return rs.simple_roots()[i - 1];
  }
  return parse_weight(lhs, rs.rank());
}

}  // namespace

SolveResult build_witness_full(const RootSystem& rs, const WitnessCase& c) {
  if (!(rs.type() == c.group))
    throw std::invalid_argument("root system does not match case " + c.id);
  for (int bad : c.invalid_p)
    if (c.p == bad)
      throw std::invalid_argument("case " + c.id +
                                  ": no such witness exists in characteristic " +
                                  std::to_string(bad));
  if (c.odd_orders_required)
    for (const auto& g : c.gens)
      if (g.order != 0 && g.order % 2 == 0)
        throw std::invalid_argument("case " + c.id +
                                    ": spin lifts need odd or infinite orders");
  ValueGroup vg(c.gens);
  if (c.via.empty()) {
    std::vector<Constraint> cons;
    for (const auto& s : c.constraints)
      cons.push_back({parse_lhs(rs, s.lhs), vg.parse_value(s.rhs)});
    return solve_constraints(rs, vg, cons);
  }
  const auto& emb = embedding_by_id(c.via);
  validate_embedding(rs, emb);
  RootSystem sub(emb.sub);
  std::vector<Constraint> cons;
  for (const auto& s : c.constraints)
    cons.push_back({parse_lhs(sub, s.lhs), vg.parse_value(s.rhs)});
  SolveResult sr = solve_constraints(sub, vg, cons);
  SolveResult out;
  out.rescale = sr.rescale;
  out.element.vg = sr.element.vg;
  out.element.basis_values.resize(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    Weight w(rs.rank());
    w.c[i] = 1;
    out.element.basis_values[i] =
        evaluate(sr.element, restrict_weight(rs, emb, w));
  }
  return out;
}

TorusElement build_witness(const RootSystem& rs, const WitnessCase& c) {
  return build_witness_full(rs, c).element;
}

WitnessReport verify_witness(const RootSystem& rs, const WitnessCase& c) {
  WitnessReport rep;
  rep.id = c.id;
  rep.group = c.group;
  rep.p = c.p;
  rep.note = c.note;
  TorusElement t = build_witness(rs, c);
  rep.element_json = torus_element_json(t);

  bool all_ok = true;
  auto record = [&](const std::string& name, bool expected, bool actual) {
    rep.predicates.push_back({name, expected, actual});
    if (expected != actual) all_ok = false;
  };
  if (c.expect_regular) record("regular", *c.expect_regular, is_regular(rs, t));
  if (c.expect_strongly_regular) {
    bool actual = is_strongly_regular(rs, t);
    record("strongly_regular", *c.expect_strongly_regular, actual);
    if (!actual) {
      for (const auto& [a, b] : equal_root_pairs(rs, t, 4))
        rep.collisions.push_back(format_weight(a) + " ~ " + format_weight(b) +
                                 " -> " + t.vg.format_value(evaluate(t, a)));
    }
  }
  for (const auto& tg : c.targets) {
    std::vector<Weight> pieces;
    for (const auto& s : tg.pieces) pieces.push_back(parse_weight(s, rs.rank()));
    WeightSystem ws;
    try {
      ws = weight_system(rs, pieces, CharTag(c.p));
    } catch (const unsupported_error& e) {
      rep.status = "skipped";
      rep.skip_reason = e.what();
      return rep;
    }
    std::string lbl = tg.label();
    if (tg.cyclic) record("cyclic[" + lbl + "]", *tg.cyclic, is_cyclic(ws, t));
    if (tg.almost_cyclic)
      record("almost_cyclic[" + lbl + "]", *tg.almost_cyclic,
             is_almost_cyclic(ws, t));
    if (tg.separates)
      record("separates[" + lbl + "]", *tg.separates, separates_weights(ws, t));
    if (tg.identity_mult_equals_zero_mult) {
      long long id_mult = 0;
      for (const auto& [v, m] : spectrum(ws, t))
        if (t.vg.is_identity(v)) id_mult = m;
      auto it = ws.table.find(Weight(rs.rank()));
      long long zero_mult = it == ws.table.end() ? 0 : it->second;
      record("identity_mult_equals_zero_mult[" + lbl + "]", true,
             id_mult == zero_mult);
    }
  }
  rep.status = all_ok ? "ok" : "mismatch";
  return rep;
}

std::string WitnessReport::json() const {
  nlohmann::ordered_json j;
  j["id"] = id;
  j["group"] = group.str();
  j["p"] = p;
  j["element"] = nlohmann::ordered_json::parse(
      element_json.empty() ? "null" : element_json);
  nlohmann::ordered_json preds = nlohmann::ordered_json::object();
  for (const auto& pr : predicates)
    preds[pr.name] = {{"expected", pr.expected}, {"actual", pr.actual}};
  j["predicates"] = preds;
  j["collisions"] = collisions;
  j["status"] = status;
  if (!skip_reason.empty()) j["skip_reason"] = skip_reason;
  if (!note.empty()) j["note"] = note;
  return j.dump();
}

}  // namespace liecheck
