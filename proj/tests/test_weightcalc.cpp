#include <doctest.h>

#include <algorithm>
#include <set>

#include "liecheck/weightcalc.hpp"

using namespace liecheck;

namespace {
RootSystem make(const std::string& t) { return RootSystem(GroupType::parse(t)); }

long long freudenthal_dim(const RootSystem& rs, const Weight& lam) {
  long long d = 0;
  for (const auto& [mu, m] : char0_dominant_multiplicities(rs, lam))
    d += m * static_cast<long long>(rs.weyl_orbit(mu).size());
  return d;
}
}

TEST_CASE("dimension oracle pair on the small modules") {
  struct Row { const char* t; int i; long long dim; };
  for (Row r : {Row{"G2", 1, 7}, {"G2", 2, 14}, {"F4", 4, 26}, {"B4", 4, 16},
                {"C3", 3, 14}, {"E6", 1, 27}, {"E7", 7, 56}, {"D5", 4, 16},
                {"A7", 2, 28}}) {
    RootSystem rs = make(r.t);
    Weight lam = fundamental(rs.rank(), r.i);
    CHECK(weyl_dimension(rs, lam) == r.dim);
    CHECK(freudenthal_dim(rs, lam) == r.dim);
  }
}

TEST_CASE("adjoint dimensions") {
  for (auto [t, d] : std::vector<std::pair<const char*, long long>>{
           {"A2", 8}, {"B3", 21}, {"C3", 21}, {"D4", 28}, {"G2", 14},
           {"F4", 52}, {"E6", 78}, {"E7", 133}}) {
    RootSystem rs = make(t);
    CHECK(weyl_dimension(rs, rs.highest_root()) == d);
  }
}

TEST_CASE("subdominant weights against brute force") {
  // brute force: every dominant mu with lam - mu a nonnegative integral
  // combination of simple roots, found by searching coefficient boxes
  for (const char* t : {"A2", "C2", "G2", "A3"}) {
    RootSystem rs = make(t);
    int n = rs.rank();
    std::vector<Weight> lams = {rs.highest_root(), fundamental(n, 1, 2)};
    for (const auto& lam : lams) {
      std::set<Weight> brute;
      std::vector<long long> c(n, 0);
      const int bound = 6;
      while (true) {
        Weight mu = lam;
        for (int i = 0; i < n; ++i) mu -= c[i] * rs.simple_roots()[i];
        if (mu.is_dominant()) brute.insert(mu);
        int i = 0;
        while (i < n && ++c[i] > bound) c[i++] = 0;
        if (i == n) break;
      }
      auto got = subdominant_weights(rs, lam);
      CHECK(std::set<Weight>(got.begin(), got.end()) == brute);
      CHECK(got.front() == lam);  // lam listed first
    }
  }
}

TEST_CASE("subdominants of C_n omega_k walk down by two") {
  RootSystem rs = make("C4");
  auto got = subdominant_weights(rs, fundamental(4, 4));
  std::set<Weight> expect{fundamental(4, 4), fundamental(4, 2), Weight(4)};
  CHECK(std::set<Weight>(got.begin(), got.end()) == expect);
}

TEST_CASE("freudenthal zero-weight multiplicities, frozen") {
  CHECK(freudenthal_multiplicity(make("A2"), make("A2").highest_root(), Weight(2)) == 2);
  CHECK(freudenthal_multiplicity(make("B3"), fundamental(3, 2), Weight(3)) == 3);
  CHECK(freudenthal_multiplicity(make("G2"), fundamental(2, 2), Weight(2)) == 2);
  CHECK(freudenthal_multiplicity(make("C3"), fundamental(3, 2), Weight(3)) == 2);
  CHECK(freudenthal_multiplicity(make("F4"), fundamental(4, 4), Weight(4)) == 2);
}

TEST_CASE("classification zero-mult column at p=0, generic branch") {
  struct Row { const char* t; const char* lam; long long z; };
  for (Row r : {Row{"A3", "w1+w3", 3}, {"A3", "2*w2", 2}, {"B3", "w2", 3},
                {"B3", "2*w1", 4}, {"C3", "w2", 2}, {"C2", "2*w2", 2},
                {"C4", "w4", 2}, {"D4", "2*w1", 3}, {"D4", "w2", 4},
                {"E6", "w2", 6}, {"E7", "w1", 7}, {"E8", "w8", 8},
                {"F4", "w1", 4}, {"F4", "w4", 2}, {"G2", "w2", 2}}) {
    GroupType t = GroupType::parse(r.t);
    auto e = table_lookup(t, CharTag(0), parse_weight(r.lam, t.rank));
    CHECK(e.cls == TableClass::NonzeroMultOne);
    CHECK(e.zero_mult == r.z);
  }
}

TEST_CASE("zero-mult column agrees with Freudenthal except one row") {
  // every char-0 table value above matches the recursion except
  // B_n 2*w1, whose listed value n+1 exceeds the computed one by 1
  // whenever p does not divide 2n+1
  struct Row { const char* t; const char* lam; };
  for (Row r : {Row{"A3", "w1+w3"}, {"A3", "2*w2"}, {"B3", "w2"},
                {"C3", "w2"}, {"C2", "2*w2"}, {"C4", "w4"}, {"D4", "2*w1"},
                {"D4", "w2"}, {"E6", "w2"}, {"F4", "w1"}, {"F4", "w4"},
                {"G2", "w2"}}) {
    RootSystem rs = make(r.t);
    Weight lam = parse_weight(r.lam, rs.rank());
    auto e = table_lookup(rs.type(), CharTag(0), lam);
    CHECK(freudenthal_multiplicity(rs, lam, Weight(rs.rank())) == e.zero_mult);
  }
  RootSystem b3 = make("B3");
  CHECK(freudenthal_multiplicity(b3, fundamental(3, 1, 2), Weight(3)) == 3);
  CHECK(table_lookup(b3.type(), CharTag(0), fundamental(3, 1, 2)).zero_mult == 4);
}

TEST_CASE("all-multiplicity-one rows at p=0 really have mult one") {
  struct Row { const char* t; const char* lam; };
  for (Row r : {Row{"A4", "3*w1"}, {"A4", "w2"}, {"B4", "w4"}, {"C3", "w3"},
                {"D5", "w5"}, {"E6", "w6"}, {"G2", "w1"}}) {
    RootSystem rs = make(r.t);
    Weight lam = parse_weight(r.lam, rs.rank());
    CHECK(table_lookup(rs.type(), CharTag(0), lam).cls == TableClass::AllMultOne);
    for (const auto& [mu, m] : char0_dominant_multiplicities(rs, lam))
      CHECK(m == 1);
  }
}

TEST_CASE("minuscule weights") {
  CHECK(is_minuscule(GroupType::parse("A3"), fundamental(3, 2)));
  CHECK(is_minuscule(GroupType::parse("B4"), fundamental(4, 4)));
  CHECK(is_minuscule(GroupType::parse("C3"), fundamental(3, 1)));
  CHECK(is_minuscule(GroupType::parse("D5"), fundamental(5, 5)));
  CHECK(is_minuscule(GroupType::parse("E7"), fundamental(7, 7)));
  CHECK_FALSE(is_minuscule(GroupType::parse("G2"), fundamental(2, 1)));
  CHECK_FALSE(is_minuscule(GroupType::parse("C3"), fundamental(3, 2)));
}

TEST_CASE("premet weight set") {
  RootSystem g2 = make("G2");
  auto s = premet_weight_set(g2, fundamental(2, 2), CharTag(2));
  std::set<Weight> expect(g2.roots().begin(), g2.roots().end());
  expect.insert(Weight(2));
  CHECK(s == expect);  // the published small-characteristic set
  // p = 0: orbits of all subdominants
  auto s0 = premet_weight_set(g2, fundamental(2, 2), CharTag(0));
  CHECK(s0 == expect);
  // W-stable and contains lam
  RootSystem c3 = make("C3");
  auto sc = premet_weight_set(c3, fundamental(3, 2), CharTag(0));
  CHECK(sc.count(fundamental(3, 2)) == 1);
  for (const auto& w : sc)
    for (const auto& o : c3.weyl_orbit(w)) CHECK(sc.count(o) == 1);
}

TEST_CASE("modular weight systems with table-determined data") {
  RootSystem a3 = make("A3");
  WeightSystem adj2 = weight_system(a3, a3.highest_root(), CharTag(2));
  CHECK(adj2.dim() == 14);  // p | n+1 drops the zero multiplicity to n-1
  CHECK(adj2.table.at(Weight(3)) == 2);
  WeightSystem adj3 = weight_system(a3, a3.highest_root(), CharTag(3));
  CHECK(adj3.dim() == 15);
  CHECK(adj3.table.at(Weight(3)) == 3);

  CHECK(weight_system(make("G2"), fundamental(2, 2), CharTag(2)).dim() == 14);
  CHECK(weight_system(make("G2"), fundamental(2, 1), CharTag(3)).dim() == 7);
  CHECK(weight_system(make("G2"), fundamental(2, 2), CharTag(3)).dim() == 7);
  CHECK(weight_system(make("B3"), fundamental(3, 3), CharTag(2)).dim() == 8);
  CHECK(weight_system(make("C3"), fundamental(3, 3), CharTag(2)).dim() == 8);
  CHECK(weight_system(make("F4"), fundamental(4, 4), CharTag(2)).dim() == 26);
  CHECK(weight_system(make("F4"), fundamental(4, 1), CharTag(2)).dim() == 26);
  CHECK(weight_system(make("B4"), fundamental(4, 2), CharTag(2)).dim() == 26);
  // p > e: Premet set with table multiplicities
  CHECK(weight_system(make("G2"), fundamental(2, 2), CharTag(7)).dim() == 14);
  CHECK(weight_system(make("C2"), fundamental(2, 2), CharTag(5)).dim() == 5);
}

TEST_CASE("undetermined modular cases are typed errors") {
  RootSystem a2 = make("A2");
  Weight pair(2);
  pair.c = {2, 2};  // c*w1 + (p-1-c)*w2 at p = 5
  CHECK_THROWS_AS(weight_system(a2, pair, CharTag(5)), unsupported_error);
  RootSystem c4 = make("C4");
  CHECK_THROWS_AS(weight_system(c4, fundamental(4, 3), CharTag(5)), unsupported_error);
  // the p-dependent row w_{n-1} + ((p-3)/2) w_n degenerates to w2 at
  // p = 3, so (C3, p=3, w2) stays computable and multiplicity free
  WeightSystem c32 = weight_system(make("C3"), fundamental(3, 2), CharTag(3));
  CHECK(c32.dim() == 13);
}

TEST_CASE("direct sums and the json document") {
  RootSystem b3 = make("B3");
  WeightSystem ws = weight_system(
      b3, std::vector<Weight>{fundamental(3, 1), fundamental(3, 3), Weight(3)},
      CharTag(2));
  CHECK(ws.dim() == 6 + 8 + 1);
  CHECK(ws.table.at(Weight(3)) == 1);  // zero weight only from the trivial piece
  std::string j = weight_system_json(ws);
  CHECK(j.find("\"group\":\"B3\"") != std::string::npos);
  CHECK(j.find("\"dim\":15") != std::string::npos);
}

TEST_CASE("dominance order basics") {
  RootSystem a2 = make("A2");
  CHECK(dominance_leq(a2, Weight(2), a2.highest_root()));
  CHECK_FALSE(dominance_leq(a2, fundamental(2, 1), fundamental(2, 2)));
  CHECK(dominance_leq(a2, fundamental(2, 2), fundamental(2, 1, 2)));
}
