#include "liecheck/weightcalc.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>
#include <numeric>

namespace liecheck {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long height_of(const RootSystem& rs, const Weight& diff) {
  long long h = 0;
  for (const auto& c : rs.alpha_coords(diff)) h += c.as_integer();
  return h;
}

bool divides(int p, long long x) { return p != 0 && x % p == 0; }

}  // namespace

CharTag::CharTag(int prime) : p(prime) {
  if (p != 0 && !is_prime(p))
    throw std::invalid_argument("characteristic must be 0 or prime, got " +
                                std::to_string(p));
}

bool dominance_leq(const RootSystem& rs, const Weight& mu, const Weight& lam) {
  Weight d = lam - mu;
  for (const auto& c : rs.alpha_coords(d)) {
    if (!c.is_integer()) return false;
    if (c < Rat(0)) return false;
  }
  return true;
}

std::vector<Weight> subdominant_weights(const RootSystem& rs, const Weight& lam) {
  if (!lam.is_dominant())
    throw std::invalid_argument("subdominant_weights: weight not dominant");
  // Every dominant mu below lam is reachable from lam through dominant
  // weights by single positive-root steps, so a dominant-only search
  // is complete.
  std::set<Weight> seen{lam};
  std::vector<Weight> frontier{lam};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& w : frontier) {
      for (const auto& a : rs.positive_roots()) {
        Weight v = w - a;
        if (v.is_dominant() && seen.insert(v).second) next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
    long long ha = height_of(rs, lam - a), hb = height_of(rs, lam - b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

std::set<Weight> premet_weight_set(const RootSystem& rs, const Weight& lam,
                                   CharTag c) {
  if (!lam.is_dominant())
    throw std::invalid_argument("premet_weight_set: weight not dominant");
  if (c.p > 0)
    for (long long x : lam.c)
      if (x >= c.p)
        throw std::invalid_argument("premet_weight_set: weight not restricted");
  const GroupType t = rs.type();
  if (t.family == 'G' && c.p == 2 && lam == fundamental(2, 2)) {
    std::set<Weight> out(rs.roots().begin(), rs.roots().end());
    out.insert(Weight(2));
    return out;
  }
  if (c.p != 0 && c.p <= rs.e_value())
    throw unsupported_error("weight set not determined for " + t.str() +
                            " in characteristic " + std::to_string(c.p));
  std::set<Weight> out;
  for (const auto& mu : subdominant_weights(rs, lam))
    for (const auto& w : rs.weyl_orbit(mu)) out.insert(w);
  return out;
}

std::map<Weight, long long> char0_dominant_multiplicities(const RootSystem& rs,
                                                          const Weight& lam) {
  auto sub = subdominant_weights(rs, lam);
  std::set<Weight> sset(sub.begin(), sub.end());
  std::map<Weight, long long> m;
  m[lam] = 1;
  Weight rho = rs.rho();
  Rat top = rs.inner(lam + rho, lam + rho);
  for (std::size_t idx = 1; idx < sub.size(); ++idx) {
    const Weight& mu = sub[idx];
    Rat num = 0;
    for (const auto& a : rs.positive_roots()) {
      for (long long k = 1;; ++k) {
        Weight nu = mu + k * a;
        Weight dn = rs.dominant_conjugate(nu);
        auto it = m.find(dn);
        if (it == m.end()) break;  // left the weight string
        num += Rat(2) * rs.inner(nu, a) * Rat(it->second);
      }
    }
    Rat den = top - rs.inner(mu + rho, mu + rho);
    m[mu] = (num / den).as_integer();
  }
  return m;
}

long long freudenthal_multiplicity(const RootSystem& rs, const Weight& lam,
                                   const Weight& mu) {
  Weight dm = rs.dominant_conjugate(mu);
  auto m = char0_dominant_multiplicities(rs, lam);
  auto it = m.find(dm);
  return it == m.end() ? 0 : it->second;
}

long long weyl_dimension(const RootSystem& rs, const Weight& lam) {
  if (!lam.is_dominant())
    throw std::invalid_argument("weyl_dimension: weight not dominant");
  using boost::multiprecision::cpp_int;
  Weight rho = rs.rho();
  Weight lr = lam + rho;
  cpp_int num = 1, den = 1;
  for (const auto& a : rs.positive_roots()) {
    // inner products here have denominator dividing 6; scale both
    // factors identically so the quotient is unchanged.
    Rat x = Rat(6) * rs.inner(lr, a);
    Rat y = Rat(6) * rs.inner(rho, a);
    num *= x.as_integer();
    den *= y.as_integer();
  }
  cpp_int q = num / den;
  if (q * den != num) throw std::logic_error("weyl_dimension: not integral");
  return q.convert_to<long long>();
}

namespace {

// Table 1: restricted irreducibles with every multiplicity equal to 1.
std::optional<std::string> match_all_mult_one(GroupType t, int p, const Weight& l) {
  const int n = t.rank;
  auto is_fund = [&](int i, long long a) { return l == fundamental(n, i, a); };
  switch (t.family) {
    case 'A': {
      if (n == 1) {
        long long a = l.c[0];
        if (a >= 1 && (p == 0 || a < p)) return "A1 a*w1";
        return std::nullopt;
      }
      if (long long a = l.c[0]; a >= 1 && is_fund(1, a) && (p == 0 || a < p))
        return "An a*w1";
      if (long long b = l.c[n - 1]; b >= 1 && is_fund(n, b) && (p == 0 || b < p))
        return "An b*wn";
      for (int i = 2; i < n; ++i)
        if (is_fund(i, 1)) return "An wi (1<i<n)";
      if (p > 0) {
        for (int i = 1; i < n; ++i)
          for (long long cc = 0; cc < p; ++cc) {
            Weight w(n);
            w.c[i - 1] = cc;
            w.c[i] = p - 1 - cc;
            if (l == w) return "An c*wi+(p-1-c)*w(i+1)";
          }
      }
      return std::nullopt;
    }
    case 'B':
      if (is_fund(1, 1)) return "Bn w1";
      if (is_fund(n, 1)) return "Bn wn";
      return std::nullopt;
    case 'C': {
      if (p == 2) {
        if (is_fund(1, 1)) return "Cn w1 (p=2)";
        if (is_fund(n, 1)) return "Cn wn (p=2)";
        if (n == 3 && is_fund(3, 1)) return "C3 w3";
        return std::nullopt;
      }
      if (is_fund(1, 1)) return "Cn w1";
      if (n == 2 && is_fund(2, 1)) return "C2 w2";
      if (n == 3 && is_fund(3, 1)) return "C3 w3";
      if (p > 2) {
        Weight w1(n);
        w1.c[n - 2] = 1;
        w1.c[n - 1] = (p - 3) / 2;
        if (l == w1) return "Cn w(n-1)+((p-3)/2)*wn";
        if (is_fund(n, (p - 1) / 2)) return "Cn ((p-1)/2)*wn";
      }
      return std::nullopt;
    }
    case 'D':
      if (is_fund(1, 1)) return "Dn w1";
      if (is_fund(n - 1, 1)) return "Dn w(n-1)";
      if (is_fund(n, 1)) return "Dn wn";
      return std::nullopt;
    case 'E':
      if (n == 6 && (is_fund(1, 1) || is_fund(6, 1))) return "E6 w1/w6";
      if (n == 7 && is_fund(7, 1)) return "E7 w7";
      return std::nullopt;
    case 'F':
      if (p == 3 && is_fund(4, 1)) return "F4 w4 (p=3)";
      return std::nullopt;
    case 'G':
      if (is_fund(1, 1) && p != 3) return "G2 w1 (p!=3)";
      if (p == 3 && (is_fund(1, 1) || is_fund(2, 1))) return "G2 w1/w2 (p=3)";
      return std::nullopt;
  }
  return std::nullopt;
}

// Table 2: restricted irreducibles whose nonzero weights all have
// multiplicity 1 and whose zero weight has the given multiplicity.
std::optional<std::pair<std::string, long long>> match_nonzero_mult_one(
    GroupType t, int p, const Weight& l) {
  const int n = t.rank;
  auto is_fund = [&](int i, long long a) { return l == fundamental(n, i, a); };
  switch (t.family) {
    case 'A': {
      if (n >= 2 && !(n == 2 && p == 3)) {
        Weight adj(n);
        adj.c[0] = 1;
        adj.c[n - 1] = 1;
        if (l == adj)
          return {{"An w1+wn", divides(p, n + 1) ? n - 1 : n}};
      }
      if (n == 3 && (p == 0 || p > 3) && is_fund(2, 2)) return {{"A3 2*w2", 2}};
      return std::nullopt;
    }
    case 'B': {
      if (is_fund(2, 1)) {
        if (p == 2) return {{"Bn w2 (p=2)", n - std::gcd(2LL, (long long)n)}};
        return {{"Bn w2", n}};
      }
      if (is_fund(1, 2))
        return {{"Bn 2*w1", divides(p, 2 * n + 1) ? n : n + 1}};
      return std::nullopt;
    }
    case 'C': {
      if (is_fund(1, 2)) return {{"Cn 2*w1", n}};
      if (n > 2 && !(n == 3 && p == 3) && is_fund(2, 1))
        return {{"Cn w2", divides(p, n) ? n - 2 : n - 1}};
      if (n == 2 && p != 5 && is_fund(2, 2)) return {{"C2 2*w2", 2}};
      if (n == 4 && p != 2 && p != 3 && is_fund(4, 1)) return {{"C4 w4", 2}};
      return std::nullopt;
    }
    case 'D': {
      if (is_fund(1, 2))
        return {{"Dn 2*w1", divides(p, n) ? n - 2 : n - 1}};
      if (is_fund(2, 1)) {
        if (p == 2) return {{"Dn w2 (p=2)", n - std::gcd(2LL, (long long)n)}};
        return {{"Dn w2", n}};
      }
      return std::nullopt;
    }
    case 'E': {
      if (n == 6 && is_fund(2, 1)) return {{"E6 w2", p == 3 ? 5 : 6}};
      if (n == 7 && is_fund(1, 1)) return {{"E7 w1", p == 2 ? 6 : 7}};
      if (n == 8 && is_fund(8, 1)) return {{"E8 w8", 8}};
      return std::nullopt;
    }
    case 'F': {
      if (is_fund(1, 1)) return {{"F4 w1", p == 2 ? 2 : 4}};
      if (p != 3 && is_fund(4, 1)) return {{"F4 w4 (p!=3)", 2}};
      return std::nullopt;
    }
    case 'G': {
      if (p != 3 && is_fund(2, 1)) return {{"G2 w2 (p!=3)", 2}};
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

TableEntry table_lookup(GroupType t, CharTag c, const Weight& lam) {
  if (!t.valid()) throw std::invalid_argument("bad group type");
  if (lam.rank() != t.rank) throw std::invalid_argument("rank mismatch");
  if (!lam.is_dominant()) throw std::invalid_argument("weight not dominant");
  TableEntry e;
  if (auto r1 = match_all_mult_one(t, c.p, lam)) {
    e.cls = TableClass::AllMultOne;
    e.row = *r1;
    return e;
  }
  if (auto r2 = match_nonzero_mult_one(t, c.p, lam)) {
    e.cls = TableClass::NonzeroMultOne;
    e.row = r2->first;
    e.zero_mult = r2->second;
    return e;
  }
  return e;
}

bool is_minuscule(GroupType t, const Weight& lam) {
  const int n = t.rank;
  auto is_fund = [&](int i) { return lam == fundamental(n, i); };
  switch (t.family) {
    case 'A':
      for (int i = 1; i <= n; ++i)
        if (is_fund(i)) return true;
      return false;
    case 'B': return is_fund(n);
    case 'C': return is_fund(1);
    case 'D': return is_fund(1) || is_fund(n - 1) || is_fund(n);
    case 'E': return n == 6 ? (is_fund(1) || is_fund(6)) : (n == 7 && is_fund(7));
    default: return false;
  }
}

namespace {

void add_orbit(const RootSystem& rs, std::map<Weight, long long>& table,
               const Weight& mu, long long mult) {
  for (const auto& w : rs.weyl_orbit(mu)) table[w] += mult;
}

// Weight table of one irreducible restricted piece.
std::map<Weight, long long> piece_table(const RootSystem& rs, const Weight& lam,
                                        CharTag c) {
  const GroupType t = rs.type();
  const int n = t.rank;
  const int p = c.p;
  std::map<Weight, long long> table;
  if (!lam.is_dominant())
    throw std::invalid_argument("weight_system: weight not dominant");
  if (lam.is_zero()) {
    table[lam] = 1;
    return table;
  }
  if (p > 0)
    for (long long x : lam.c)
      if (x >= p)
        throw std::invalid_argument("weight_system: weight not p-restricted");

  if (p == 0) {
    for (const auto& [mu, m] : char0_dominant_multiplicities(rs, lam))
      add_orbit(rs, table, mu, m);
    return table;
  }

  // Adjoint module of A_n: known for every p, including (A2, p=3).
  if (t.family == 'A' && n >= 2) {
    Weight adj(n);
    adj.c[0] = 1;
    adj.c[n - 1] = 1;
    if (lam == adj) {
      add_orbit(rs, table, adj, 1);
      table[Weight(n)] = divides(p, n + 1) ? n - 1 : n;
      return table;
    }
  }
  // The two-coefficient A_n family c*wi+(p-1-c)*w(i+1) with both
  // coefficients positive is listed as multiplicity free but its
  // weight set is not tabulated here.
  if (t.family == 'A' && n >= 2) {
    for (int i = 1; i < n; ++i) {
      Weight w(n);
      bool other_zero = true;
      for (int j = 0; j < n; ++j)
        if (j != i - 1 && j != i && lam.c[j] != 0) other_zero = false;
      if (other_zero && lam.c[i - 1] >= 1 && lam.c[i] >= 1 &&
          lam.c[i - 1] + lam.c[i] == p - 1)
        throw unsupported_error("weight set of the " + t.str() +
                                " pair family is not tabulated");
    }
  }

  if (p > rs.e_value()) {
    auto entry = table_lookup(t, c, lam);
    if (entry.cls == TableClass::NotListed)
      throw unsupported_error("no modular multiplicity data for " + t.str() +
                              " " + format_weight(lam) + " at p=" +
                              std::to_string(p));
    auto sub = subdominant_weights(rs, lam);
    for (const auto& mu : sub) {
      long long m = 1;
      if (mu.is_zero() && entry.cls == TableClass::NonzeroMultOne)
        m = entry.zero_mult;
      add_orbit(rs, table, mu, m);
    }
    return table;
  }

  // p <= e(G): individually published small-characteristic cases.
  if (is_minuscule(t, lam)) {
    add_orbit(rs, table, lam, 1);
    return table;
  }
  auto long_roots_plus_zero = [&](long long zero_mult) {
    add_orbit(rs, table, rs.highest_root(), 1);
    if (zero_mult > 0) table[Weight(n)] = zero_mult;
  };
  if (t.family == 'B' && p == 2) {
    if (lam == fundamental(n, 1)) {  // natural module loses the zero weight
      add_orbit(rs, table, lam, 1);
      return table;
    }
    if (lam == fundamental(n, 2)) {
      long_roots_plus_zero(n - std::gcd(2LL, (long long)n));
      return table;
    }
  }
  if (t.family == 'C' && p == 2 && lam == fundamental(n, n)) {
    add_orbit(rs, table, lam, 1);  // the 2^n spin-like weight set
    return table;
  }
  if (t.family == 'F' && p == 2) {
    if (lam == fundamental(4, 1)) {
      long_roots_plus_zero(2);
      return table;
    }
    if (lam == fundamental(4, 4)) {
      add_orbit(rs, table, fundamental(4, 4), 1);  // short roots
      table[Weight(4)] = 2;
      return table;
    }
  }
  if (t.family == 'G') {
    if (p == 2 && lam == fundamental(2, 1)) {
      add_orbit(rs, table, lam, 1);  // short roots, zero weight gone
      return table;
    }
    if (p == 2 && lam == fundamental(2, 2)) {
      // whole root system plus a two-dimensional zero weight space
      add_orbit(rs, table, rs.highest_root(), 1);
      add_orbit(rs, table, fundamental(2, 1), 1);
      table[Weight(2)] = 2;
      return table;
    }
    if (p == 3 && lam == fundamental(2, 1)) {
      add_orbit(rs, table, lam, 1);
      table[Weight(2)] = 1;
      return table;
    }
    if (p == 3 && lam == fundamental(2, 2)) {
      long_roots_plus_zero(1);
      return table;
    }
  }
  throw unsupported_error("no modular multiplicity data for " + t.str() + " " +
                          format_weight(lam) + " at p=" + std::to_string(p));
}

}  // namespace

WeightSystem weight_system(const RootSystem& rs, const std::vector<Weight>& pieces,
                           CharTag c) {
  WeightSystem ws;
  ws.type = rs.type();
  ws.p = c.p;
  ws.pieces = pieces;
  for (const auto& lam : pieces)
    for (const auto& [w, m] : piece_table(rs, lam, c)) ws.table[w] += m;
  return ws;
}

WeightSystem weight_system(const RootSystem& rs, const Weight& lam, CharTag c) {
  return weight_system(rs, std::vector<Weight>{lam}, c);
}

std::string weight_system_json(const WeightSystem& ws) {
  nlohmann::ordered_json j;
  j["group"] = ws.type.str();
  j["p"] = ws.p;
  j["pieces"] = nlohmann::ordered_json::array();
  for (const auto& l : ws.pieces) j["pieces"].push_back(format_weight(l));
  j["dim"] = ws.dim();
  j["weights"] = nlohmann::ordered_json::array();
  for (const auto& [w, m] : ws.table) {
    nlohmann::ordered_json e;
    e["weight"] = format_weight(w);
    e["coeffs"] = w.c;
    e["mult"] = m;
    j["weights"].push_back(e);
  }
  return j.dump();
}

}  // namespace liecheck
