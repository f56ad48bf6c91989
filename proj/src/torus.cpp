#include "liecheck/torus.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <numeric>
#include <set>

namespace liecheck {

ValueGroup::ValueGroup(std::vector<Generator> gens) : gens_(std::move(gens)) {
  std::set<std::string> names;
  for (const auto& g : gens_) {
    if (g.name.empty()) throw std::invalid_argument("generator needs a name");
    if (g.order < 0 || g.order == 1)
      throw std::invalid_argument("generator order must be 0 or >= 2");
    if (!names.insert(g.name).second)
      throw std::invalid_argument("duplicate generator name " + g.name);
  }
}

int ValueGroup::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (gens_[i].name == name) return i;
  return -1;
}

GroupValue ValueGroup::reduce(GroupValue v) const {
  if (v.e.size() != gens_.size())
    throw std::invalid_argument("value has wrong number of exponents");
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    long long m = gens_[i].order;
    if (m > 0) {
      v.e[i] %= m;
      if (v.e[i] < 0) v.e[i] += m;
    }
  }
  return v;
}

GroupValue ValueGroup::mul(const GroupValue& a, const GroupValue& b) const {
  GroupValue r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
  return reduce(std::move(r));
}

GroupValue ValueGroup::inverse(const GroupValue& a) const {
  GroupValue r = a;
  for (auto& x : r.e) x = -x;
  return reduce(std::move(r));
}

GroupValue ValueGroup::pow(const GroupValue& a, long long k) const {
  GroupValue r = a;
  for (auto& x : r.e) x *= k;
  return reduce(std::move(r));
}

bool ValueGroup::is_identity(const GroupValue& a) const {
  for (long long x : a.e)
    if (x != 0) return false;
  return true;
}

GroupValue ValueGroup::parse_value(const std::string& text) const {
  GroupValue v = identity();
  if (text == "1") return v;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t star = text.find('*', pos);
    std::string tok = text.substr(pos, star == std::string::npos ? star : star - pos);
    pos = star == std::string::npos ? text.size() : star + 1;
    if (tok.empty()) throw std::invalid_argument("bad monomial: " + text);
    std::size_t caret = tok.find('^');
    std::string name = tok.substr(0, caret);
    long long exp = 1;
    if (caret != std::string::npos) {
      try {
        std::size_t used = 0;
        exp = std::stoll(tok.substr(caret + 1), &used);
        if (used + caret + 1 != tok.size()) throw std::invalid_argument("");
      } catch (...) {
        throw std::invalid_argument("bad exponent in monomial: " + text);
      }
    }
    int idx = index_of(name);
    if (idx < 0) throw std::invalid_argument("unknown generator " + name);
    v.e[idx] += exp;
  }
  return reduce(std::move(v));
}

std::string ValueGroup::format_value(const GroupValue& v) const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (v.e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += gens_[i].name;
    if (v.e[i] != 1) out += "^" + std::to_string(v.e[i]);
  }
  return out.empty() ? "1" : out;
}

GroupValue evaluate(const TorusElement& t, const Weight& w) {
  if (static_cast<std::size_t>(w.rank()) != t.basis_values.size())
    throw std::invalid_argument("evaluate: rank mismatch");
  GroupValue acc = t.vg.identity();
  for (int i = 0; i < w.rank(); ++i)
    if (w.c[i] != 0) acc = t.vg.mul(acc, t.vg.pow(t.basis_values[i], w.c[i]));
  return acc;
}

bool is_central(const RootSystem& rs, const TorusElement& t) {
  for (const auto& a : rs.simple_roots())
    if (!t.vg.is_identity(evaluate(t, a))) return false;
  return true;
}

bool is_regular(const RootSystem& rs, const TorusElement& t) {
  for (const auto& a : rs.roots())
    if (t.vg.is_identity(evaluate(t, a))) return false;
  return true;
}

bool is_strongly_regular(const RootSystem& rs, const TorusElement& t) {
  std::set<GroupValue> vals;
  for (const auto& a : rs.roots())
    if (!vals.insert(evaluate(t, a)).second) return false;
  return true;
}

Spectrum spectrum(const WeightSystem& ws, const TorusElement& t) {
  std::map<GroupValue, long long> acc;
  for (const auto& [w, m] : ws.table) acc[evaluate(t, w)] += m;
  return {acc.begin(), acc.end()};
}

bool is_cyclic(const WeightSystem& ws, const TorusElement& t) {
  for (const auto& [v, m] : spectrum(ws, t))
    if (m > 1) return false;
  return true;
}

bool is_almost_cyclic(const WeightSystem& ws, const TorusElement& t) {
  int repeated = 0;
  for (const auto& [v, m] : spectrum(ws, t))
    if (m > 1 && ++repeated > 1) return false;
  return true;
}

bool separates_weights(const WeightSystem& ws, const TorusElement& t) {
  std::set<GroupValue> vals;
  for (const auto& [w, m] : ws.table)
    if (!vals.insert(evaluate(t, w)).second) return false;
  return true;
}

std::vector<std::pair<Weight, Weight>> equal_root_pairs(const RootSystem& rs,
                                                        const TorusElement& t,
                                                        std::size_t max_pairs) {
  std::vector<std::pair<Weight, Weight>> out;
  std::map<GroupValue, std::vector<Weight>> by_val;
  for (const auto& a : rs.roots()) by_val[evaluate(t, a)].push_back(a);
  for (const auto& [v, roots] : by_val)
    for (std::size_t i = 0; i + 1 < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j) {
        if (out.size() >= max_pairs) return out;
        out.emplace_back(roots[i], roots[j]);
      }
  return out;
}

std::vector<std::pair<Weight, Weight>> equal_weight_pairs(const WeightSystem& ws,
                                                          const TorusElement& t,
                                                          std::size_t max_pairs) {
  std::vector<std::pair<Weight, Weight>> out;
  std::map<GroupValue, std::vector<Weight>> by_val;
  for (const auto& [w, m] : ws.table) by_val[evaluate(t, w)].push_back(w);
  for (const auto& [v, wts] : by_val)
    for (std::size_t i = 0; i + 1 < wts.size(); ++i)
      for (std::size_t j = i + 1; j < wts.size(); ++j) {
        if (out.size() >= max_pairs) return out;
        out.emplace_back(wts[i], wts[j]);
      }
  return out;
}

namespace {

using Mat = std::vector<std::vector<long long>>;

Mat eye(int n) {
  Mat m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Diagonalize m by unimodular row and column operations:
// u * input * v = m (diagonal).  Sizes here are at most 8.
void smith(Mat& m, Mat& u, Mat& v) {
  const int k = static_cast<int>(m.size());
  const int n = k ? static_cast<int>(m[0].size()) : 0;
  u = eye(k);
  v = eye(n);
  auto swap_rows = [&](int a, int b) { std::swap(m[a], m[b]); std::swap(u[a], u[b]); };
  auto swap_cols = [&](int a, int b) {
    for (int r = 0; r < k; ++r) std::swap(m[r][a], m[r][b]);
    for (int r = 0; r < n; ++r) std::swap(v[r][a], v[r][b]);
  };
  auto add_row = [&](int dst, int src, long long f) {
    for (int j = 0; j < n; ++j) m[dst][j] += f * m[src][j];
    for (int j = 0; j < k; ++j) u[dst][j] += f * u[src][j];
  };
  auto add_col = [&](int dst, int src, long long f) {
    for (int r = 0; r < k; ++r) m[r][dst] += f * m[r][src];
    for (int r = 0; r < n; ++r) v[r][dst] += f * v[r][src];
  };

  for (int t = 0; t < std::min(k, n); ++t) {
    for (;;) {
      int pr = -1, pc = -1;
      long long best = 0;
      for (int r = t; r < k; ++r)
        for (int c = t; c < n; ++c) {
          long long a = m[r][c] < 0 ? -m[r][c] : m[r][c];
          if (a != 0 && (best == 0 || a < best)) { best = a; pr = r; pc = c; }
        }
      if (pr < 0) return;  // all remaining entries zero
      swap_rows(t, pr);
      swap_cols(t, pc);
      bool clean = true;
      for (int r = t + 1; r < k; ++r)
        if (m[r][t] != 0) {
          add_row(r, t, -(m[r][t] / m[t][t]));
          if (m[r][t] != 0) clean = false;
        }
      for (int c = t + 1; c < n; ++c)
        if (m[t][c] != 0) {
          add_col(c, t, -(m[t][c] / m[t][t]));
          if (m[t][c] != 0) clean = false;
        }
      if (clean) break;
    }
    if (m[t][t] < 0) {
      m[t][t] = -m[t][t];
      for (int j = 0; j < n; ++j) v[j][t] = -v[j][t];
    }
  }
}

long long egcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) { x = 1; y = 0; return a; }
  long long x1, y1;
  long long g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

long long modinv(long long a, long long m) {
  long long x, y;
  long long g = egcd(((a % m) + m) % m, m, x, y);
  if (g != 1) throw std::logic_error("modinv: not invertible");
  return ((x % m) + m) % m;
}

}  // namespace

SolveResult solve_constraints(const RootSystem& rs, const ValueGroup& vg,
                              const std::vector<Constraint>& constraints) {
  const int n = rs.rank();
  const int k = static_cast<int>(constraints.size());
  const int ng = vg.size();
  for (const auto& c : constraints) {
    if (c.w.rank() != n) throw std::invalid_argument("constraint rank mismatch");
    if (static_cast<int>(c.v.e.size()) != ng)
      throw std::invalid_argument("constraint value has wrong exponent count");
  }

  Mat mat(k, std::vector<long long>(n, 0));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) mat[j][i] = constraints[j].w.c[i];
  Mat u, v;
  Mat s = mat;
  smith(s, u, v);
  int r = 0;
  while (r < std::min(n, k) && s[r][r] != 0) ++r;

  // exponent of each output generator on each fundamental weight
  std::vector<std::vector<long long>> x(n);
  for (auto& row : x) row.assign(ng, 0);
  std::map<std::string, long long> rescale;

  for (int g = 0; g < ng; ++g) {
    long long order = vg.gens()[g].order;
    std::vector<long long> b(k);
    for (int j = 0; j < k; ++j) b[j] = constraints[j].v.e[g];
    auto apply_u = [&](const std::vector<long long>& in) {
      std::vector<long long> out(k, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) out[i] += u[i][j] * in[j];
      return out;
    };
    std::vector<long long> c = apply_u(b);

    long long scale = 1;
    if (order == 0) {
      for (int i = 0; i < r; ++i) {
        long long g0 = std::gcd(s[i][i], c[i] < 0 ? -c[i] : c[i]);
        long long need = s[i][i] / (g0 == 0 ? s[i][i] : g0);
        if (c[i] == 0) need = 1;
        scale = std::lcm(scale, need);
      }
      if (scale > 1) {
        rescale[vg.gens()[g].name] = scale;
        for (auto& e : c) e *= scale;
      }
      for (int i = r; i < k; ++i)
        if (c[i] != 0)
          throw solve_error("inconsistent constraints on generator " +
                            vg.gens()[g].name);
      std::vector<long long> y(n, 0);
      for (int i = 0; i < r; ++i) y[i] = c[i] / s[i][i];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x[i][g] += v[i][j] * y[j];
    } else {
      auto norm = [&](long long a) { return ((a % order) + order) % order; };
      for (int i = r; i < k; ++i)
        if (norm(c[i]) != 0)
          throw solve_error("inconsistent constraints on generator " +
                            vg.gens()[g].name);
      std::vector<long long> y(n, 0);
      for (int i = 0; i < r; ++i) {
        long long d = s[i][i] % order;
        long long ci = norm(c[i]);
        long long g0 = std::gcd(d, order);
        if (g0 == 0) g0 = order;
        if (ci % g0 != 0)
          throw solve_error("no solution: generator " + vg.gens()[g].name +
                            " admits no root of the required order");
        long long m2 = order / g0;
        if (m2 == 1) { y[i] = 0; continue; }
        y[i] = (ci / g0) % m2 * modinv(d / g0, m2) % m2;
      }
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x[i][g] += v[i][j] * y[j];
    }
  }

  // Free directions get fresh infinite-order generators.
  std::vector<Generator> out_gens = vg.gens();
  int fresh = 0;
  std::vector<int> kernel_cols;
  for (int j = r; j < n; ++j) kernel_cols.push_back(j);
  std::vector<std::string> fresh_names;
  for (std::size_t t = 0; t < kernel_cols.size(); ++t) {
    std::string name;
    do {
      name = "c" + std::to_string(++fresh);
    } while (vg.index_of(name) >= 0);
    fresh_names.push_back(name);
    out_gens.push_back({name, 0});
  }

  SolveResult res;
  res.rescale = rescale;
  res.element.vg = ValueGroup(out_gens);
  res.element.basis_values.resize(n);
  for (int i = 0; i < n; ++i) {
    GroupValue val = res.element.vg.identity();
    for (int g = 0; g < ng; ++g) val.e[g] = x[i][g];
    for (std::size_t t = 0; t < kernel_cols.size(); ++t)
      val.e[ng + t] = v[i][kernel_cols[t]];
    res.element.basis_values[i] = res.element.vg.reduce(std::move(val));
  }

  // Sanity: the element must satisfy the (rescaled) constraints.
  for (const auto& cst : constraints) {
    GroupValue got = evaluate(res.element, cst.w);
    GroupValue want = res.element.vg.identity();
    for (int g = 0; g < ng; ++g) {
      long long e = cst.v.e[g];
      auto it = rescale.find(vg.gens()[g].name);
      if (it != rescale.end()) e *= it->second;
      want.e[g] = e;
    }
    if (got != res.element.vg.reduce(std::move(want)))
      throw std::logic_error("solve_constraints: verification failed");
  }
  return res;
}

std::string torus_element_json(const TorusElement& t) {
  nlohmann::ordered_json j;
  j["params"] = nlohmann::ordered_json::array();
  for (const auto& g : t.vg.gens())
    j["params"].push_back({{"name", g.name}, {"order", g.order}});
  nlohmann::ordered_json vals = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < t.basis_values.size(); ++i)
    vals["w" + std::to_string(i + 1)] = t.vg.format_value(t.basis_values[i]);
  j["values"] = vals;
  return j.dump();
}

TorusElement torus_element_from_json(const RootSystem& rs, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad torus JSON: ") + e.what());
  }
  if (j.contains("group")) {
    GroupType t = GroupType::parse(j["group"].get<std::string>());
    if (!(t == rs.type()))
      throw std::invalid_argument("torus JSON group " + t.str() +
                                  " does not match " + rs.type().str());
  }
  if (!j.contains("params") || !j["params"].is_array())
    throw std::invalid_argument("torus JSON needs a params array");
  std::vector<Generator> gens;
  for (const auto& p : j["params"])
    gens.push_back({p.at("name").get<std::string>(), p.at("order").get<long long>()});
  ValueGroup vg(std::move(gens));

  if (j.contains("values")) {
    TorusElement t;
    t.vg = vg;
    t.basis_values.resize(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) {
      std::string key = "w" + std::to_string(i + 1);
      if (!j["values"].contains(key))
        throw std::invalid_argument("torus JSON values missing " + key);
      t.basis_values[i] = vg.parse_value(j["values"][key].get<std::string>());
    }
    return t;
  }
  if (j.contains("eps")) {
    std::vector<Constraint> cons;
    for (const auto& [key, val] : j["eps"].items()) {
      if (key.size() < 2 || key[0] != 'e')
        throw std::invalid_argument("bad eps key " + key);
      int idx = std::stoi(key.substr(1));
      cons.push_back({rs.eps_weight(idx), vg.parse_value(val.get<std::string>())});
    }
    return solve_constraints(rs, vg, cons).element;
  }
  throw std::invalid_argument("torus JSON needs values or eps");
}

}  // namespace liecheck
