#include "liecheck/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <nlohmann/json.hpp>
#include <random>
#include <set>
#include <thread>

namespace liecheck {

namespace {

long long pow_ll(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Weight rows reduced mod N for fast evaluation at mu_N-points.
struct FastRows {
  std::vector<std::vector<long long>> rows;
  std::vector<long long> mults;
};

FastRows compile_rows(const std::vector<const Weight*>& ws,
                      const std::vector<long long>& mults, long long N) {
  FastRows f;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    std::vector<long long> row(ws[i]->c.size());
    for (std::size_t j = 0; j < row.size(); ++j)
      row[j] = ((ws[i]->c[j] % N) + N) % N;
    f.rows.push_back(std::move(row));
    f.mults.push_back(mults[i]);
  }
  return f;
}

FastRows compile_module(const WeightSystem& ws, long long N) {
  std::vector<const Weight*> w;
  std::vector<long long> m;
  for (const auto& [k, v] : ws.table) {
    w.push_back(&k);
    m.push_back(v);
  }
  return compile_rows(w, m, N);
}

FastRows compile_weights(const std::vector<Weight>& ws, long long N) {
  std::vector<const Weight*> w;
  std::vector<long long> m;
  for (const auto& k : ws) {
    w.push_back(&k);
    m.push_back(1);
  }
  return compile_rows(w, m, N);
}

// Per-thread scratch evaluating predicates at one exponent vector.
class PointEval {
 public:
  PointEval(long long N, const FastRows& simple, const FastRows& roots)
      : N_(N), simple_(simple), roots_(roots), cnt_(N, 0) {}

  void set_point(const std::vector<long long>& x) { x_ = &x; }

  long long value(const std::vector<long long>& row) const {
    long long s = 0;
    for (std::size_t i = 0; i < row.size(); ++i) s += row[i] * (*x_)[i];
    return s % N_;
  }

  bool central() const {
    for (const auto& r : simple_.rows)
      if (value(r) != 0) return false;
    return true;
  }
  bool regular() const {
    for (const auto& r : roots_.rows)
      if (value(r) == 0) return false;
    return true;
  }
  bool strongly_regular() {
    load(roots_);
    for (long long v : touched_)
      if (cnt_[v] > 1) { clear(); return false; }
    clear();
    return true;
  }
  bool cyclic(const FastRows& mod) {
    load(mod);
    for (long long v : touched_)
      if (cnt_[v] > 1) { clear(); return false; }
    clear();
    return true;
  }
  bool almost_cyclic(const FastRows& mod) {
    load(mod);
    int rep = 0;
    for (long long v : touched_)
      if (cnt_[v] > 1 && ++rep > 1) { clear(); return false; }
    clear();
    return true;
  }
  // counts of the convolution of two modules' spectra
  bool almost_cyclic_tensor(const FastRows& a, const FastRows& b) {
    std::vector<long long> ca(N_, 0), cb(N_, 0), cc(N_, 0);
    for (std::size_t i = 0; i < a.rows.size(); ++i) ca[value(a.rows[i])] += a.mults[i];
    for (std::size_t i = 0; i < b.rows.size(); ++i) cb[value(b.rows[i])] += b.mults[i];
    for (long long u = 0; u < N_; ++u)
      if (ca[u])
        for (long long v = 0; v < N_; ++v)
          if (cb[v]) cc[(u + v) % N_] += ca[u] * cb[v];
    int rep = 0;
    for (long long v = 0; v < N_; ++v)
      if (cc[v] > 1 && ++rep > 1) return false;
    return true;
  }

 private:
  void load(const FastRows& f) {
    for (std::size_t i = 0; i < f.rows.size(); ++i) {
      long long v = value(f.rows[i]);
      if (cnt_[v] == 0) touched_.push_back(v);
      cnt_[v] += f.mults[i];
    }
  }
  void clear() {
    for (long long v : touched_) cnt_[v] = 0;
    touched_.clear();
  }

  long long N_;
  const FastRows& simple_;
  const FastRows& roots_;
  std::vector<long long> cnt_;
  std::vector<long long> touched_;
  const std::vector<long long>* x_ = nullptr;
};

struct Partial {
  long long checked = 0;
  long long central = 0;
  std::vector<ScanHit> counterexamples;
  std::optional<std::pair<long long, ScanHit>> witness;  // index, hit
};

constexpr std::size_t kMaxHits = 16;

void decode(long long idx, long long N, std::vector<long long>& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = idx % N;
    idx /= N;
  }
}

// Runs one pipeline over a range of element indices (or a sample).
Partial run_range(const RootSystem& rs, long long N, Pipeline pipe,
                  const std::vector<FastRows>& mods, bool exception,
                  const FastRows& simple, const FastRows& roots,
                  long long lo, long long hi,
                  const std::vector<long long>* sample_idx = nullptr) {
  Partial out;
  PointEval ev(N, simple, roots);
  std::vector<long long> x(rs.rank());
  long long count = sample_idx ? static_cast<long long>(sample_idx->size()) : hi - lo;
  for (long long t = 0; t < count; ++t) {
    long long idx = sample_idx ? (*sample_idx)[t] : lo + t;
    decode(idx, N, x);
    ev.set_point(x);
    ++out.checked;
    bool cen = ev.central();
    if (cen) ++out.central;
    auto hit = [&](const std::string& detail) {
      ScanHit h{x, detail};
      return h;
    };
    switch (pipe) {
      case Pipeline::cyclic_implies_strongly_regular: {
        if (cen) break;
        if (!ev.cyclic(mods[0])) break;
        if (ev.strongly_regular()) break;
        if (exception) {
          if (!out.witness) out.witness = {idx, hit("cyclic, not strongly regular")};
        } else if (out.counterexamples.size() < kMaxHits) {
          out.counterexamples.push_back(hit("cyclic but not strongly regular"));
        }
        break;
      }
      case Pipeline::regular_almost_cyclic_implies_strongly_regular: {
        if (!ev.regular()) break;
        if (!ev.almost_cyclic(mods[0])) break;
        if (ev.strongly_regular()) break;
        if (exception) {
          if (!out.witness)
            out.witness = {idx, hit("regular, almost cyclic, not strongly regular")};
        } else if (out.counterexamples.size() < kMaxHits) {
          out.counterexamples.push_back(
              hit("regular and almost cyclic but not strongly regular"));
        }
        break;
      }
      case Pipeline::strongly_regular_iff_almost_cyclic: {
        if (cen) break;
        bool sr = ev.strongly_regular();
        bool ac = ev.almost_cyclic(mods[0]);
        if (sr != ac && out.counterexamples.size() < kMaxHits)
          out.counterexamples.push_back(
              hit(sr ? "strongly regular but not almost cyclic"
                     : "almost cyclic but not strongly regular"));
        break;
      }
      case Pipeline::almost_cyclic_tensor_implies_cyclic_factors: {
        if (cen) break;
        if (!ev.almost_cyclic_tensor(mods[0], mods[1])) break;
        if (ev.cyclic(mods[0]) && ev.cyclic(mods[1])) break;
        if (out.counterexamples.size() < kMaxHits)
          out.counterexamples.push_back(
              hit("almost cyclic on the tensor, factor not cyclic"));
        break;
      }
      case Pipeline::find_cyclic_not_strongly_regular: {
        if (cen) break;
        if (ev.cyclic(mods[0]) && !ev.strongly_regular() && !out.witness)
          out.witness = {idx, hit("cyclic, not strongly regular")};
        break;
      }
      case Pipeline::find_regular_cyclic_not_strongly_regular: {
        if (cen || !ev.regular()) break;
        if (ev.cyclic(mods[0]) && !ev.strongly_regular() && !out.witness)
          out.witness = {idx, hit("regular, cyclic, not strongly regular")};
        break;
      }
    }
  }
  return out;
}

Partial run_lambda(const RootSystem& rs, const ScanSpec& spec,
                   const std::vector<FastRows>& mods, bool exception) {
  const long long N = spec.modulus;
  FastRows simple = compile_weights(rs.simple_roots(), N);
  FastRows roots = compile_weights(rs.roots(), N);
  long long total = pow_ll(N, rs.rank());

  if (spec.mode == ScanMode::sampled) {
    std::mt19937_64 rng(spec.seed);
    std::vector<long long> idx(spec.sample_count);
    for (auto& v : idx) v = static_cast<long long>(rng() % total);
    return run_range(rs, N, spec.pipeline, mods, exception, simple, roots, 0, 0,
                     &idx);
  }

  int threads = std::max(1, spec.threads);
  if (threads == 1 || total < 4096)
    return run_range(rs, N, spec.pipeline, mods, exception, simple, roots, 0,
                     total);

  std::vector<Partial> parts(threads);
  std::vector<std::thread> pool;
  long long chunk = (total + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    long long lo = t * chunk, hi = std::min(total, lo + chunk);
    pool.emplace_back([&, t, lo, hi] {
      if (lo < hi)
        parts[t] = run_range(rs, N, spec.pipeline, mods, exception, simple,
                             roots, lo, hi);
    });
  }
  for (auto& th : pool) th.join();
  Partial merged;
  for (const auto& p : parts) {
    merged.checked += p.checked;
    merged.central += p.central;
    for (const auto& h : p.counterexamples)
      if (merged.counterexamples.size() < kMaxHits)
        merged.counterexamples.push_back(h);
    if (p.witness && (!merged.witness || p.witness->first < merged.witness->first))
      merged.witness = p.witness;
  }
  return merged;
}

std::string scope_label(long long N) {
  return "verified over mu_N-points (N=" + std::to_string(N) + ")";
}

}  // namespace

bool TheoremReport::passed() const {
  for (const auto& l : lambdas)
    if (!l.counterexamples.empty()) return false;
  return true;
}

bool TheoremReport::witnesses_complete() const {
  for (const auto& l : lambdas)
    if (l.exception && !l.witness) return false;
  return true;
}

std::string TheoremReport::json(bool include_timing) const {
  nlohmann::ordered_json j;
  j["theorem"] = theorem;
  j["group"] = group.str();
  j["p"] = p;
  j["modulus"] = modulus;
  j["mode"] = mode;
  j["scope"] = scope;
  j["elements"] = elements;
  long long checked = 0;
  for (const auto& l : lambdas) checked += l.checked;
  j["checked"] = checked;
  j["skipped"] = nlohmann::ordered_json::array();
  for (const auto& [l, r] : skipped)
    j["skipped"].push_back({{"lambda", l}, {"reason", r}});
  auto hit_json = [](const ScanHit& h) {
    return nlohmann::ordered_json{{"exponents", h.exponents}, {"detail", h.detail}};
  };
  j["lambdas"] = nlohmann::ordered_json::array();
  j["counterexamples"] = nlohmann::ordered_json::array();
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& l : lambdas) {
    nlohmann::ordered_json e;
    e["lambda"] = l.lambda;
    e["source"] = l.source;
    e["exception"] = l.exception;
    e["checked"] = l.checked;
    e["central"] = l.central;
    e["counterexamples"] = nlohmann::ordered_json::array();
    for (const auto& h : l.counterexamples) {
      e["counterexamples"].push_back(hit_json(h));
      auto top = hit_json(h);
      top["lambda"] = l.lambda;
      j["counterexamples"].push_back(top);
    }
    if (l.witness) {
      e["witness"] = hit_json(*l.witness);
      auto top = hit_json(*l.witness);
      top["lambda"] = l.lambda;
      j["witnesses"].push_back(top);
    }
    j["lambdas"].push_back(e);
  }
  j["passed"] = passed();
  if (include_timing) j["wall_time_ms"] = wall_time_ms;
  return j.dump();
}

TheoremReport scan(const ScanSpec& spec) {
  auto t0 = std::chrono::steady_clock::now();
  RootSystem rs(spec.group);
  TheoremReport rep;
  rep.theorem = "scan";
  rep.group = spec.group;
  rep.p = spec.chr.p;
  rep.modulus = spec.modulus;
  rep.mode = spec.mode == ScanMode::exhaustive ? "exhaustive" : "sampled";
  rep.scope = scope_label(spec.modulus);
  rep.elements = pow_ll(spec.modulus, rs.rank());
  if (spec.modulus < 2) throw std::invalid_argument("modulus must be >= 2");
  std::vector<FastRows> mods;
  std::vector<std::string> labels;
  for (const auto& pieces : spec.modules) {
    WeightSystem ws = weight_system(rs, pieces, spec.chr);
    mods.push_back(compile_module(ws, spec.modulus));
    std::string l;
    for (const auto& w : pieces) {
      if (!l.empty()) l += " + ";
      l += format_weight(w);
    }
    labels.push_back(l);
  }
  bool exception = spec.pipeline == Pipeline::find_cyclic_not_strongly_regular ||
                   spec.pipeline == Pipeline::find_regular_cyclic_not_strongly_regular;
  Partial p = run_lambda(rs, spec, mods, exception);
  LambdaResult lr;
  lr.lambda = labels.empty() ? "" : labels[0];
  for (std::size_t i = 1; i < labels.size(); ++i) lr.lambda += " (x) " + labels[i];
  lr.exception = exception;
  lr.checked = p.checked;
  lr.central = p.central;
  lr.counterexamples = p.counterexamples;
  if (p.witness) lr.witness = p.witness->second;
  rep.lambdas.push_back(std::move(lr));
  rep.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
  return rep;
}

std::vector<CandidateWeight> table1_instances(GroupType t, CharTag c,
                                              long long coeff_bound) {
  const int n = t.rank;
  const int p = c.p;
  std::set<Weight> seen;
  std::vector<CandidateWeight> out;
  auto add = [&](const Weight& w) {
    if (w.is_zero()) return;
    if (p > 0)
      for (long long x : w.c)
        if (x >= p) return;
    if (!seen.insert(w).second) return;
    auto e = table_lookup(t, c, w);
    if (e.cls != TableClass::AllMultOne)
      throw std::logic_error("table1_instances produced a non-table weight");
    out.push_back({w, e.row});
  };
  long long lim = p > 0 ? std::min<long long>(coeff_bound, p - 1) : coeff_bound;
  switch (t.family) {
    case 'A': {
      for (long long a = 1; a <= lim; ++a) {
        add(fundamental(n, 1, a));
        add(fundamental(n, n, a));
      }
      for (int i = 2; i < n; ++i) add(fundamental(n, i));
      if (p > 0)
        for (int i = 1; i < n; ++i)
          for (long long cc = 0; cc < p; ++cc) {
            Weight w(n);
            w.c[i - 1] = cc;
            w.c[i] = p - 1 - cc;
            add(w);
          }
      break;
    }
    case 'B':
      add(fundamental(n, 1));
      add(fundamental(n, n));
      break;
    case 'C': {
      add(fundamental(n, 1));
      if (p == 2) {
        add(fundamental(n, n));
      } else {
        if (n == 2) add(fundamental(n, 2));
        if (p > 2) {
          Weight w(n);
          w.c[n - 2] = 1;
          w.c[n - 1] = (p - 3) / 2;
          add(w);
          add(fundamental(n, n, (p - 1) / 2));
        }
      }
      if (n == 3) add(fundamental(n, 3));
      break;
    }
    case 'D':
      add(fundamental(n, 1));
      add(fundamental(n, n - 1));
      add(fundamental(n, n));
      break;
    case 'E':
      if (n == 6) { add(fundamental(n, 1)); add(fundamental(n, 6)); }
      if (n == 7) add(fundamental(n, 7));
      break;
    case 'F':
      if (p == 3) add(fundamental(n, 4));
      break;
    case 'G':
      add(fundamental(n, 1));
      if (p == 3) add(fundamental(n, 2));
      break;
  }
  std::sort(out.begin(), out.end(),
            [](const CandidateWeight& a, const CandidateWeight& b) {
              return a.w < b.w;
            });
  return out;
}

std::vector<CandidateWeight> table2_instances(GroupType t, CharTag c) {
  const int n = t.rank;
  const int p = c.p;
  std::vector<CandidateWeight> out;
  auto add = [&](const Weight& w) {
    if (p > 0)
      for (long long x : w.c)
        if (x >= p) return;
    auto e = table_lookup(t, c, w);
    if (e.cls != TableClass::NonzeroMultOne)
      throw std::logic_error("table2_instances produced a non-table weight");
    out.push_back({w, e.row});
  };
  switch (t.family) {
    case 'A': {
      if (n >= 2 && !(n == 2 && p == 3)) {
        Weight adj(n);
        adj.c[0] = 1;
        adj.c[n - 1] = 1;
        add(adj);
      }
      if (n == 3 && (p == 0 || p > 3)) add(fundamental(n, 2, 2));
      break;
    }
    case 'B':
      add(fundamental(n, 2));
      add(fundamental(n, 1, 2));
      break;
    case 'C':
      add(fundamental(n, 1, 2));
      if (n > 2 && !(n == 3 && p == 3)) add(fundamental(n, 2));
      if (n == 2 && p != 5) add(fundamental(n, 2, 2));
      if (n == 4 && p != 2 && p != 3) add(fundamental(n, 4));
      break;
    case 'D':
      add(fundamental(n, 1, 2));
      add(fundamental(n, 2));
      break;
    case 'E':
      if (n == 6) add(fundamental(n, 2));
      if (n == 7) add(fundamental(n, 1));
      if (n == 8) add(fundamental(n, 8));
      break;
    case 'F':
      add(fundamental(n, 1));
      if (p != 3) add(fundamental(n, 4));
      break;
    case 'G':
      if (p != 3) add(fundamental(n, 2));
      break;
  }
  std::sort(out.begin(), out.end(),
            [](const CandidateWeight& a, const CandidateWeight& b) {
              return a.w < b.w;
            });
  return out;
}

bool in_table3(GroupType t, int p, const Weight& lam) {
  const int n = t.rank;
  auto is_fund = [&](int i) { return lam == fundamental(n, i); };
  switch (t.family) {
    case 'A':
      if (n == 1) return p != 2 && is_fund(1);
      for (int i = 1; i <= n; ++i)
        if (is_fund(i)) return true;
      return false;
    case 'B':
      return is_fund(1) || is_fund(n);
    case 'C':
      if (n == 2) return is_fund(1) || is_fund(2);
      if (is_fund(1)) return true;
      if (p == 2 && is_fund(n)) return true;
      if (n == 3 && is_fund(3)) return true;
      if (p == 3 && (is_fund(n - 1) || is_fund(n))) return true;
      return false;
    case 'D':
      return is_fund(1) || is_fund(n - 1) || is_fund(n);
    case 'E':
      if (n == 6) return is_fund(1) || is_fund(6);
      if (n == 7) return is_fund(7);
      return false;
    case 'F':
      return p == 3 && is_fund(4);
    case 'G':
      return is_fund(1) || (p == 3 && is_fund(2));
  }
  return false;
}

bool in_re1_exceptions(GroupType t, int p, const Weight& lam) {
  if (in_table3(t, p, lam)) return true;
  const int n = t.rank;
  switch (t.family) {
    case 'A': {
      if (lam == fundamental(n, 1, 2) || lam == fundamental(n, n, 2)) return true;
      if (n == 2 && p == 3) {
        Weight adj(n);
        adj.c[0] = 1;
        adj.c[1] = 1;
        if (lam == adj) return true;
      }
      return false;
    }
    case 'B':
      return p == 2 && lam == fundamental(n, 2);
    case 'C':
      if (n >= 3 && !(n == 3 && p == 3) && lam == fundamental(n, 2)) return true;
      if (n == 4 && p != 2 && p != 3 && lam == fundamental(n, 4)) return true;
      return false;
    case 'F':
      if (p != 3 && lam == fundamental(n, 4)) return true;
      if (p == 2 && lam == fundamental(n, 1)) return true;
      return false;
    default:
      return false;
  }
}

namespace {

TheoremReport run_theorem(const std::string& theorem, GroupType t, CharTag c,
                          long long N, int threads, Pipeline pipe,
                          const std::vector<CandidateWeight>& candidates,
                          const std::vector<std::pair<std::string, std::string>>&
                              pre_skipped,
                          bool (*exception_test)(GroupType, int, const Weight&)) {
  auto t0 = std::chrono::steady_clock::now();
  RootSystem rs(t);
  TheoremReport rep;
  rep.theorem = theorem;
  rep.group = t;
  rep.p = c.p;
  rep.modulus = N;
  rep.mode = "exhaustive";
  rep.scope = scope_label(N);
  rep.elements = pow_ll(N, rs.rank());
  rep.skipped = pre_skipped;
  for (const auto& cand : candidates) {
    WeightSystem ws;
    try {
      ws = weight_system(rs, cand.w, c);
    } catch (const unsupported_error& e) {
      rep.skipped.push_back({format_weight(cand.w), e.what()});
      continue;
    }
    ScanSpec spec;
    spec.group = t;
    spec.chr = c;
    spec.modulus = N;
    spec.pipeline = pipe;
    spec.threads = threads;
    std::vector<FastRows> mods{compile_module(ws, N)};
    bool exc = exception_test(t, c.p, cand.w);
    Partial p = run_lambda(rs, spec, mods, exc);
    LambdaResult lr;
    lr.lambda = format_weight(cand.w);
    lr.source = cand.source;
    lr.exception = exc;
    lr.checked = p.checked;
    lr.central = p.central;
    lr.counterexamples = p.counterexamples;
    if (p.witness) lr.witness = p.witness->second;
    rep.lambdas.push_back(std::move(lr));
  }
  rep.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
  return rep;
}

}  // namespace

TheoremReport verify_th1(GroupType t, CharTag c, long long N, int threads) {
  // candidates: every fundamental (skipping the ones the tables call
  // not multiplicity free) plus the non-fundamental table rows
  std::vector<std::pair<std::string, std::string>> skipped;
  std::vector<CandidateWeight> cands;
  std::set<Weight> seen;
  for (int i = 1; i <= t.rank; ++i) {
    Weight w = fundamental(t.rank, i);
    auto e = table_lookup(t, c, w);
    if (e.cls == TableClass::AllMultOne) {
      cands.push_back({w, e.row});
      seen.insert(w);
    } else {
      skipped.push_back({format_weight(w),
                         "not in the all-multiplicities-one classification"});
    }
  }
  for (const auto& cand : table1_instances(t, c))
    if (seen.insert(cand.w).second) cands.push_back(cand);
  return run_theorem("th1", t, c, N, threads,
                     Pipeline::cyclic_implies_strongly_regular, cands, skipped,
                     &in_table3);
}

TheoremReport verify_re1(GroupType t, CharTag c, long long N, int threads) {
  std::vector<CandidateWeight> cands;
  std::set<Weight> seen;
  for (const auto& cand : table1_instances(t, c))
    if (seen.insert(cand.w).second) cands.push_back(cand);
  for (const auto& cand : table2_instances(t, c))
    if (seen.insert(cand.w).second) cands.push_back(cand);
  return run_theorem("re1", t, c, N, threads,
                     Pipeline::regular_almost_cyclic_implies_strongly_regular,
                     cands, {}, &in_re1_exceptions);
}

TheoremReport verify_sa1(GroupType t, CharTag c, long long N, int threads) {
  RootSystem rs(t);
  CandidateWeight va{rs.highest_root(), "adjoint module"};
  auto never = [](GroupType, int, const Weight&) { return false; };
  return run_theorem("sa1", t, c, N, threads,
                     Pipeline::strongly_regular_iff_almost_cyclic, {va}, {},
                     never);
}

Spectrum tensor_spectrum(const ValueGroup& vg, const Spectrum& a,
                         const Spectrum& b) {
  std::map<GroupValue, long long> acc;
  for (const auto& [va, ma] : a)
    for (const auto& [vb, mb] : b) acc[vg.mul(va, vb)] += ma * mb;
  return {acc.begin(), acc.end()};
}

WeightSystem frobenius_twist_spectrum(const WeightSystem& ws, int k, int p) {
  CharTag check(p);
  if (check.p == 0) throw std::invalid_argument("twist needs a prime");
  long long f = 1;
  for (int i = 0; i < k; ++i) f *= p;
  WeightSystem out;
  out.type = ws.type;
  out.p = ws.p;
  for (const auto& l : ws.pieces) out.pieces.push_back(f * l);
  for (const auto& [w, m] : ws.table) out.table[f * w] += m;
  return out;
}

std::vector<std::pair<Weight, Weight>> td4_exclusions(GroupType t, int p) {
  const int n = t.rank;
  if (t.family == 'C' && p == 2)
    return {{fundamental(n, n), fundamental(n, 1)}};
  if (t.family == 'G' && p == 2)
    return {{fundamental(n, 1), fundamental(n, 1)}};
  if (t.family == 'G' && p == 3)
    return {{fundamental(n, 2), fundamental(n, 1)}};
  return {};
}

TorusElement element_from_exponents(const RootSystem& rs, long long N,
                                    const std::vector<long long>& exponents) {
  if (static_cast<int>(exponents.size()) != rs.rank())
    throw std::invalid_argument("exponent count does not match rank");
  TorusElement t;
  t.vg = ValueGroup({{"z", N}});
  for (long long e : exponents)
    t.basis_values.push_back(t.vg.reduce(GroupValue{{e}}));
  return t;
}

}  // namespace liecheck
