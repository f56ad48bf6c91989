#include "liecheck/rootsys.hpp"

#include <algorithm>
#include <set>

namespace liecheck {

namespace {

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Inverse of a small square rational matrix by Gauss-Jordan.
std::vector<std::vector<Rat>> invert(std::vector<std::vector<Rat>> m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, 0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != Rat(0)) { pivot = r; break; }
    if (pivot < 0) throw std::logic_error("singular matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    Rat p = m[col][col];
    for (int j = 0; j < n; ++j) { m[col][j] /= p; inv[col][j] /= p; }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == Rat(0)) continue;
      Rat f = m[r][col];
      for (int j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

RootSystem::RootSystem(GroupType type) : type_(type) {
  if (!type_.valid())
    throw std::invalid_argument("invalid group type " + type_.str());
  build_eps_data();
  build_cartan();
  build_roots();
}

void RootSystem::build_eps_data() {
  const int n = rank();
  auto unit = [](int dim, int i) {
    std::vector<Rat> v(dim, 0);
    v[i] = 1;
    return v;
  };

  switch (type_.family) {
    case 'A': {
      eps_dim_ = n + 1;
      form_scale_ = 1;
      e_value_ = 1;
      for (int i = 0; i < n; ++i) {
        auto v = unit(eps_dim_, i);
        v[i + 1] = -1;
        simple_eps_.push_back(v);
      }
      break;
    }
    case 'B': case 'C': case 'D': {
      eps_dim_ = n;
      for (int i = 0; i + 1 < n; ++i) {
        auto v = unit(n, i);
        v[i + 1] = -1;
        simple_eps_.push_back(v);
      }
      if (type_.family == 'B') {
        form_scale_ = 1;
        e_value_ = 2;
        simple_eps_.push_back(unit(n, n - 1));
      } else if (type_.family == 'C') {
        form_scale_ = Rat(1, 2);
        e_value_ = 2;
        auto v = unit(n, n - 1);
        v[n - 1] = 2;
        simple_eps_.push_back(v);
      } else {
        form_scale_ = 1;
        e_value_ = 1;
        auto v = unit(n, n - 2);
        v[n - 1] = 1;
        simple_eps_.push_back(v);
      }
      break;
    }
    case 'E': {
      eps_dim_ = 8;
      form_scale_ = 1;
      e_value_ = 1;
      std::vector<Rat> a1(8, Rat(-1, 2));
      a1[0] = Rat(1, 2);
      a1[7] = Rat(1, 2);
      simple_eps_.push_back(a1);
      std::vector<Rat> a2(8, 0);
      a2[0] = 1; a2[1] = 1;
      simple_eps_.push_back(a2);
      for (int k = 0; k + 2 < n; ++k) {
        std::vector<Rat> v(8, 0);
        v[k] = -1;
        v[k + 1] = 1;
        simple_eps_.push_back(v);
      }
      break;
    }
    case 'F': {
      eps_dim_ = 4;
      form_scale_ = 1;
      e_value_ = 2;
      simple_eps_ = {
          {0, 1, -1, 0},
          {0, 0, 1, -1},
          {0, 0, 0, 1},
          {Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)},
      };
      break;
    }
    case 'G': {
      eps_dim_ = 3;
      form_scale_ = Rat(1, 3);
      e_value_ = 3;
      simple_eps_ = {
          {1, -1, 0},
          {-2, 1, 1},
      };
      break;
    }
  }
}

void RootSystem::build_cartan() {
  const int n = rank();
  cartan_.assign(n, std::vector<long long>(n, 0));
  half_norm_.resize(n);
  for (int j = 0; j < n; ++j) {
    Rat nj = dot(simple_eps_[j], simple_eps_[j]);
    half_norm_[j] = form_scale_ * nj / 2;
    for (int i = 0; i < n; ++i) {
      Rat c = Rat(2) * dot(simple_eps_[i], simple_eps_[j]) / nj;
      cartan_[i][j] = c.as_integer();
    }
  }
  simple_roots_.clear();
  for (int i = 0; i < n; ++i) {
    Weight w(n);
    for (int j = 0; j < n; ++j) w.c[j] = cartan_[i][j];
    simple_roots_.push_back(w);
  }
  std::vector<std::vector<Rat>> ct(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ct[i][j] = Rat(cartan_[j][i]);
  inv_cartan_t_ = invert(ct);
  fund_to_eps_.assign(n, std::vector<Rat>(eps_dim_, 0));
  for (int i = 0; i < n; ++i) {
    Weight w(n);
    w.c[i] = 1;
    auto ac = alpha_coords(w);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < eps_dim_; ++k)
        fund_to_eps_[i][k] += ac[j] * simple_eps_[j][k];
  }
}

void RootSystem::build_roots() {
  std::set<Weight> seen(simple_roots_.begin(), simple_roots_.end());
  std::vector<Weight> frontier(simple_roots_);
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& w : frontier) {
      for (int i = 0; i < rank(); ++i) {
        Weight r = simple_reflect(i, w);
        if (seen.insert(r).second) next.push_back(r);
      }
    }
    frontier = std::move(next);
  }
  roots_.assign(seen.begin(), seen.end());
  positive_roots_.clear();
  for (const auto& r : roots_) {
    auto ac = alpha_coords(r);
    bool pos = true;
    for (const auto& c : ac) {
      if (!c.is_integer()) throw std::logic_error("non-integral root");
      if (c < Rat(0)) { pos = false; break; }
    }
    if (pos) positive_roots_.push_back(r);
  }
  long long best_height = -1;
  for (const auto& r : positive_roots_) {
    if (!r.is_dominant()) continue;
    auto ac = alpha_coords(r);
    long long h = 0;
    for (const auto& c : ac) h += c.as_integer();
    if (h > best_height) { best_height = h; highest_root_ = r; }
  }
}

Weight RootSystem::simple_reflect(int i, const Weight& w) const {
  Weight r = w;
  long long m = w.c[i];
  if (m != 0)
    for (int j = 0; j < rank(); ++j) r.c[j] -= m * cartan_[i][j];
  return r;
}

Weight RootSystem::dominant_conjugate(const Weight& w) const {
  Weight r = w;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rank(); ++i)
      if (r.c[i] < 0) { neg = i; break; }
    if (neg < 0) return r;
    r = simple_reflect(neg, r);
  }
}

std::vector<Weight> RootSystem::weyl_orbit(const Weight& w) const {
  std::set<Weight> seen{w};
  std::vector<Weight> frontier{w};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& v : frontier) {
      for (int i = 0; i < rank(); ++i) {
        Weight r = simple_reflect(i, v);
        if (seen.insert(r).second) next.push_back(r);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<Rat> RootSystem::alpha_coords(const Weight& w) const {
  const int n = rank();
  std::vector<Rat> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out[i] += inv_cartan_t_[i][j] * Rat(w.c[j]);
  return out;
}

bool RootSystem::is_radical(const Weight& w) const {
  for (const auto& c : alpha_coords(w))
    if (!c.is_integer()) return false;
  return true;
}

std::vector<Rat> RootSystem::eps_coords(const Weight& w) const {
  std::vector<Rat> out(eps_dim_, 0);
  for (int i = 0; i < rank(); ++i)
    if (w.c[i] != 0)
      for (int k = 0; k < eps_dim_; ++k)
        out[k] += Rat(w.c[i]) * fund_to_eps_[i][k];
  return out;
}

Weight RootSystem::eps_weight(int i) const {
  const int n = rank();
  if (type_.family == 'A') {
    // In SL_{n+1} the determinant relation makes eps_i and
    // w_i - w_{i-1} equal as characters of the maximal torus.
    if (i < 1 || i > n + 1) throw std::invalid_argument("eps index out of range");
    Weight w(n);
    if (i <= n) w.c[i - 1] += 1;
    if (i >= 2) w.c[i - 2] -= 1;
    return w;
  }
  if (type_.family != 'B' && type_.family != 'C' && type_.family != 'D' &&
      type_.family != 'F')
    throw std::invalid_argument("eps_weight not defined for type " + type_.str());
  if (i < 1 || i > eps_dim_) throw std::invalid_argument("eps index out of range");
  // Solve sum_k w_k * fund_to_eps[k] = e_i; the frame is square here.
  std::vector<std::vector<Rat>> m(eps_dim_, std::vector<Rat>(eps_dim_));
  for (int r = 0; r < eps_dim_; ++r)
    for (int k = 0; k < eps_dim_; ++k) m[r][k] = fund_to_eps_[k][r];
  auto inv = invert(m);
  Weight w(n);
  for (int k = 0; k < n; ++k) w.c[k] = inv[k][i - 1].as_integer();
  return w;
}

Rat RootSystem::inner(const Weight& a, const Weight& b) const {
  // (a, b) = sum_j c_j(b) * a[j] * d_j where b = sum c_j alpha_j.
  auto cb = alpha_coords(b);
  Rat s = 0;
  for (int j = 0; j < rank(); ++j)
    s += cb[j] * Rat(a.c[j]) * half_norm_[j];
  return s;
}

}  // namespace liecheck
