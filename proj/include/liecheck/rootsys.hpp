#pragma once

#include <vector>

#include "liecheck/rational.hpp"
#include "liecheck/weight.hpp"

namespace liecheck {

// Root system data for a simple type, all in the fundamental-weight
// basis.  Epsilon coordinates follow the standard orthonormal frames
// (A_n in n+1 coordinates summing to zero, B/C/D_n in n, G2 in 3,
// F4 in 4, E types in 8) and are exposed as exact rationals.  The
// invariant form is normalized so long roots have squared length 2.
class RootSystem {
public:
  explicit RootSystem(GroupType type);

  GroupType type() const { return type_; }
  int rank() const { return type_.rank; }
  int eps_dim() const { return eps_dim_; }

  // cartan()[i][j] = <alpha_i, alpha_j^vee>.
  const std::vector<std::vector<long long>>& cartan() const { return cartan_; }
  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const std::vector<Weight>& roots() const { return roots_; }
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  const Weight& highest_root() const { return highest_root_; }

  // Largest coefficient of a simple short root in the highest short
  // root's expansion: 1 for simply laced, 2 for B/C/F4, 3 for G2.
  int e_value() const { return e_value_; }

  Weight rho() const {
    Weight r(rank());
    for (auto& x : r.c) x = 1;
    return r;
  }

  // s_i(w) = w - w[i] * alpha_i, 0-based i.
  Weight simple_reflect(int i, const Weight& w) const;
  Weight dominant_conjugate(const Weight& w) const;

  // Orbit under the Weyl group, sorted lexicographically.
  std::vector<Weight> weyl_orbit(const Weight& w) const;

  // Coordinates of w in the simple-root basis (solves C^T x = w).
  std::vector<Rat> alpha_coords(const Weight& w) const;
  // True when w lies in the root lattice.
  bool is_radical(const Weight& w) const;

  // Epsilon coordinates of w (length eps_dim()).
  std::vector<Rat> eps_coords(const Weight& w) const;
  // eps_i (1-based) written as an integral weight.  Defined for the
  // classical frames where eps_i lies in the weight lattice: types
  // B, C, D, F4, and A_n where eps_i = w_i - w_{i-1} holds modulo the
  // determinant line.  Throws invalid_argument otherwise.
  Weight eps_weight(int i) const;

  // Invariant bilinear form, long roots of squared length 2.
  Rat inner(const Weight& a, const Weight& b) const;
  // d_i = (alpha_i, alpha_i) / 2 for 0-based i.
  Rat half_norm(int i) const { return half_norm_[i]; }

private:
  GroupType type_;
  int eps_dim_ = 0;
  int e_value_ = 1;
  Rat form_scale_ = 1;  // applied to the euclidean form on eps space
  std::vector<std::vector<Rat>> simple_eps_;   // alpha_i rows
  std::vector<std::vector<Rat>> fund_to_eps_;  // omega_i rows
  std::vector<std::vector<long long>> cartan_;
  std::vector<std::vector<Rat>> inv_cartan_t_;  // (C^T)^{-1}
  std::vector<Rat> half_norm_;
  std::vector<Weight> simple_roots_;
  std::vector<Weight> roots_;
  std::vector<Weight> positive_roots_;
  Weight highest_root_;

  void build_eps_data();
  void build_cartan();
  void build_roots();
};

}  // namespace liecheck
