#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace liecheck {

// Thrown when a modular weight system is requested that the multiplicity
// tables do not determine.  Callers must treat this as "no data", never
// as an excuse to fall back to characteristic-zero numbers.
struct unsupported_error : std::runtime_error {
  explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the torus constraint solver: inconsistent system, or a root
// extraction that does not exist in the value group.
struct solve_error : std::runtime_error {
  explicit solve_error(const std::string& what) : std::runtime_error(what) {}
};

struct GroupType {
  char family = 'A';  // one of A B C D E F G
  int rank = 1;

  bool operator==(const GroupType&) const = default;

  std::string str() const { return std::string(1, family) + std::to_string(rank); }

  // Rank bounds: A>=1, B>=3, C>=2, D>=4, E in 6..8, F=4, G=2.
  bool valid() const {
    switch (family) {
      case 'A': return rank >= 1;
      case 'B': return rank >= 3;
      case 'C': return rank >= 2;
      case 'D': return rank >= 4;
      case 'E': return rank >= 6 && rank <= 8;
      case 'F': return rank == 4;
      case 'G': return rank == 2;
      default: return false;
    }
  }

  static GroupType parse(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("bad group type: " + s);
    GroupType t;
    t.family = s[0];
    try {
      std::size_t pos = 0;
      t.rank = std::stoi(s.substr(1), &pos);
      if (pos + 1 != s.size()) throw std::invalid_argument("");
    } catch (...) {
      throw std::invalid_argument("bad group type: " + s);
    }
    if (!t.valid()) throw std::invalid_argument("group type out of range: " + s);
    return t;
  }
};

// A weight in the fundamental-weight basis.  Coefficients are plain
// integers; epsilon coordinates are a derived rational view owned by
// RootSystem.
struct Weight {
  std::vector<long long> c;

  Weight() = default;
  explicit Weight(int rank) : c(rank, 0) {}
  Weight(std::initializer_list<long long> init) : c(init) {}

  int rank() const { return static_cast<int>(c.size()); }
  bool is_zero() const {
    for (long long x : c) if (x != 0) return false;
    return true;
  }
  bool is_dominant() const {
    for (long long x : c) if (x < 0) return false;
    return true;
  }

  long long& operator[](int i) { return c[i]; }
  long long operator[](int i) const { return c[i]; }

  bool operator==(const Weight&) const = default;
  bool operator<(const Weight& o) const { return c < o.c; }

  Weight& operator+=(const Weight& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(long long k, Weight a) {
    for (auto& x : a.c) x *= k;
    return a;
  }
  Weight operator-() const {
    Weight r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
};

// Builds the weight a*w_i (1-based index).
inline Weight fundamental(int rank, int i, long long a = 1) {
  Weight w(rank);
  w.c[i - 1] = a;
  return w;
}

// Text format: "a1*w1+a2*w2+..." with zero terms omitted; "0" for the
// zero weight.  Example: "2*w1-w3".
std::string format_weight(const Weight& w);
Weight parse_weight(const std::string& text, int rank);

}  // namespace liecheck
