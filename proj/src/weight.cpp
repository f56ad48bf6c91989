#include "liecheck/weight.hpp"

#include <cctype>
#include <sstream>

namespace liecheck {

std::string format_weight(const Weight& w) {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < w.rank(); ++i) {
    long long a = w.c[i];
    if (a == 0) continue;
    if (a > 0 && !first) out << "+";
    if (a == -1) out << "-";
    else if (a != 1) out << a << "*";
    out << "w" << (i + 1);
    first = false;
  }
  if (first) return "0";
  return out.str();
}

Weight parse_weight(const std::string& text, int rank) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty weight");
  if (s == "0") return Weight(rank);

  Weight w(rank);
  std::size_t pos = 0;
  while (pos < s.size()) {
    long long sign = 1;
    if (s[pos] == '+') { ++pos; }
    else if (s[pos] == '-') { sign = -1; ++pos; }
    if (pos >= s.size()) throw std::invalid_argument("dangling sign in weight: " + text);

    long long coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::size_t used = 0;
      coeff = std::stoll(s.substr(pos), &used);
      pos += used;
      if (pos >= s.size() || s[pos] != '*')
        throw std::invalid_argument("expected '*' after coefficient in weight: " + text);
      ++pos;
    }
    if (pos >= s.size() || s[pos] != 'w')
      throw std::invalid_argument("expected 'w<i>' term in weight: " + text);
    ++pos;
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw std::invalid_argument("expected index after 'w' in weight: " + text);
    std::size_t used = 0;
    long long idx = std::stoll(s.substr(pos), &used);
    pos += used;
    if (idx < 1 || idx > rank)
      throw std::invalid_argument("weight index out of range: " + text);
    w.c[idx - 1] += sign * coeff;
  }
  return w;
}

}  // namespace liecheck
