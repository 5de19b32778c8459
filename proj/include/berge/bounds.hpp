#pragma once

#include <cstdint>
#include <string>

namespace berge {

/// Exact fraction with a positive denominator in lowest terms.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  std::string to_string() const;  // "14" or "7/2"

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

std::int64_t binomial(int n, int r);

/// 2 + (n-1)/(k-2) * (2^(k-1) - 2); requires n >= k >= 3.
Rational eg_hypergraph_bound(int n, int k);
/// (n-1)/(k-2) * C(k-1, 2); requires n >= k >= 3.
Rational eg_graph_bound(int n, int k);
/// (n-1)/(k-2) * C(k-1, r); requires n >= k >= 3 and r >= 1.
Rational luo_bound(int n, int k, int r);

/// 2^d - C(d+1, 2) + e(n,d): the largest degree a vertex of minimum degree d
/// in the matched graph allows.
std::int64_t degree_count_rhs(int n, int d);

}  // namespace berge
