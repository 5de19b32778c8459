#include "berge/bounds.hpp"

#include <numeric>

#include "berge/error.hpp"
#include "berge/graph_ham.hpp"

namespace berge {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) fail(ErrorCode::invalid_argument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

bool operator<(const Rational& a, const Rational& b) { return a.num_ * b.den_ < b.num_ * a.den_; }

std::int64_t binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::int64_t c = 1;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

namespace {

void check_nk(int n, int k) {
  if (k < 3 || n < k || k > 60)
    fail(ErrorCode::invalid_argument,
         "bound needs n >= k >= 3 (got n=" + std::to_string(n) + " k=" + std::to_string(k) + ")");
}

}  // namespace

Rational eg_hypergraph_bound(int n, int k) {
  check_nk(n, k);
  return Rational(2) + Rational(n - 1, k - 2) * Rational((std::int64_t{1} << (k - 1)) - 2);
}

Rational eg_graph_bound(int n, int k) {
  check_nk(n, k);
  return Rational(n - 1, k - 2) * Rational(binomial(k - 1, 2));
}

Rational luo_bound(int n, int k, int r) {
  check_nk(n, k);
  if (r < 1) fail(ErrorCode::invalid_argument, "clique size r must be >= 1");
  return Rational(n - 1, k - 2) * Rational(binomial(k - 1, r));
}

std::int64_t degree_count_rhs(int n, int d) {
  if (d > 60) fail(ErrorCode::invalid_argument, "d too large");
  return (std::int64_t{1} << d) - binomial(d + 1, 2) + erdos_bound(n, d);
}

}  // namespace berge
