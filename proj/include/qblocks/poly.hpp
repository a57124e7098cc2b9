#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qblocks {

using Exponent = std::vector<long>;

/// Checked int64 helpers; overflow throws DomainError.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Laurent polynomial in a fixed number of variables with int64
/// coefficients. Zero coefficients are never stored.
class LaurentPoly {
 public:
  explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}
  static LaurentPoly monomial(const Exponent& e, std::int64_t c = 1);
  static LaurentPoly constant(int nvars, std::int64_t c);
  /// x_i (0-based).
  static LaurentPoly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  const std::map<Exponent, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, std::int64_t c);
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly scaled(std::int64_t c) const;
  LaurentPoly shifted(const Exponent& e) const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Exact quotient by (x_i - x_j); throws DomainError when not divisible.
  LaurentPoly divide_by_difference(int i, int j) const;
  /// Swaps variables i and j.
  LaurentPoly swapped(int i, int j) const;

  std::string str() const;

 private:
  int nvars_;
  std::map<Exponent, std::int64_t> terms_;
};

}  // namespace qblocks
