#pragma once

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qblocks/coord.hpp"

namespace qblocks {

/// Weight of q(n): coefficients of eps_1..eps_n in h0*.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Scalar> coords);
  Weight(std::initializer_list<Scalar> coords) : Weight(std::vector<Scalar>(coords)) {}

  static Weight zero(int n);
  /// eps_i (1-based).
  static Weight unit(int n, int i);

  int n() const { return static_cast<int>(coords_.size()); }
  const std::vector<Scalar>& coords() const { return coords_; }
  /// 0-based access.
  const Scalar& operator[](std::size_t k) const { return coords_[k]; }
  Scalar& operator[](std::size_t k) { return coords_[k]; }

  std::string str() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const;
  Weight scaled(const Rational& factor) const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(),
                                                  b.coords_.begin(), b.coords_.end());
  }

 private:
  std::vector<Scalar> coords_;
};

/// eps_i - eps_j with 1-based i != j.
struct Root {
  int i = 1;
  int j = 2;

  bool positive() const { return i < j; }
  bool simple() const { return j == i + 1; }
  Weight as_weight(int n) const;
  std::string str() const;

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

void check_root(const Root& alpha, int n);

/// (lambda, alpha) = lambda_i - lambda_j.
Scalar pairing(const Weight& lambda, const Root& alpha);
/// (lambda, alpha-bar) = lambda_i + lambda_j.
Scalar bar_pairing(const Weight& lambda, const Root& alpha);

struct EllDelta {
  int ell = 0;
  int delta = 0;
  friend bool operator==(const EllDelta&, const EllDelta&) = default;
};
/// Number of nonzero coordinates and its parity.
EllDelta ell_delta(const Weight& lambda);
/// Dimension 2^ceil(ell/2) of the Clifford highest-weight space.
long clifford_dimension(int ell);

/// 1-based image list: w maps index i to w[i-1].
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& w, int n);
Permutation identity_permutation(int n);
/// (w lambda)_{w(i)} = lambda_i.
Weight weyl_apply(const Permutation& w, const Weight& lambda);

enum class MoveKind { Typical, Atypical };
std::string_view move_kind_name(MoveKind kind);

/// s_alpha * lambda for a simple root alpha: the plain reflection when
/// (lambda, alpha-bar) != 0, otherwise s_alpha lambda - alpha.
std::pair<Weight, MoveKind> star_action(const Root& alpha, const Weight& lambda);

/// Per-coordinate (paired class, sign) labels. Classes are listed INT first,
/// HALF second, then IRR classes by first occurrence. An IRR coordinate has
/// sign +1 when it lies in the positive member of its pair (see CosetClass);
/// INT coordinates are +1; a HALF coordinate takes the sign of its value.
struct ClassSignature {
  struct Label {
    int cls = 0;  // index into classes
    int sign = 1;
    friend bool operator==(const Label&, const Label&) = default;
  };
  std::vector<CosetClass> classes;  // positive members
  std::vector<Label> labels;

  /// 1-based coordinate indices of class c carrying the given sign.
  std::vector<int> members(int cls, int sign) const;
};

ClassSignature class_signature(const Weight& lambda);

/// lambda in Lambda_{s^ell}(n): first ell coordinates = s mod Z, the rest = -s.
bool is_in_lambda(const Weight& lambda, const Scalar& s, int ell);
/// Additionally strictly decreasing inside positions 1..ell and ell+1..n.
bool is_dominant(const Weight& lambda, const Scalar& s, int ell);

}  // namespace qblocks
