#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qblocks {

using Rational = mpq_class;

/// Exact element of Q + sum_j Q*sigma_j, where the sigma_j are formal symbols
/// assumed linearly independent over Q together with 1 (and sigma_j, 2 sigma_j
/// never rational). Zero coefficients are never stored, so equality is
/// structural.
///
/// Text form: `p/q` optionally followed by `+sym*r/s` terms in symbol order,
/// e.g. `3/2`, `0+pi*1`, `-1+pi*-1`. `str()` emits exactly this form and
/// `parse(str())` reproduces the value.
class Scalar {
 public:
  using IrrationalPart = std::map<std::string, Rational>;

  Scalar() = default;
  Scalar(long value) : rational_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(Rational value);
  Scalar(Rational rational, IrrationalPart irrational);

  static Scalar symbol(const std::string& name, const Rational& coefficient = 1);
  static Scalar parse(std::string_view text);

  const Rational& rational_part() const { return rational_; }
  const IrrationalPart& irrational_part() const { return irrational_; }

  bool is_rational() const { return irrational_.empty(); }
  bool is_zero() const { return irrational_.empty() && sgn(rational_) == 0; }
  bool is_integer() const;
  /// The value as a machine integer; nullopt unless is_integer() and it fits.
  std::optional<long> to_integer() const;

  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar scaled(const Rational& factor) const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Structural total order (rational part, then irrational terms); only
  /// meaningful as a container key. Use compare_values() for magnitudes.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  void canonicalize();

  Rational rational_{0};
  IrrationalPart irrational_;
};

bool is_integer(const Scalar& a);

/// Orders a and b by value when a - b is rational; nullopt otherwise
/// (differences involving symbols are incomparable).
std::optional<std::strong_ordering> compare_values(const Scalar& a, const Scalar& b);

/// Integer floor of the rational part.
long floor_rational(const Rational& q);

enum class CosetKind { Int, Half, Irr };

/// Class of a Scalar in C/Z. The representative has rational part in [0, 1).
/// `positive` marks the distinguished member of the pair {c, -c}: INT and HALF
/// are self-paired and always positive; an IRR class is positive when its
/// leading symbol coefficient is positive, or, for a purely rational class,
/// when its representative lies in (0, 1/2).
struct CosetClass {
  CosetKind kind = CosetKind::Int;
  Scalar representative;
  bool positive = true;

  CosetClass paired() const;
  std::string label() const;

  friend bool operator==(const CosetClass& a, const CosetClass& b) {
    return a.kind == b.kind && a.representative == b.representative;
  }
  friend std::strong_ordering operator<=>(const CosetClass& a, const CosetClass& b) {
    if (a.kind != b.kind) return a.kind <=> b.kind;
    return a.representative <=> b.representative;
  }
};

CosetClass coset_class(const Scalar& a);

std::string_view kind_name(CosetKind kind);

}  // namespace qblocks
