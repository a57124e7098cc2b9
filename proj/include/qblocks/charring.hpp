#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qblocks/linkage.hpp"
#include "qblocks/poly.hpp"
#include "qblocks/weight.hpp"

namespace qblocks {

/// mu - anchor as an integer vector.
using Offset = std::vector<long>;

/// Depth of characters that are exact polynomials.
inline constexpr long kExact = std::numeric_limits<long>::max();

/// Height of anchor - mu = sum_k c_k (eps_k - eps_{k+1}) given the offset
/// mu - anchor: sum of c_k, or nullopt when some c_k < 0 or the offset does
/// not sum to zero.
std::optional<long> offset_height(const Offset& offset);
/// Height of a - b; nullopt when a - b is not in Z_{>=0} Phi+.
std::optional<long> weight_height(const Weight& a, const Weight& b);

/// Finite integer combination of e^mu below a fixed anchor, exact for every
/// mu at height <= depth and carrying nothing beyond it.
class FormalCharacter {
 public:
  FormalCharacter() = default;
  FormalCharacter(Weight anchor, long depth);
  static FormalCharacter monomial(const Weight& mu, std::int64_t c, long depth = kExact);

  int n() const { return anchor_.n(); }
  const Weight& anchor() const { return anchor_; }
  long depth() const { return depth_; }
  bool is_exact() const { return depth_ == kExact; }
  const std::map<Offset, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Drops terms above the depth; rejects weights not below the anchor.
  void add_term(const Weight& mu, std::int64_t c);
  void add_offset(const Offset& offset, std::int64_t c);
  std::int64_t coefficient(const Weight& mu) const;
  Weight weight_of(const Offset& offset) const;
  /// (weight, coefficient) pairs in lexicographic weight order.
  std::vector<std::pair<Weight, std::int64_t>> weighted_terms() const;

  /// Same series seen from a higher anchor; the depth grows by the height
  /// of the shift.
  FormalCharacter rebased(const Weight& new_anchor) const;
  FormalCharacter truncated(long depth) const;
  FormalCharacter scaled(std::int64_t c) const;

  FormalCharacter& operator+=(const FormalCharacter& other);
  FormalCharacter& operator-=(const FormalCharacter& other);
  friend FormalCharacter operator+(FormalCharacter a, const FormalCharacter& b) { return a += b; }
  friend FormalCharacter operator-(FormalCharacter a, const FormalCharacter& b) { return a -= b; }
  friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;

  std::string str() const;

 private:
  Weight anchor_;
  long depth_ = kExact;
  std::map<Offset, std::int64_t> terms_;
};

/// Product truncated at the smaller depth. Parallel over the left support.
FormalCharacter multiply(const FormalCharacter& a, const FormalCharacter& b);
/// Serial reference of multiply.
FormalCharacter multiply_serial(const FormalCharacter& a, const FormalCharacter& b);

/// Exact monomial-sum of one positive root factor (1 + e^-a)/(1 - e^-a) =
/// 1 + 2 e^-a + 2 e^-2a + ..., truncated at the given depth.
FormalCharacter root_factor(int n, const Root& alpha, long depth);

/// 2^{ceil(l(lambda)/2)} e^lambda prod_{alpha > 0} (1 + e^-alpha)/(1 - e^-alpha).
FormalCharacter verma_character(const Weight& lambda, long depth);

enum class LeviRoute { Alternant, SchurProduct };

/// Character of the typical simple module of q(ell) x q(n - ell) with
/// highest weight zeta: 2^{ceil(n/2)} prod over the two groups of
/// Delta+ a_zeta / Delta. Exact polynomial.
FormalCharacter levi_typical_character(const Weight& zeta, int ell,
                                       LeviRoute route = LeviRoute::Alternant);

/// Levi character times the cross factors for i <= ell < j.
FormalCharacter parabolic_verma_character(const Weight& zeta, int ell, long depth);

/// lambda ->_a mu.
bool arrow_a(const Weight& lambda, const Weight& mu, long a, const Scalar& s, int ell);

enum class TranslationKind { E, F };
TranslationKind parse_translation_kind(std::string_view text);

/// Anchor of translate_char and the tensor product: zeta + eps_1 for F,
/// zeta - eps_n for E.
Weight translation_anchor(TranslationKind kind, const Weight& zeta);

/// ch F_a K(zeta) = 2 sum_{zeta ->_a mu} ch K(mu), ch E_a K(zeta) =
/// 2 sum_{mu ->_a zeta} ch K(mu), at the given depth below translation_anchor.
FormalCharacter translate_char(TranslationKind kind, long a, const Weight& zeta, const Scalar& s,
                               int ell, long depth);

struct FlagTerm {
  Weight mu;
  std::int64_t multiplicity = 0;
  WtVector label;
};

struct TranslationCheck {
  bool ok = false;
  std::string detail;
  std::vector<FlagTerm> flags;  // parabolic Verma flag of K(zeta) (x) V or V*
  FormalCharacter projected;
  FormalCharacter expected;
};

/// Expands ch K(zeta) * 2 sum e^{+-eps_i}, splits it into a parabolic
/// Verma flag, keeps the summands whose wt label is gamma -+ (eps_a -
/// eps_{a+1}) and compares with translate_char.
TranslationCheck tensor_project_verify(const Weight& zeta, const Scalar& s, int ell, long a,
                                       TranslationKind kind, long depth);

}  // namespace qblocks
