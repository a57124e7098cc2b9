#pragma once

#include <map>
#include <string>
#include <vector>

#include "qblocks/blockone.hpp"
#include "qblocks/linalg.hpp"

namespace qblocks {

enum class ZigzagKind { E, Z, X, Y };

/// E(i), Z(i): paths i -> i; X(i): i -> i+1; Y(i): i+1 -> i.
struct ZigzagBasisId {
  ZigzagKind kind = ZigzagKind::E;
  int index = 0;
  std::string str() const;  // "E0", "X-1", ...
  friend bool operator==(const ZigzagBasisId&, const ZigzagBasisId&) = default;
  friend auto operator<=>(const ZigzagBasisId&, const ZigzagBasisId&) = default;
};

ZigzagBasisId parse_basis_id(std::string_view text);

class ZigzagElement {
 public:
  ZigzagElement() = default;
  ZigzagElement(const ZigzagBasisId& id, Rational c = 1);

  const std::map<ZigzagBasisId, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const ZigzagBasisId& id, const Rational& c);
  ZigzagElement& operator+=(const ZigzagElement& other);
  friend ZigzagElement operator+(ZigzagElement a, const ZigzagElement& b) { return a += b; }
  ZigzagElement scaled(const Rational& c) const;
  friend bool operator==(const ZigzagElement&, const ZigzagElement&) = default;
  std::string str() const;

 private:
  std::map<ZigzagBasisId, Rational> terms_;
};

struct RadicalSeries {
  std::vector<Subspace> powers;  // rad, rad^2, rad^3, ... down to the zero space
  int loewy_length = 0;          // smallest k with rad^k = 0
  int semisimple_quotient_dim = 0;
  bool quotient_is_split = false;  // images of E(i) are orthogonal idempotents spanning A/rad
};

struct SubmoduleReport {
  int vertex = 0;
  bool boundary = false;
  std::vector<std::vector<ZigzagBasisId>> proper;  // proper nonzero submodules of A E(i)
  bool complete = false;       // every submodule is spanned by basis paths
  std::vector<ZigzagBasisId> socle;
  std::vector<ZigzagBasisId> rad_squared;
  std::vector<int> rad_top_vertices;  // vertices of rad/rad^2
  std::string note;
};

/// Truncation of the zigzag algebra to vertices -N..N, with
/// multiplication "u * v = first v, then u" and relations
/// x_i y_i = z_{i+1}, y_i x_i = z_i, all other length-two products zero.
class ZigzagAlgebra {
 public:
  /// flip_relation is a test hook: it rewrites x_i y_i to z_i instead.
  explicit ZigzagAlgebra(int window, bool flip_relation = false);

  int window() const { return window_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<ZigzagBasisId>& basis() const { return basis_; }
  int position(const ZigzagBasisId& id) const;
  bool contains(const ZigzagBasisId& id) const;

  int source(const ZigzagBasisId& id) const;
  int target(const ZigzagBasisId& id) const;

  ZigzagElement multiply(const ZigzagBasisId& u, const ZigzagBasisId& v) const;
  ZigzagElement multiply(const ZigzagElement& u, const ZigzagElement& v) const;
  ZigzagElement one() const;

  RationalVector to_vector(const ZigzagElement& e) const;
  ZigzagElement from_vector(const RationalVector& v) const;

  /// "u*v = w" lines for every nonzero product of basis paths.
  std::vector<std::string> table() const;

  /// Triples (a, b, c) of basis paths with (ab)c != a(bc), as text.
  std::vector<std::string> associativity_failures(std::size_t limit = 10) const;
  /// Named relations x_i y_i = z_{i+1}, y_i x_i = z_i and the quiver typing.
  std::vector<std::string> relation_failures() const;

  /// Two-sided ideal generated by the arrows, and its powers.
  RadicalSeries radical_series() const;
  /// dim E(j) A E(i).
  int hom_dim(int i, int j) const;
  SubmoduleReport projective_submodules(int i) const;

 private:
  Subspace span_products(const Subspace& left, const Subspace& right) const;
  bool is_left_submodule(const std::vector<ZigzagBasisId>& ids) const;

  int window_;
  bool flip_;
  std::vector<ZigzagBasisId> basis_;
  std::map<ZigzagBasisId, int> index_;
};

struct ChartCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ChartComparison {
  std::vector<ChartCheck> checks;
  std::vector<std::string> notes;
  bool passed() const;
};

/// Interior Cartan rows, quiver adjacency, the relation pattern and C = D^T D.
ChartComparison compare_with_chart(const ZigzagAlgebra& algebra, const BlockChart& chart);

}  // namespace qblocks
