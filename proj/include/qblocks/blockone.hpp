#pragma once

#include <string>
#include <vector>

#include "qblocks/linkage.hpp"
#include "qblocks/weight.hpp"

namespace qblocks {

/// The unique cross pair p <= ell < q with lambda_p + lambda_q = 0 of an
/// atypicality-one dominant weight, as the root eps_p - eps_q.
Root atypical_root(const Weight& lambda, const Scalar& s, int ell);

struct LambdaStep {
  Weight weight;
  long k = 0;
};

/// Smallest k >= 1 with lambda - k alpha W-conjugate to a dominant weight,
/// together with that dominant weight.
LambdaStep lambda_minus_step(const Weight& lambda, const Scalar& s, int ell);
Weight lambda_minus(const Weight& lambda, const Scalar& s, int ell);
/// Mirrored search in the +alpha direction, verified through lambda_minus.
LambdaStep lambda_plus_step(const Weight& lambda, const Scalar& s, int ell);
Weight lambda_plus(const Weight& lambda, const Scalar& s, int ell);

struct BlockChart {
  Weight center;
  Scalar s;
  int ell = 0;
  int window = 0;
  std::vector<Weight> weights;                // lambda^{-N} .. lambda^{N}
  std::vector<std::vector<int>> D;            // rows K(lambda^i), columns L(lambda^j)
  std::vector<std::vector<int>> C;            // D^T D
  std::vector<std::pair<int, int>> edges;     // (i, i+1) in window coordinates
  std::vector<int> boundary;                  // window coordinates whose rows are truncated

  const Weight& at(int i) const { return weights[static_cast<std::size_t>(i + window)]; }
  int cartan(int i, int j) const {
    return C[static_cast<std::size_t>(i + window)][static_cast<std::size_t>(j + window)];
  }
  bool is_boundary(int i) const;
};

BlockChart block_chart(const Weight& lambda, const Scalar& s, int ell, int window);

std::vector<std::vector<int>> transpose_product(const std::vector<std::vector<int>>& d);

/// lambda and Pi lambda lie in different blocks iff n is even.
bool pi_split(int n);
enum class Parity { Identity, Pi };
/// Pi if n = 2 mod 4, identity if n = 0 mod 4; odd n is rejected.
Parity tau_parity(int n);
std::string_view parity_name(Parity p);

struct GlWeight {
  int ell = 0;
  std::vector<long> coords;
  int n() const { return static_cast<int>(coords.size()); }
  friend bool operator==(const GlWeight&, const GlWeight&) = default;
};

/// (-ell, ..., -1, 1, ..., n - ell).
std::vector<long> gl_rho(int n, int ell);

GlWeight to_gl(const Weight& lambda, const Scalar& s, int ell);
Weight from_gl(const GlWeight& nu, const Scalar& s);

WtVector gl_wt(const GlWeight& nu);
bool gl_linked(const GlWeight& a, const GlWeight& b);
int gl_atypicality(const GlWeight& nu);

}  // namespace qblocks
