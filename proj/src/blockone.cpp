#include "qblocks/blockone.hpp"

#include <algorithm>
#include <stdexcept>

#include "qblocks/errors.hpp"

namespace qblocks {

namespace {

void require_generic(const Scalar& s) {
  if (coset_class(s).kind != CosetKind::Irr) {
    throw DomainError("s = " + s.str() + " lies in Z/2; atypicality-one charts need s outside Z/2");
  }
}

void require_dominant(const Weight& lambda, const Scalar& s, int ell) {
  if (!is_dominant(lambda, s, ell)) {
    throw DomainError("weight " + lambda.str() + " is not dominant in Lambda+_{(" + s.str() + ")^" +
                      std::to_string(ell) + "}(" + std::to_string(lambda.n()) + ")");
  }
}

bool groups_distinct(const Weight& mu, int ell) {
  for (int i = 0; i < mu.n(); ++i) {
    for (int j = i + 1; j < mu.n(); ++j) {
      if ((i < ell) == (j < ell) && mu[static_cast<std::size_t>(i)] == mu[static_cast<std::size_t>(j)]) {
        return false;
      }
    }
  }
  return true;
}

Weight sort_groups(const Weight& mu, int ell) {
  std::vector<Scalar> c = mu.coords();
  auto desc = [](const Scalar& a, const Scalar& b) {
    const auto ord = compare_values(a, b);
    return ord && *ord == std::strong_ordering::greater;
  };
  std::sort(c.begin(), c.begin() + ell, desc);
  std::sort(c.begin() + ell, c.end(), desc);
  return Weight(c);
}

LambdaStep search(const Weight& lambda, const Scalar& s, int ell, int direction) {
  const Root alpha = atypical_root(lambda, s, ell);
  const Weight a = alpha.as_weight(lambda.n());
  for (long k = 1; k <= lambda.n() + 1; ++k) {
    const Weight mu = lambda + a.scaled(Rational(direction * k));
    if (groups_distinct(mu, ell)) return {sort_groups(mu, ell), k};
  }
  throw std::logic_error("no dominant shift of " + lambda.str() + " along " + alpha.str());
}

}  // namespace

Root atypical_root(const Weight& lambda, const Scalar& s, int ell) {
  require_generic(s);
  require_dominant(lambda, s, ell);
  const int degree = atypicality(lambda);
  if (degree != 1) {
    throw DomainError("weight " + lambda.str() + " has atypicality " + std::to_string(degree) +
                      ", expected 1");
  }
  for (int p = 1; p <= ell; ++p) {
    for (int q = ell + 1; q <= lambda.n(); ++q) {
      if (bar_pairing(lambda, {p, q}).is_zero()) return {p, q};
    }
  }
  throw std::logic_error("atypical pair not found across the groups of " + lambda.str());
}

LambdaStep lambda_minus_step(const Weight& lambda, const Scalar& s, int ell) {
  return search(lambda, s, ell, -1);
}

Weight lambda_minus(const Weight& lambda, const Scalar& s, int ell) {
  return lambda_minus_step(lambda, s, ell).weight;
}

LambdaStep lambda_plus_step(const Weight& lambda, const Scalar& s, int ell) {
  LambdaStep step = search(lambda, s, ell, +1);
  const Weight back = lambda_minus(step.weight, s, ell);
  if (!(back == lambda)) {
    throw DomainError("lambda+ verification failed: candidate " + step.weight.str() + " has lambda- " +
                      back.str() + " instead of " + lambda.str());
  }
  return step;
}

Weight lambda_plus(const Weight& lambda, const Scalar& s, int ell) {
  return lambda_plus_step(lambda, s, ell).weight;
}

bool BlockChart::is_boundary(int i) const {
  return std::find(boundary.begin(), boundary.end(), i) != boundary.end();
}

std::vector<std::vector<int>> transpose_product(const std::vector<std::vector<int>>& d) {
  const std::size_t rows = d.size();
  const std::size_t cols = rows ? d[0].size() : 0;
  std::vector<std::vector<int>> c(cols, std::vector<int>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      for (std::size_t r = 0; r < rows; ++r) c[i][j] += d[r][i] * d[r][j];
    }
  }
  return c;
}

BlockChart block_chart(const Weight& lambda, const Scalar& s, int ell, int window) {
  if (window < 0) throw DomainError("window must be >= 0");
  atypical_root(lambda, s, ell);
  BlockChart chart;
  chart.center = lambda;
  chart.s = s;
  chart.ell = ell;
  chart.window = window;
  const auto size = static_cast<std::size_t>(2 * window + 1);
  chart.weights.assign(size, lambda);
  for (int i = 1; i <= window; ++i) {
    chart.weights[static_cast<std::size_t>(window + i)] = lambda_plus(chart.at(i - 1), s, ell);
    chart.weights[static_cast<std::size_t>(window - i)] = lambda_minus(chart.at(-i + 1), s, ell);
  }
  for (int i = -window; i < window; ++i) {
    if (!(lambda_plus(chart.at(i), s, ell) == chart.at(i + 1)) ||
        !(lambda_minus(chart.at(i + 1), s, ell) == chart.at(i))) {
      throw std::logic_error("chart weights are not linked by lambda+/lambda- at " + std::to_string(i));
    }
  }

  chart.D.assign(size, std::vector<int>(size, 0));
  for (std::size_t r = 0; r < size; ++r) {
    chart.D[r][r] = 1;
    if (r > 0) chart.D[r][r - 1] = 1;
  }
  chart.C = transpose_product(chart.D);
  for (int i = -window; i < window; ++i) chart.edges.emplace_back(i, i + 1);
  chart.boundary.push_back(-window);
  if (window > 0) chart.boundary.push_back(window);
  return chart;
}

bool pi_split(int n) {
  if (n < 1) throw DomainError("n must be >= 1");
  return n % 2 == 0;
}

Parity tau_parity(int n) {
  if (n < 1 || n % 2 != 0) throw DomainError("tau parity is defined for even n only, got n = " + std::to_string(n));
  return n % 4 == 2 ? Parity::Pi : Parity::Identity;
}

std::string_view parity_name(Parity p) { return p == Parity::Pi ? "Pi" : "id"; }

std::vector<long> gl_rho(int n, int ell) {
  std::vector<long> rho(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) rho[static_cast<std::size_t>(i - 1)] = i <= ell ? -(ell - i + 1) : i - ell;
  return rho;
}

GlWeight to_gl(const Weight& lambda, const Scalar& s, int ell) {
  if (!is_in_lambda(lambda, s, ell)) {
    throw DomainError("weight " + lambda.str() + " is not in Lambda_{(" + s.str() + ")^" + std::to_string(ell) + "}(" +
                      std::to_string(lambda.n()) + ")");
  }
  GlWeight nu{ell, {}};
  const auto rho = gl_rho(lambda.n(), ell);
  for (int i = 0; i < lambda.n(); ++i) {
    const Scalar& c = lambda[static_cast<std::size_t>(i)];
    const long v = *(i < ell ? c - s : c + s).to_integer();
    nu.coords.push_back(v - rho[static_cast<std::size_t>(i)]);
  }
  return nu;
}

Weight from_gl(const GlWeight& nu, const Scalar& s) {
  if (nu.ell < 0 || nu.ell > nu.n() || nu.n() == 0) throw DomainError("invalid gl weight shape");
  const auto rho = gl_rho(nu.n(), nu.ell);
  std::vector<Scalar> coords;
  for (int i = 0; i < nu.n(); ++i) {
    const Scalar shifted(nu.coords[static_cast<std::size_t>(i)] + rho[static_cast<std::size_t>(i)]);
    coords.push_back(i < nu.ell ? shifted + s : shifted - s);
  }
  return Weight(coords);
}

WtVector gl_wt(const GlWeight& nu) {
  const auto rho = gl_rho(nu.n(), nu.ell);
  WtVector out;
  for (int i = 0; i < nu.n(); ++i) {
    const long v = nu.coords[static_cast<std::size_t>(i)] + rho[static_cast<std::size_t>(i)];
    if (i < nu.ell) {
      out.add(v, 1);
    } else {
      out.add(-v, -1);
    }
  }
  return out;
}

bool gl_linked(const GlWeight& a, const GlWeight& b) {
  if (a.n() != b.n() || a.ell != b.ell) return false;
  long sum = 0;
  for (int i = 0; i < a.n(); ++i) sum += b.coords[static_cast<std::size_t>(i)] - a.coords[static_cast<std::size_t>(i)];
  return sum == 0 && gl_wt(a) == gl_wt(b);
}

int gl_atypicality(const GlWeight& nu) {
  const auto rho = gl_rho(nu.n(), nu.ell);
  std::map<long, int> first, second;
  for (int i = 0; i < nu.n(); ++i) {
    const long v = nu.coords[static_cast<std::size_t>(i)] + rho[static_cast<std::size_t>(i)];
    ++(i < nu.ell ? first : second)[v];
  }
  int matched = 0;
  for (const auto& [v, count] : first) {
    if (auto it = second.find(-v); it != second.end()) matched += std::min(count, it->second);
  }
  return matched;
}

}  // namespace qblocks
