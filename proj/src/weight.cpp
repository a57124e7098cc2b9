#include "qblocks/weight.hpp"

#include <algorithm>
#include <map>

#include "qblocks/errors.hpp"

namespace qblocks {

Weight::Weight(std::vector<Scalar> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DomainError("weight must have n >= 1 coordinates");
}

Weight Weight::zero(int n) { return Weight(std::vector<Scalar>(static_cast<std::size_t>(n))); }

Weight Weight::unit(int n, int i) {
  Weight w = zero(n);
  w[static_cast<std::size_t>(i - 1)] = Scalar(1);
  return w;
}

std::string Weight::str() const {
  std::string out = "(";
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k) out += ", ";
    out += coords_[k].str();
  }
  return out + ")";
}

Weight& Weight::operator+=(const Weight& other) {
  if (n() != other.n()) throw DomainError("weight size mismatch");
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += other.coords_[k];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (n() != other.n()) throw DomainError("weight size mismatch");
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= other.coords_[k];
  return *this;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

Weight Weight::scaled(const Rational& factor) const {
  Weight r = *this;
  for (auto& c : r.coords_) c = c.scaled(factor);
  return r;
}

Weight Root::as_weight(int n) const {
  check_root(*this, n);
  Weight w = Weight::zero(n);
  w[static_cast<std::size_t>(i - 1)] = Scalar(1);
  w[static_cast<std::size_t>(j - 1)] = Scalar(-1);
  return w;
}

std::string Root::str() const { return "e" + std::to_string(i) + "-e" + std::to_string(j); }

void check_root(const Root& alpha, int n) {
  if (alpha.i < 1 || alpha.j < 1 || alpha.i > n || alpha.j > n || alpha.i == alpha.j) {
    throw DomainError("invalid root " + alpha.str() + " for n=" + std::to_string(n));
  }
}

Scalar pairing(const Weight& lambda, const Root& alpha) {
  check_root(alpha, lambda.n());
  return lambda[static_cast<std::size_t>(alpha.i - 1)] - lambda[static_cast<std::size_t>(alpha.j - 1)];
}

Scalar bar_pairing(const Weight& lambda, const Root& alpha) {
  check_root(alpha, lambda.n());
  return lambda[static_cast<std::size_t>(alpha.i - 1)] + lambda[static_cast<std::size_t>(alpha.j - 1)];
}

EllDelta ell_delta(const Weight& lambda) {
  const auto ell = static_cast<int>(
      std::count_if(lambda.coords().begin(), lambda.coords().end(),
                    [](const Scalar& c) { return !c.is_zero(); }));
  return {ell, ell % 2};
}

long clifford_dimension(int ell) { return 1L << ((ell + 1) / 2); }

bool is_permutation(const Permutation& w, int n) {
  if (static_cast<int>(w.size()) != n) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : w) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

Permutation identity_permutation(int n) {
  Permutation w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return w;
}

Weight weyl_apply(const Permutation& w, const Weight& lambda) {
  if (!is_permutation(w, lambda.n())) throw DomainError("not a permutation of 1..n");
  Weight out = lambda;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[static_cast<std::size_t>(w[i] - 1)] = lambda[i];
  }
  return out;
}

std::string_view move_kind_name(MoveKind kind) {
  return kind == MoveKind::Typical ? "typical" : "atypical";
}

std::pair<Weight, MoveKind> star_action(const Root& alpha, const Weight& lambda) {
  check_root(alpha, lambda.n());
  if (!alpha.simple()) {
    throw DomainError("star action needs a simple root, got " + alpha.str());
  }
  const auto i = static_cast<std::size_t>(alpha.i - 1);
  Weight out = lambda;
  std::swap(out[i], out[i + 1]);
  if (!bar_pairing(lambda, alpha).is_zero()) return {out, MoveKind::Typical};
  out[i] -= Scalar(1);
  out[i + 1] += Scalar(1);
  return {out, MoveKind::Atypical};
}

std::vector<int> ClassSignature::members(int cls, int sign) const {
  std::vector<int> out;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k].cls == cls && labels[k].sign == sign) out.push_back(static_cast<int>(k) + 1);
  }
  return out;
}

ClassSignature class_signature(const Weight& lambda) {
  ClassSignature sig;
  struct Raw {
    CosetClass positive_class;
    int sign;
  };
  std::vector<Raw> raw;
  raw.reserve(lambda.coords().size());
  for (const auto& c : lambda.coords()) {
    const CosetClass cls = coset_class(c);
    int sign = 1;
    CosetClass pos = cls;
    if (cls.kind == CosetKind::Irr && !cls.positive) {
      pos = cls.paired();
      sign = -1;
    } else if (cls.kind == CosetKind::Half) {
      sign = sgn(c.rational_part()) > 0 ? 1 : -1;
    }
    raw.push_back({pos, sign});
  }

  auto add_class = [&](const CosetClass& c) {
    for (std::size_t k = 0; k < sig.classes.size(); ++k) {
      if (sig.classes[k] == c) return;
    }
    sig.classes.push_back(c);
  };
  for (auto kind : {CosetKind::Int, CosetKind::Half}) {
    for (const auto& r : raw) {
      if (r.positive_class.kind == kind) {
        add_class(r.positive_class);
        break;
      }
    }
  }
  for (const auto& r : raw) {
    if (r.positive_class.kind == CosetKind::Irr) add_class(r.positive_class);
  }
  for (const auto& r : raw) {
    const auto it = std::find(sig.classes.begin(), sig.classes.end(), r.positive_class);
    sig.labels.push_back({static_cast<int>(it - sig.classes.begin()), r.sign});
  }
  return sig;
}

bool is_in_lambda(const Weight& lambda, const Scalar& s, int ell) {
  if (ell < 0 || ell > lambda.n()) return false;
  for (int i = 0; i < lambda.n(); ++i) {
    const Scalar& c = lambda[static_cast<std::size_t>(i)];
    const Scalar shifted = i < ell ? c - s : c + s;
    if (!shifted.is_integer()) return false;
  }
  return true;
}

bool is_dominant(const Weight& lambda, const Scalar& s, int ell) {
  if (!is_in_lambda(lambda, s, ell)) return false;
  for (int i = 0; i + 1 < lambda.n(); ++i) {
    if (i + 1 == ell) continue;  // the two groups are not compared
    const auto ord = compare_values(lambda[static_cast<std::size_t>(i)],
                                    lambda[static_cast<std::size_t>(i + 1)]);
    if (!ord || *ord != std::strong_ordering::greater) return false;
  }
  return true;
}

}  // namespace qblocks
