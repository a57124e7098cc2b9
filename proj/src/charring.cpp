#include "qblocks/charring.hpp"

#include <algorithm>

#include <omp.h>

#include "qblocks/errors.hpp"
#include "qblocks/schur.hpp"

namespace qblocks {

namespace {

Offset integer_difference(const Weight& mu, const Weight& anchor) {
  if (mu.n() != anchor.n()) throw DomainError("weight size mismatch in character");
  Offset out(static_cast<std::size_t>(mu.n()));
  for (std::size_t k = 0; k < out.size(); ++k) {
    const auto v = (mu[k] - anchor[k]).to_integer();
    if (!v) {
      throw DomainError("weight " + mu.str() + " is not in anchor " + anchor.str() + " + Z^n");
    }
    out[k] = *v;
  }
  return out;
}

long add_depth(long depth, long h) { return depth == kExact ? kExact : depth + h; }

std::vector<Offset> group_offsets(const Weight& zeta, const std::vector<int>& idx,
                                  LeviRoute route, std::vector<std::int64_t>& coefs) {
  const int m = static_cast<int>(idx.size());
  std::vector<long> e(idx.size());
  const Scalar& base = zeta[static_cast<std::size_t>(idx.back())];
  for (std::size_t k = 0; k < idx.size(); ++k) {
    e[k] = *(zeta[static_cast<std::size_t>(idx[k])] - base).to_integer();
  }
  LaurentPoly p(m);
  if (route == LeviRoute::Alternant) {
    LaurentPoly dplus = LaurentPoly::constant(m, 1);
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        dplus = dplus * (LaurentPoly::variable(m, a) + LaurentPoly::variable(m, b));
      }
    }
    p = dplus * alternant(e);
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) p = p.divide_by_difference(a, b);
    }
  } else {
    const auto delta = rho_vector(m);
    std::vector<long> shifted(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) shifted[k] = e[k] - delta[k];
    p = schur_jt(delta, m) * schur_jt(shifted, m);
  }
  std::vector<Offset> out;
  coefs.clear();
  for (const auto& [x, c] : p.terms()) {
    Offset off(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) off[k] = x[k] - e[k];
    out.push_back(off);
    coefs.push_back(c);
  }
  return out;
}

void require_levi_dominant(const Weight& zeta, int ell) {
  if (ell < 0 || ell > zeta.n()) {
    throw DomainError("ell = " + std::to_string(ell) + " out of range 0.." + std::to_string(zeta.n()));
  }
  for (int i = 0; i + 1 < zeta.n(); ++i) {
    if (i + 1 == ell) continue;
    const auto ord = compare_values(zeta[static_cast<std::size_t>(i)], zeta[static_cast<std::size_t>(i + 1)]);
    if (!ord || *ord != std::strong_ordering::greater) {
      throw DomainError("weight " + zeta.str() + " is not strictly decreasing with integer steps in its ell=" +
                        std::to_string(ell) + " groups");
    }
  }
  for (int lo : {0, ell}) {
    const int hi = lo == 0 ? ell : zeta.n();
    for (int i = lo; i < hi; ++i) {
      for (int j = i + 1; j < hi; ++j) {
        if (bar_pairing(zeta, {i + 1, j + 1}).is_zero()) {
          throw DomainError("weight " + zeta.str() + " is not typical for the Levi factor: coordinates " +
                            std::to_string(i + 1) + " and " + std::to_string(j + 1) + " sum to 0");
        }
      }
    }
  }
}

}  // namespace

std::optional<long> offset_height(const Offset& offset) {
  long partial = 0;
  long height = 0;
  for (std::size_t k = 0; k + 1 < offset.size(); ++k) {
    partial += offset[k];
    if (partial > 0) return std::nullopt;
    height -= partial;
  }
  if (!offset.empty()) partial += offset.back();
  if (partial != 0) return std::nullopt;
  return height;
}

std::optional<long> weight_height(const Weight& a, const Weight& b) {
  if (a.n() != b.n()) return std::nullopt;
  Offset off(static_cast<std::size_t>(a.n()));
  for (std::size_t k = 0; k < off.size(); ++k) {
    const auto v = (b[k] - a[k]).to_integer();
    if (!v) return std::nullopt;
    off[k] = *v;
  }
  return offset_height(off);
}

FormalCharacter::FormalCharacter(Weight anchor, long depth) : anchor_(std::move(anchor)), depth_(depth) {
  if (depth_ < 0) throw DomainError("character depth must be >= 0");
}

FormalCharacter FormalCharacter::monomial(const Weight& mu, std::int64_t c, long depth) {
  FormalCharacter f(mu, depth);
  f.add_term(mu, c);
  return f;
}

void FormalCharacter::add_offset(const Offset& offset, std::int64_t c) {
  const auto h = offset_height(offset);
  if (!h) throw DomainError("term " + weight_of(offset).str() + " is not below anchor " + anchor_.str());
  if (*h > depth_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(offset, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

void FormalCharacter::add_term(const Weight& mu, std::int64_t c) {
  add_offset(integer_difference(mu, anchor_), c);
}

std::int64_t FormalCharacter::coefficient(const Weight& mu) const {
  const auto it = terms_.find(integer_difference(mu, anchor_));
  return it == terms_.end() ? 0 : it->second;
}

Weight FormalCharacter::weight_of(const Offset& offset) const {
  Weight mu = anchor_;
  for (std::size_t k = 0; k < offset.size(); ++k) mu[k] += Scalar(offset[k]);
  return mu;
}

std::vector<std::pair<Weight, std::int64_t>> FormalCharacter::weighted_terms() const {
  std::vector<std::pair<Weight, std::int64_t>> out;
  for (const auto& [off, c] : terms_) out.emplace_back(weight_of(off), c);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.first.str() < y.first.str();
  });
  return out;
}

FormalCharacter FormalCharacter::rebased(const Weight& new_anchor) const {
  const auto h = weight_height(new_anchor, anchor_);
  if (!h) {
    throw DomainError("cannot rebase: " + new_anchor.str() + " is not above " + anchor_.str());
  }
  const Offset shift = integer_difference(anchor_, new_anchor);
  FormalCharacter out(new_anchor, add_depth(depth_, *h));
  for (const auto& [off, c] : terms_) {
    Offset o = off;
    for (std::size_t k = 0; k < o.size(); ++k) o[k] += shift[k];
    out.terms_.emplace(std::move(o), c);
  }
  return out;
}

FormalCharacter FormalCharacter::truncated(long depth) const {
  FormalCharacter out(anchor_, std::min(depth, depth_));
  for (const auto& [off, c] : terms_) {
    if (*offset_height(off) <= out.depth_) out.terms_.emplace(off, c);
  }
  return out;
}

FormalCharacter FormalCharacter::scaled(std::int64_t c) const {
  FormalCharacter out(anchor_, depth_);
  if (c == 0) return out;
  for (const auto& [off, v] : terms_) out.terms_.emplace(off, checked_mul(v, c));
  return out;
}

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& other) {
  if (anchor_.n() == 0) return *this = other;
  if (other.anchor_.n() == 0) return *this;
  if (!(anchor_ == other.anchor_)) {
    const Offset d = integer_difference(other.anchor_, anchor_);
    Offset v(d.size(), 0);
    long partial = 0;
    long prev = 0;
    for (std::size_t k = 0; k + 1 < d.size(); ++k) {
      partial += d[k];
      const long vk = std::max(0L, partial);
      v[k] = vk - prev;
      prev = vk;
    }
    partial += d.back();
    if (partial != 0) throw DomainError("characters are not in the same root-lattice coset");
    v.back() = -prev;
    Weight join = anchor_;
    for (std::size_t k = 0; k < v.size(); ++k) join[k] += Scalar(v[k]);
    FormalCharacter a = rebased(join);
    FormalCharacter b = other.rebased(join);
    const long depth = std::min(a.depth_, b.depth_);
    *this = a.truncated(depth);
    return *this += b.truncated(depth);
  }
  if (other.depth_ < depth_) *this = truncated(other.depth_);
  for (const auto& [off, c] : other.terms_) add_offset(off, c);
  return *this;
}

FormalCharacter& FormalCharacter::operator-=(const FormalCharacter& other) {
  return *this += other.scaled(-1);
}

std::string FormalCharacter::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mu, c] : weighted_terms()) {
    if (!out.empty()) out += " + ";
    out += std::to_string(c) + "*e" + mu.str();
  }
  return out;
}

FormalCharacter multiply_serial(const FormalCharacter& a, const FormalCharacter& b) {
  FormalCharacter out(a.anchor() + b.anchor(), std::min(a.depth(), b.depth()));
  Offset sum(static_cast<std::size_t>(a.n()));
  for (const auto& [oa, ca] : a.terms()) {
    const long ha = *offset_height(oa);
    if (ha > out.depth()) continue;
    for (const auto& [ob, cb] : b.terms()) {
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = oa[k] + ob[k];
      out.add_offset(sum, checked_mul(ca, cb));
    }
  }
  return out;
}

FormalCharacter multiply(const FormalCharacter& a, const FormalCharacter& b) {
  const std::vector<std::pair<Offset, std::int64_t>> left(a.terms().begin(), a.terms().end());
  if (left.size() < 64) return multiply_serial(a, b);
  FormalCharacter out(a.anchor() + b.anchor(), std::min(a.depth(), b.depth()));
  const long depth = out.depth();
  const long count = static_cast<long>(left.size());
  std::vector<std::map<Offset, std::int64_t>> partial(static_cast<std::size_t>(omp_get_max_threads()));
  bool overflow = false;

#pragma omp parallel
  {
    auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
    Offset sum(static_cast<std::size_t>(a.n()));
#pragma omp for schedule(static)
    for (long t = 0; t < count; ++t) {
      const auto& [oa, ca] = left[static_cast<std::size_t>(t)];
      if (*offset_height(oa) > depth) continue;
      for (const auto& [ob, cb] : b.terms()) {
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = oa[k] + ob[k];
        if (*offset_height(sum) > depth) continue;
        std::int64_t prod;
        std::int64_t& slot = local[sum];
        if (__builtin_mul_overflow(ca, cb, &prod) || __builtin_add_overflow(slot, prod, &slot)) {
#pragma omp atomic write
          overflow = true;
        }
      }
    }
  }
  if (overflow) throw DomainError("int64 overflow in character product");
  for (const auto& local : partial) {
    for (const auto& [off, c] : local) out.add_offset(off, c);
  }
  return out;
}

FormalCharacter root_factor(int n, const Root& alpha, long depth) {
  check_root(alpha, n);
  if (!alpha.positive()) throw DomainError("root factor needs a positive root");
  if (depth == kExact) throw DomainError("root factor needs a finite depth");
  FormalCharacter f(Weight::zero(n), depth);
  const long step = alpha.j - alpha.i;
  const Weight a = alpha.as_weight(n);
  Weight mu = Weight::zero(n);
  for (long k = 0; k * step <= depth; ++k) {
    f.add_term(mu, k == 0 ? 1 : 2);
    mu -= a;
  }
  return f;
}

FormalCharacter verma_character(const Weight& lambda, long depth) {
  if (depth < 0 || depth == kExact) throw DomainError("Verma character needs a finite depth >= 0");
  const int n = lambda.n();
  FormalCharacter ch = FormalCharacter::monomial(lambda, clifford_dimension(ell_delta(lambda).ell), depth);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) ch = multiply(ch, root_factor(n, {i, j}, depth));
  }
  return ch;
}

FormalCharacter levi_typical_character(const Weight& zeta, int ell, LeviRoute route) {
  require_levi_dominant(zeta, ell);
  const int n = zeta.n();
  std::vector<std::vector<int>> groups;
  std::vector<int> first, second;
  for (int i = 0; i < n; ++i) (i < ell ? first : second).push_back(i);
  if (!first.empty()) groups.push_back(first);
  if (!second.empty()) groups.push_back(second);

  std::map<Offset, std::int64_t> acc{{Offset(static_cast<std::size_t>(n), 0), clifford_dimension(n)}};
  for (const auto& idx : groups) {
    std::vector<std::int64_t> coefs;
    const auto offs = group_offsets(zeta, idx, route, coefs);
    std::map<Offset, std::int64_t> next;
    for (const auto& [off, c] : acc) {
      for (std::size_t t = 0; t < offs.size(); ++t) {
        Offset o = off;
        for (std::size_t k = 0; k < idx.size(); ++k) o[static_cast<std::size_t>(idx[k])] = offs[t][k];
        next[o] = checked_add(next[o], checked_mul(c, coefs[t]));
      }
    }
    acc = std::move(next);
  }
  FormalCharacter out(zeta, kExact);
  for (const auto& [off, c] : acc) out.add_offset(off, c);
  return out;
}

FormalCharacter parabolic_verma_character(const Weight& zeta, int ell, long depth) {
  if (depth < 0 || depth == kExact) throw DomainError("parabolic Verma character needs a finite depth >= 0");
  FormalCharacter ch = levi_typical_character(zeta, ell).truncated(depth);
  const int n = zeta.n();
  for (int i = 1; i <= ell; ++i) {
    for (int j = ell + 1; j <= n; ++j) ch = multiply(ch, root_factor(n, {i, j}, depth));
  }
  return ch;
}

bool arrow_a(const Weight& lambda, const Weight& mu, long a, const Scalar& s, int ell) {
  if (lambda.n() != mu.n()) return false;
  int moved = -1;
  for (int i = 0; i < lambda.n(); ++i) {
    const Scalar d = mu[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(i)];
    if (d.is_zero()) continue;
    if (!(d == Scalar(1)) || moved >= 0) return false;
    moved = i;
  }
  if (moved < 0) return false;
  const Scalar& x = lambda[static_cast<std::size_t>(moved)];
  return moved < ell ? x == Scalar(a) + s : x == Scalar(-a - 1) - s;
}

TranslationKind parse_translation_kind(std::string_view text) {
  if (text == "E") return TranslationKind::E;
  if (text == "F") return TranslationKind::F;
  throw ParseError("translation kind must be E or F, got '" + std::string(text) + "'");
}

Weight translation_anchor(TranslationKind kind, const Weight& zeta) {
  return kind == TranslationKind::F ? zeta + Weight::unit(zeta.n(), 1)
                                    : zeta - Weight::unit(zeta.n(), zeta.n());
}

FormalCharacter translate_char(TranslationKind kind, long a, const Weight& zeta, const Scalar& s,
                               int ell, long depth) {
  if (!is_dominant(zeta, s, ell)) {
    throw DomainError("weight " + zeta.str() + " is not dominant in Lambda+_{(" + s.str() + ")^" +
                      std::to_string(ell) + "}");
  }
  const Weight anchor = translation_anchor(kind, zeta);
  FormalCharacter out(anchor, depth);
  const int n = zeta.n();
  for (int i = 1; i <= n; ++i) {
    const Weight mu = kind == TranslationKind::F ? zeta + Weight::unit(n, i) : zeta - Weight::unit(n, i);
    if (!is_dominant(mu, s, ell)) continue;
    const bool linked = kind == TranslationKind::F ? arrow_a(zeta, mu, a, s, ell) : arrow_a(mu, zeta, a, s, ell);
    if (!linked) continue;
    const long h = *weight_height(anchor, mu);
    if (h > depth) continue;
    out += parabolic_verma_character(mu, ell, depth - h).rebased(anchor).scaled(2);
  }
  return out;
}

TranslationCheck tensor_project_verify(const Weight& zeta, const Scalar& s, int ell, long a,
                                       TranslationKind kind, long depth) {
  TranslationCheck check;
  const int n = zeta.n();
  const Weight anchor = translation_anchor(kind, zeta);
  const int sign = kind == TranslationKind::F ? 1 : -1;

  FormalCharacter natural(kind == TranslationKind::F ? Weight::unit(n, 1) : -Weight::unit(n, n), kExact);
  for (int i = 1; i <= n; ++i) natural.add_term(Weight::unit(n, i).scaled(sign), 2);
  const FormalCharacter product = multiply(parabolic_verma_character(zeta, ell, depth), natural);

  const std::int64_t top = clifford_dimension(n);
  FormalCharacter rest = product;
  for (int guard = 0; !rest.is_zero(); ++guard) {
    if (guard > 10000) throw std::logic_error("flag peeling did not terminate");
    const Offset* best = nullptr;
    long best_h = 0;
    for (const auto& [off, c] : rest.terms()) {
      const long h = *offset_height(off);
      if (!best || h < best_h) {
        best = &off;
        best_h = h;
      }
    }
    const Weight mu = rest.weight_of(*best);
    const std::int64_t c = rest.terms().at(*best);
    if (!is_dominant(mu, s, ell) || c % top != 0) {
      check.detail = "tensor product has top term " + std::to_string(c) + "*e" + mu.str() +
                     " that is not a parabolic Verma flag top";
      return check;
    }
    const FormalCharacter k = parabolic_verma_character(mu, ell, depth - best_h).rebased(anchor);
    check.flags.push_back({mu, c / top, wt(mu, s, ell)});
    rest -= k.scaled(c / top);
  }

  WtVector target = wt(zeta, s, ell);
  WtVector step;
  step.add(a, -sign);
  step.add(a + 1, sign);
  target += step;

  check.projected = FormalCharacter(anchor, depth);
  for (const auto& f : check.flags) {
    if (!(f.label == target)) continue;
    const long h = *weight_height(anchor, f.mu);
    check.projected += parabolic_verma_character(f.mu, ell, depth - h).rebased(anchor).scaled(f.multiplicity);
  }
  check.expected = translate_char(kind, a, zeta, s, ell, depth);
  check.ok = check.projected == check.expected;
  if (!check.ok) {
    check.detail = "projection " + check.projected.str() + " differs from " + check.expected.str();
  }
  return check;
}

}  // namespace qblocks
