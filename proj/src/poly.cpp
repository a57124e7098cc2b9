#include "qblocks/poly.hpp"

#include "qblocks/errors.hpp"

namespace qblocks {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("int64 overflow in coefficient sum");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("int64 overflow in coefficient product");
  return r;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, std::int64_t c) {
  LaurentPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::constant(int nvars, std::int64_t c) {
  return monomial(Exponent(static_cast<std::size_t>(nvars), 0), c);
}

LaurentPoly LaurentPoly::variable(int nvars, int i) {
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return monomial(e);
}

std::int64_t LaurentPoly::coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(const Exponent& e, std::int64_t c) {
  if (static_cast<int>(e.size()) != nvars_) throw DomainError("exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (nvars_ != other.nvars_) throw DomainError("polynomial variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  if (nvars_ != other.nvars_) throw DomainError("polynomial variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

LaurentPoly LaurentPoly::scaled(std::int64_t c) const {
  LaurentPoly r(nvars_);
  for (const auto& [e, v] : terms_) r.add_term(e, checked_mul(v, c));
  return r;
}

LaurentPoly LaurentPoly::shifted(const Exponent& shift) const {
  LaurentPoly r(nvars_);
  for (const auto& [e, v] : terms_) {
    Exponent f = e;
    for (std::size_t k = 0; k < f.size(); ++k) f[k] += shift[k];
    r.add_term(f, v);
  }
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars_ != b.nvars_) throw DomainError("polynomial variable count mismatch");
  LaurentPoly r(a.nvars_);
  Exponent f(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < f.size(); ++k) f[k] = ea[k] + eb[k];
      r.add_term(f, checked_mul(ca, cb));
    }
  }
  return r;
}

LaurentPoly LaurentPoly::divide_by_difference(int i, int j) const {
  const auto ui = static_cast<std::size_t>(i);
  const auto uj = static_cast<std::size_t>(j);
  LaurentPoly rest = *this;
  LaurentPoly quotient(nvars_);
  // Terms of rest never reach below the minimum x_i degree of the input,
  // so a leftover at the bottom means (x_i - x_j) does not divide.
  long min_deg = 0;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it == terms_.begin() || it->first[ui] < min_deg) min_deg = it->first[ui];
  }
  // Peel off the term with the largest x_i degree, then the largest rest.
  while (!rest.is_zero()) {
    auto lead = rest.terms_.begin();
    for (auto it = rest.terms_.begin(); it != rest.terms_.end(); ++it) {
      if (it->first[ui] > lead->first[ui] ||
          (it->first[ui] == lead->first[ui] && it->first > lead->first)) {
        lead = it;
      }
    }
    const std::int64_t c = lead->second;
    Exponent q = lead->first;
    --q[ui];
    Exponent low = q;
    ++low[uj];
    if (lead->first[ui] <= min_deg) {
      throw DomainError("polynomial not divisible by (x" + std::to_string(i + 1) + " - x" +
                        std::to_string(j + 1) + ")");
    }
    quotient.add_term(q, c);
    rest.add_term(lead->first, checked_mul(c, -1));
    rest.add_term(low, c);
  }
  return quotient;
}

LaurentPoly LaurentPoly::swapped(int i, int j) const {
  LaurentPoly r(nvars_);
  for (const auto& [e, v] : terms_) {
    Exponent f = e;
    std::swap(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)]);
    r.add_term(f, v);
  }
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const std::int64_t mag = c < 0 ? -c : c;
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(k + 1);
      if (e[k] != 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace qblocks
