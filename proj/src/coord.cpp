#include "qblocks/coord.hpp"

#include <cctype>
#include <climits>
#include <sstream>
#include <vector>

#include "qblocks/errors.hpp"

namespace qblocks {

namespace {

std::strong_ordering cmp_rational(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

Rational parse_rational(std::string_view text, std::string_view whole) {
  auto fail = [&] {
    return ParseError("malformed rational '" + std::string(text) + "' in scalar '" +
                      std::string(whole) + "'");
  };
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '-') ++pos;
  const std::size_t num_start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == num_start) throw fail();
  if (pos < text.size()) {
    if (text[pos] != '/') throw fail();
    const std::size_t den_start = ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_start || pos != text.size()) throw fail();
  }
  Rational value;
  if (value.set_str(std::string(text), 10) != 0) throw fail();
  if (sgn(value.get_den()) == 0) throw fail();
  value.canonicalize();
  return value;
}

}  // namespace

Scalar::Scalar(Rational value) : rational_(std::move(value)) { rational_.canonicalize(); }

Scalar::Scalar(Rational rational, IrrationalPart irrational)
    : rational_(std::move(rational)), irrational_(std::move(irrational)) {
  canonicalize();
}

Scalar Scalar::symbol(const std::string& name, const Rational& coefficient) {
  if (!is_identifier(name)) throw ParseError("invalid symbol name '" + name + "'");
  return Scalar(Rational(0), IrrationalPart{{name, coefficient}});
}

void Scalar::canonicalize() {
  rational_.canonicalize();
  for (auto it = irrational_.begin(); it != irrational_.end();) {
    it->second.canonicalize();
    if (sgn(it->second) == 0) {
      it = irrational_.erase(it);
    } else {
      ++it;
    }
  }
}

Scalar Scalar::parse(std::string_view text) {
  std::vector<std::string_view> pieces;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '+') {
      pieces.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (pieces.empty() || pieces.front().empty()) {
    throw ParseError("malformed scalar '" + std::string(text) + "'");
  }
  Scalar result(parse_rational(pieces.front(), text));
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    const auto piece = pieces[i];
    const auto star = piece.find('*');
    if (star == std::string_view::npos) {
      throw ParseError("expected 'symbol*coefficient' in scalar '" + std::string(text) + "'");
    }
    const std::string name(piece.substr(0, star));
    if (!is_identifier(name)) {
      throw ParseError("invalid symbol '" + name + "' in scalar '" + std::string(text) + "'");
    }
    if (result.irrational_.contains(name)) {
      throw ParseError("repeated symbol '" + name + "' in scalar '" + std::string(text) + "'");
    }
    result.irrational_[name] = parse_rational(piece.substr(star + 1), text);
  }
  result.canonicalize();
  return result;
}

bool Scalar::is_integer() const {
  return irrational_.empty() && rational_.get_den() == 1;
}

std::optional<long> Scalar::to_integer() const {
  if (!is_integer()) return std::nullopt;
  const mpz_class& num = rational_.get_num();
  if (!num.fits_slong_p()) return std::nullopt;
  return num.get_si();
}

std::string Scalar::str() const {
  std::string out = rational_.get_str();
  for (const auto& [name, coef] : irrational_) {
    out += '+';
    out += name;
    out += '*';
    out += coef.get_str();
  }
  return out;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.rational_ = -r.rational_;
  for (auto& [name, coef] : r.irrational_) coef = -coef;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  rational_ += other.rational_;
  for (const auto& [name, coef] : other.irrational_) irrational_[name] += coef;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar Scalar::scaled(const Rational& factor) const {
  Scalar r = *this;
  r.rational_ *= factor;
  for (auto& [name, coef] : r.irrational_) coef *= factor;
  r.canonicalize();
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.rational_ != b.rational_ || a.irrational_.size() != b.irrational_.size()) return false;
  auto it = b.irrational_.begin();
  for (const auto& [name, coef] : a.irrational_) {
    if (it->first != name || it->second != coef) return false;
    ++it;
  }
  return true;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (auto c = cmp_rational(a.rational_, b.rational_); c != 0) return c;
  auto ia = a.irrational_.begin();
  auto ib = b.irrational_.begin();
  for (; ia != a.irrational_.end() && ib != b.irrational_.end(); ++ia, ++ib) {
    if (auto c = ia->first <=> ib->first; c != 0) return c;
    if (auto c = cmp_rational(ia->second, ib->second); c != 0) return c;
  }
  return a.irrational_.size() <=> b.irrational_.size();
}

bool is_integer(const Scalar& a) { return a.is_integer(); }

std::optional<std::strong_ordering> compare_values(const Scalar& a, const Scalar& b) {
  const Scalar d = a - b;
  if (!d.is_rational()) return std::nullopt;
  return cmp_rational(d.rational_part(), Rational(0));
}

long floor_rational(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!f.fits_slong_p()) throw DomainError("rational out of machine range: " + q.get_str());
  return f.get_si();
}

CosetClass coset_class(const Scalar& a) {
  Rational frac = a.rational_part() - Rational(floor_rational(a.rational_part()));
  frac.canonicalize();
  CosetClass c;
  c.representative = Scalar(frac, a.irrational_part());
  if (a.is_rational()) {
    if (sgn(frac) == 0) {
      c.kind = CosetKind::Int;
    } else if (frac == Rational(1, 2)) {
      c.kind = CosetKind::Half;
    } else {
      c.kind = CosetKind::Irr;
      c.positive = frac < Rational(1, 2);
    }
  } else {
    c.kind = CosetKind::Irr;
    c.positive = sgn(a.irrational_part().begin()->second) > 0;
  }
  return c;
}

CosetClass CosetClass::paired() const { return coset_class(-representative); }

std::string CosetClass::label() const { return representative.str(); }

std::string_view kind_name(CosetKind kind) {
  switch (kind) {
    case CosetKind::Int:
      return "INT";
    case CosetKind::Half:
      return "HALF";
    case CosetKind::Irr:
      return "IRR";
  }
  return "?";
}

}  // namespace qblocks
