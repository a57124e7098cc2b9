#include "qblocks/zigzag.hpp"

#include <algorithm>
#include <set>

#include "qblocks/errors.hpp"

namespace qblocks {

namespace {

char kind_letter(ZigzagKind k) {
  switch (k) {
    case ZigzagKind::E:
      return 'E';
    case ZigzagKind::Z:
      return 'Z';
    case ZigzagKind::X:
      return 'X';
    case ZigzagKind::Y:
      return 'Y';
  }
  return '?';
}

}  // namespace

std::string ZigzagBasisId::str() const { return kind_letter(kind) + std::to_string(index); }

ZigzagBasisId parse_basis_id(std::string_view text) {
  if (text.size() < 2) throw ParseError("bad basis id '" + std::string(text) + "'");
  ZigzagBasisId id;
  switch (text[0]) {
    case 'E':
      id.kind = ZigzagKind::E;
      break;
    case 'Z':
      id.kind = ZigzagKind::Z;
      break;
    case 'X':
      id.kind = ZigzagKind::X;
      break;
    case 'Y':
      id.kind = ZigzagKind::Y;
      break;
    default:
      throw ParseError("bad basis id '" + std::string(text) + "'");
  }
  try {
    std::size_t used = 0;
    id.index = std::stoi(std::string(text.substr(1)), &used);
    if (used != text.size() - 1) throw ParseError("bad basis id '" + std::string(text) + "'");
  } catch (const std::logic_error&) {
    throw ParseError("bad basis id '" + std::string(text) + "'");
  }
  return id;
}

ZigzagElement::ZigzagElement(const ZigzagBasisId& id, Rational c) { add(id, c); }

void ZigzagElement::add(const ZigzagBasisId& id, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(id, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

ZigzagElement& ZigzagElement::operator+=(const ZigzagElement& other) {
  for (const auto& [id, c] : other.terms_) add(id, c);
  return *this;
}

ZigzagElement ZigzagElement::scaled(const Rational& c) const {
  ZigzagElement out;
  for (const auto& [id, v] : terms_) out.add(id, v * c);
  return out;
}

std::string ZigzagElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [id, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += c.get_str() + "*";
    out += id.str();
  }
  return out;
}

ZigzagAlgebra::ZigzagAlgebra(int window, bool flip_relation) : window_(window), flip_(flip_relation) {
  if (window < 1) throw DomainError("zigzag window must be >= 1");
  for (auto kind : {ZigzagKind::E, ZigzagKind::Z}) {
    for (int i = -window; i <= window; ++i) basis_.push_back({kind, i});
  }
  for (auto kind : {ZigzagKind::X, ZigzagKind::Y}) {
    for (int i = -window; i < window; ++i) basis_.push_back({kind, i});
  }
  for (std::size_t k = 0; k < basis_.size(); ++k) index_[basis_[k]] = static_cast<int>(k);
}

bool ZigzagAlgebra::contains(const ZigzagBasisId& id) const { return index_.contains(id); }

int ZigzagAlgebra::position(const ZigzagBasisId& id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) {
    throw DomainError("basis path " + id.str() + " is outside window " + std::to_string(window_));
  }
  return it->second;
}

int ZigzagAlgebra::source(const ZigzagBasisId& id) const {
  position(id);
  return id.kind == ZigzagKind::Y ? id.index + 1 : id.index;
}

int ZigzagAlgebra::target(const ZigzagBasisId& id) const {
  position(id);
  return id.kind == ZigzagKind::X ? id.index + 1 : id.index;
}

ZigzagElement ZigzagAlgebra::multiply(const ZigzagBasisId& u, const ZigzagBasisId& v) const {
  if (target(v) != source(u)) return {};
  if (v.kind == ZigzagKind::E) return ZigzagElement(u);
  if (u.kind == ZigzagKind::E) return ZigzagElement(v);
  if (u.kind == ZigzagKind::X && v.kind == ZigzagKind::Y) {
    return ZigzagElement({ZigzagKind::Z, flip_ ? u.index : u.index + 1});
  }
  if (u.kind == ZigzagKind::Y && v.kind == ZigzagKind::X) return ZigzagElement({ZigzagKind::Z, u.index});
  return {};
}

ZigzagElement ZigzagAlgebra::multiply(const ZigzagElement& u, const ZigzagElement& v) const {
  ZigzagElement out;
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) out += multiply(a, b).scaled(ca * cb);
  }
  return out;
}

ZigzagElement ZigzagAlgebra::one() const {
  ZigzagElement out;
  for (int i = -window_; i <= window_; ++i) out.add({ZigzagKind::E, i}, 1);
  return out;
}

RationalVector ZigzagAlgebra::to_vector(const ZigzagElement& e) const {
  RationalVector v(basis_.size());
  for (const auto& [id, c] : e.terms()) v[static_cast<std::size_t>(position(id))] = c;
  return v;
}

ZigzagElement ZigzagAlgebra::from_vector(const RationalVector& v) const {
  ZigzagElement out;
  for (std::size_t k = 0; k < v.size(); ++k) out.add(basis_[k], v[k]);
  return out;
}

std::vector<std::string> ZigzagAlgebra::table() const {
  std::vector<std::string> lines;
  for (const auto& u : basis_) {
    for (const auto& v : basis_) {
      const auto p = multiply(u, v);
      if (!p.is_zero()) lines.push_back(u.str() + "*" + v.str() + " = " + p.str());
    }
  }
  return lines;
}

std::vector<std::string> ZigzagAlgebra::associativity_failures(std::size_t limit) const {
  std::vector<std::string> out;
  for (const auto& a : basis_) {
    for (const auto& b : basis_) {
      const auto ab = multiply(a, b);
      for (const auto& c : basis_) {
        const auto left = multiply(ab, ZigzagElement(c));
        const auto right = multiply(ZigzagElement(a), multiply(b, c));
        if (left == right) continue;
        if (out.size() < limit) {
          out.push_back("(" + a.str() + "*" + b.str() + ")*" + c.str() + " = " + left.str() + " but " + a.str() +
                        "*(" + b.str() + "*" + c.str() + ") = " + right.str());
        }
      }
    }
  }
  return out;
}

std::vector<std::string> ZigzagAlgebra::relation_failures() const {
  std::vector<std::string> out;
  for (int i = -window_; i < window_; ++i) {
    const auto xy = multiply(ZigzagBasisId{ZigzagKind::X, i}, ZigzagBasisId{ZigzagKind::Y, i});
    if (!(xy == ZigzagElement({ZigzagKind::Z, i + 1}))) {
      out.push_back("relation x_i y_i = z_{i+1} fails at i=" + std::to_string(i) + ": X" + std::to_string(i) + "*Y" +
                    std::to_string(i) + " = " + xy.str());
    }
    const auto yx = multiply(ZigzagBasisId{ZigzagKind::Y, i}, ZigzagBasisId{ZigzagKind::X, i});
    if (!(yx == ZigzagElement({ZigzagKind::Z, i}))) {
      out.push_back("relation y_i x_i = z_i fails at i=" + std::to_string(i) + ": Y" + std::to_string(i) + "*X" +
                    std::to_string(i) + " = " + yx.str());
    }
  }
  // Quiver typing: a nonzero product of composable paths runs from the
  // source of the first factor to the target of the second.
  for (const auto& u : basis_) {
    for (const auto& v : basis_) {
      const ZigzagElement product = multiply(u, v);
      for (const auto& [w, c] : product.terms()) {
        if (source(w) != source(v) || target(w) != target(u)) {
          out.push_back("typing of " + u.str() + "*" + v.str() + " = " + w.str() + " breaks the quiver");
        }
      }
    }
  }
  return out;
}

Subspace ZigzagAlgebra::span_products(const Subspace& left, const Subspace& right) const {
  Subspace out(dim());
  for (const auto& l : left.basis()) {
    const auto le = from_vector(l);
    for (const auto& r : right.basis()) out.add(to_vector(multiply(le, from_vector(r))));
  }
  return out;
}

RadicalSeries ZigzagAlgebra::radical_series() const {
  Subspace rad(dim());
  for (const auto& id : basis_) {
    if (id.kind == ZigzagKind::X || id.kind == ZigzagKind::Y) rad.add(to_vector(ZigzagElement(id)));
  }
  // Close under multiplication by basis paths on both sides.
  for (bool grew = true; grew;) {
    grew = false;
    const auto rows = rad.basis();
    for (const auto& r : rows) {
      const auto re = from_vector(r);
      for (const auto& b : basis_) {
        grew |= rad.add(to_vector(multiply(ZigzagElement(b), re)));
        grew |= rad.add(to_vector(multiply(re, ZigzagElement(b))));
      }
    }
  }

  RadicalSeries series;
  series.powers.push_back(rad);
  while (series.powers.back().dim() > 0 && series.powers.size() < 16) {
    series.powers.push_back(span_products(series.powers.back(), rad));
  }
  series.loewy_length = series.powers.back().dim() == 0 ? static_cast<int>(series.powers.size()) : -1;
  series.semisimple_quotient_dim = dim() - rad.dim();

  Subspace images = rad;
  bool split = true;
  for (int i = -window_; i <= window_; ++i) {
    const ZigzagBasisId ei{ZigzagKind::E, i};
    split &= images.add(to_vector(ZigzagElement(ei)));
    for (int j = -window_; j <= window_; ++j) {
      const auto p = multiply(ei, ZigzagBasisId{ZigzagKind::E, j});
      split &= i == j ? p == ZigzagElement(ei) : p.is_zero();
    }
  }
  series.quotient_is_split = split && images.dim() == dim();
  return series;
}

int ZigzagAlgebra::hom_dim(int i, int j) const {
  const ZigzagElement ei({ZigzagKind::E, i});
  const ZigzagElement ej({ZigzagKind::E, j});
  Subspace s(dim());
  for (const auto& b : basis_) s.add(to_vector(multiply(ej, multiply(ZigzagElement(b), ei))));
  return s.dim();
}

bool ZigzagAlgebra::is_left_submodule(const std::vector<ZigzagBasisId>& ids) const {
  const std::set<ZigzagBasisId> inside(ids.begin(), ids.end());
  for (const auto& a : basis_) {
    for (const auto& b : ids) {
      const ZigzagElement product = multiply(a, b);
      for (const auto& [w, c] : product.terms()) {
        if (!inside.contains(w)) return false;
      }
    }
  }
  return true;
}

SubmoduleReport ZigzagAlgebra::projective_submodules(int i) const {
  position({ZigzagKind::E, i});
  SubmoduleReport report;
  report.vertex = i;
  report.boundary = i <= -window_ || i >= window_;
  if (report.boundary) report.note = "boundary vertex: projective is truncated, expectations suspended";

  std::vector<ZigzagBasisId> p;
  for (const auto& b : basis_) {
    if (source(b) == i) p.push_back(b);
  }
  const std::size_t full = (std::size_t{1} << p.size()) - 1;
  for (std::size_t mask = 1; mask < full; ++mask) {
    std::vector<ZigzagBasisId> ids;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (mask & (std::size_t{1} << k)) ids.push_back(p[k]);
    }
    if (is_left_submodule(ids)) report.proper.push_back(ids);
  }
  std::sort(report.proper.begin(), report.proper.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  // Every submodule M is the sum of its pieces E(j) M. One-dimensional
  // pieces are coordinate lines. The only two-dimensional piece is
  // span{E(i), Z(i)}; a vector E(i) + c Z(i) there has Z(i) times it equal
  // to Z(i), so it generates all of A E(i), leaving only coordinate spans.
  report.complete = true;
  std::map<int, std::vector<ZigzagBasisId>> pieces;
  for (const auto& b : p) pieces[target(b)].push_back(b);
  const ZigzagBasisId ei{ZigzagKind::E, i};
  const ZigzagBasisId zi{ZigzagKind::Z, i};
  for (const auto& [vertex, piece] : pieces) {
    if (piece.size() == 1) continue;
    const bool expected = piece.size() == 2 && vertex == i &&
                          std::set<ZigzagBasisId>(piece.begin(), piece.end()) == std::set<ZigzagBasisId>{ei, zi};
    report.complete &= expected && multiply(zi, ei) == ZigzagElement(zi) && multiply(zi, zi).is_zero();
  }

  const RadicalSeries series = radical_series();
  Subspace pe(dim());
  pe.add(to_vector(ZigzagElement(ei)));
  const Subspace rad_p = span_products(series.powers[0], pe);
  const Subspace rad2_p = span_products(series.powers.size() > 1 ? series.powers[1] : Subspace(dim()), pe);

  std::vector<RationalVector> columns;
  for (const auto& b : p) {
    RationalVector col;
    for (const auto& r : series.powers[0].basis()) {
      const auto v = to_vector(multiply(from_vector(r), ZigzagElement(b)));
      col.insert(col.end(), v.begin(), v.end());
    }
    columns.push_back(col);
  }
  Subspace soc(dim());
  for (const auto& k : kernel(columns)) {
    ZigzagElement e;
    for (std::size_t t = 0; t < p.size(); ++t) e.add(p[t], k[t]);
    soc.add(to_vector(e));
  }
  for (const auto& b : p) {
    const auto v = to_vector(ZigzagElement(b));
    if (soc.contains(v)) report.socle.push_back(b);
    if (rad2_p.contains(v)) report.rad_squared.push_back(b);
    if (rad_p.contains(v) && !rad2_p.contains(v)) report.rad_top_vertices.push_back(target(b));
  }
  if (static_cast<int>(report.socle.size()) != soc.dim()) report.note += " socle not spanned by paths";
  std::sort(report.rad_top_vertices.begin(), report.rad_top_vertices.end());
  return report;
}

bool ChartComparison::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ChartCheck& c) { return c.passed; });
}

ChartComparison compare_with_chart(const ZigzagAlgebra& algebra, const BlockChart& chart) {
  ChartComparison out;
  if (chart.window == 0) {
    out.notes.push_back("chart window 0 is a single boundary vertex; every check is vacuous");
    for (const char* name : {"cartan", "quiver", "relations", "reciprocity"}) {
      out.checks.push_back({name, true, "vacuous"});
    }
    return out;
  }
  const int n = chart.window;
  if (algebra.window() != n) {
    throw DomainError("window mismatch: chart " + std::to_string(n) + " vs algebra " +
                      std::to_string(algebra.window()));
  }
  out.notes.push_back("boundary rows " + std::to_string(-n) + " and " + std::to_string(n) +
                      " are truncated and not compared");

  ChartCheck cartan{"cartan", true, ""};
  for (int i = -n + 1; i < n; ++i) {
    for (int j = -n; j <= n; ++j) {
      const int expected = chart.cartan(i, j);
      const int got = algebra.hom_dim(i, j);
      if (expected != got) {
        cartan.passed = false;
        cartan.detail += "C[" + std::to_string(i) + "][" + std::to_string(j) + "] = " + std::to_string(expected) +
                         " but dim Hom = " + std::to_string(got) + "; ";
      }
    }
  }
  out.checks.push_back(cartan);

  // Arrows of the algebra: basis paths in rad but not rad^2.
  const RadicalSeries series = algebra.radical_series();
  std::set<std::pair<int, int>> arrows;
  for (const auto& b : algebra.basis()) {
    const auto v = algebra.to_vector(ZigzagElement(b));
    if (series.powers[0].contains(v) && !(series.powers.size() > 1 && series.powers[1].contains(v))) {
      arrows.insert(std::minmax(algebra.source(b), algebra.target(b)));
    }
  }
  std::set<std::pair<int, int>> edges;
  for (const auto& [a, b] : chart.edges) edges.insert(std::minmax(a, b));
  ChartCheck quiver{"quiver", true, ""};
  for (const auto& [a, b] : arrows) {
    if (!edges.contains({a, b})) {
      quiver.passed = false;
      quiver.detail += "edge " + std::to_string(a) + " -- " + std::to_string(b) + " missing from chart; ";
    }
  }
  for (const auto& [a, b] : edges) {
    if (!arrows.contains({a, b})) {
      quiver.passed = false;
      quiver.detail += "chart edge " + std::to_string(a) + " -- " + std::to_string(b) + " has no arrow; ";
    }
  }
  out.checks.push_back(quiver);

  // Each chart edge i -- i+1 must close up into the loops of its two
  // endpoints: x_i y_i at i+1, y_i x_i at i, and those loops are the
  // second copy of L counted by C[i][i] = 2.
  ChartCheck relations{"relations", true, ""};
  for (const auto& [a, b] : edges) {
    const int i = a;
    if (b != i + 1) continue;
    const auto xy = algebra.multiply(ZigzagBasisId{ZigzagKind::X, i}, ZigzagBasisId{ZigzagKind::Y, i});
    const auto yx = algebra.multiply(ZigzagBasisId{ZigzagKind::Y, i}, ZigzagBasisId{ZigzagKind::X, i});
    if (!(xy == ZigzagElement({ZigzagKind::Z, i + 1}))) {
      relations.passed = false;
      relations.detail += "x_i y_i = z_{i+1} fails at i=" + std::to_string(i) + " (got " + xy.str() + "); ";
    }
    if (!(yx == ZigzagElement({ZigzagKind::Z, i}))) {
      relations.passed = false;
      relations.detail += "y_i x_i = z_i fails at i=" + std::to_string(i) + " (got " + yx.str() + "); ";
    }
    for (int v : {i, i + 1}) {
      if (v > -n && v < n && chart.cartan(v, v) != 2) {
        relations.passed = false;
        relations.detail += "chart C[" + std::to_string(v) + "][" + std::to_string(v) + "] != 2; ";
      }
    }
  }
  out.checks.push_back(relations);

  ChartCheck reciprocity{"reciprocity", transpose_product(chart.D) == chart.C, ""};
  if (!reciprocity.passed) reciprocity.detail = "chart C differs from D^T D";
  out.checks.push_back(reciprocity);
  return out;
}

}  // namespace qblocks
