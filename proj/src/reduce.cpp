#include "qblocks/reduce.hpp"

#include <stdexcept>

#include "qblocks/errors.hpp"

namespace qblocks {

namespace {

struct SortKey {
  int cls = 0;
  int minus = 0;  // IRR only: 0 for +s, 1 for -s
  friend auto operator<=>(const SortKey&, const SortKey&) = default;
};

void require_legal(const Weight& lambda, const Root& alpha) {
  if (pairing(lambda, alpha).is_integer()) {
    throw DomainError("illegal twisting move at " + alpha.str() + ": (lambda, alpha) = " +
                      pairing(lambda, alpha).str() + " is an integer for lambda = " + lambda.str());
  }
}

}  // namespace

std::string LeviFactor::str() const {
  std::string out = "q(" + std::to_string(size) + "):" + std::string(kind_name(cls.kind));
  if (cls.kind == CosetKind::Irr) out += "(" + cls.label() + ")";
  if (cls.kind != CosetKind::Int) out += " ell=" + std::to_string(ell);
  return out;
}

ReductionResult normalize_block(const Weight& lambda) {
  const ClassSignature sig = class_signature(lambda);
  std::vector<SortKey> keys;
  for (const auto& label : sig.labels) {
    const bool irr = sig.classes[static_cast<std::size_t>(label.cls)].kind == CosetKind::Irr;
    keys.push_back({label.cls, irr && label.sign < 0 ? 1 : 0});
  }

  ReductionResult result;
  Weight current = lambda;
  const int n = lambda.n();
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (int i = 0; i + 1 < n; ++i) {
      const auto k = static_cast<std::size_t>(i);
      if (!(keys[k + 1] < keys[k])) continue;
      const Root alpha{i + 1, i + 2};
      if (pairing(current, alpha).is_integer()) {
        throw std::logic_error("normalize_block reached an illegal swap at " + alpha.str());
      }
      auto [next, kind] = star_action(alpha, current);
      current = std::move(next);
      std::swap(keys[k], keys[k + 1]);
      result.moves.push_back({alpha, kind});
      swapped = true;
    }
  }
  result.reduced = current;

  // Factor boundaries follow class changes; ell counts the + coordinates.
  const ClassSignature out_sig = class_signature(current);
  for (std::size_t k = 0; k < keys.size();) {
    std::size_t end = k;
    int plus = 0;
    while (end < keys.size() && keys[end].cls == keys[k].cls) {
      if (out_sig.labels[end].sign > 0) ++plus;
      ++end;
    }
    const CosetClass& cls = sig.classes[static_cast<std::size_t>(keys[k].cls)];
    LeviFactor factor{static_cast<int>(end - k), cls, plus};
    if (cls.kind == CosetKind::Int) factor.ell = factor.size;
    result.levi.push_back(factor);
    if (cls.kind == CosetKind::Irr && factor.size == 1) {
      const std::string s = cls.label();
      const std::string t = (-cls.representative).str();
      result.notes.push_back("singleton class: Lambda_{(" + s + ")^" + std::to_string(plus) +
                             "}(1), same set as Lambda_{(" + t + ")^" +
                             std::to_string(1 - plus) + "}(1)");
    }
    k = end;
  }
  result.notes.push_back("parity undetermined: each move is an equivalence up to Pi");
  return result;
}

Weight replay_moves(const Weight& lambda, const std::vector<Move>& moves) {
  Weight current = lambda;
  for (std::size_t m = 0; m < moves.size(); ++m) {
    const auto& move = moves[m];
    check_root(move.alpha, current.n());
    require_legal(current, move.alpha);
    auto [next, kind] = star_action(move.alpha, current);
    if (kind != move.kind) {
      throw DomainError("move " + std::to_string(m + 1) + " at " + move.alpha.str() + " logged as " +
                        std::string(move_kind_name(move.kind)) + " but is " +
                        std::string(move_kind_name(kind)));
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace qblocks
