#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <set>

#include "qblocks/blockone.hpp"
#include "qblocks/charring.hpp"
#include "qblocks/errors.hpp"
#include "qblocks/json_io.hpp"
#include "qblocks/linkage.hpp"
#include "qblocks/reduce.hpp"
#include "qblocks/selfcheck.hpp"
#include "qblocks/zigzag.hpp"

namespace qblocks {

namespace {

struct Output {
  std::ostream& out;
  bool json = true;

  void emit(const Json& j, const std::vector<std::string>& lines) const {
    if (json) {
      out << j.dump(2) << "\n";
    } else {
      for (const auto& line : lines) out << line << "\n";
    }
  }
};

bool is_identifier(const std::string& text) {
  if (text.empty() || !(std::isalpha(static_cast<unsigned char>(text[0])) || text[0] == '_')) return false;
  return std::all_of(text.begin(), text.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

/// --s accepts a bare symbol name or a full scalar; without it the weight
/// must use exactly one symbol.
Scalar resolve_s(const std::optional<std::string>& text, const Weight& w) {
  if (text) return is_identifier(*text) ? Scalar::symbol(*text) : Scalar::parse(*text);
  std::set<std::string> names;
  for (const auto& c : w.coords()) {
    for (const auto& [name, coef] : c.irrational_part()) names.insert(name);
  }
  if (names.size() != 1) {
    throw DomainError("--s is required: the weight uses " + std::to_string(names.size()) + " symbols");
  }
  return Scalar::symbol(*names.begin());
}

std::vector<std::string> sorted_character_lines(const FormalCharacter& ch) {
  std::vector<std::pair<std::string, std::int64_t>> rows;
  for (const auto& [mu, c] : ch.weighted_terms()) rows.emplace_back(mu.str(), c);
  std::sort(rows.begin(), rows.end());
  std::vector<std::string> lines;
  lines.push_back("anchor " + ch.anchor().str() + " depth " + (ch.is_exact() ? "exact" : std::to_string(ch.depth())));
  for (const auto& [w, c] : rows) lines.push_back(w + " " + std::to_string(c));
  return lines;
}

std::string matrix_line(const std::vector<int>& row) {
  std::string s;
  for (std::size_t k = 0; k < row.size(); ++k) s += (k ? " " : "") + std::to_string(row[k]);
  return s;
}

std::vector<std::string> comparison_lines(const ChartComparison& c) {
  std::vector<std::string> lines;
  for (const auto& check : c.checks) {
    lines.push_back("check " + check.name + ": " + (check.passed ? "pass" : "FAIL") +
                    (check.detail.empty() ? "" : " (" + check.detail + ")"));
  }
  for (const auto& note : c.notes) lines.push_back("note: " + note);
  return lines;
}

std::string ids_line(const std::vector<ZigzagBasisId>& ids) {
  std::string s;
  for (std::size_t k = 0; k < ids.size(); ++k) s += (k ? " " : "") + ids[k].str();
  return s;
}

Json ids_json(const std::vector<ZigzagBasisId>& ids) {
  Json j = Json::array();
  for (const auto& id : ids) j.push_back(id.str());
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Block combinatorics of category O for q(n)", "qblocks"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format = "json";
  std::uint64_t seed = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed, "Seed for randomized commands");

  std::string file_a, file_b, relation = "sim", module_kind, translation_kind;
  std::optional<std::string> s_text;
  int ell = -1, window = 1;
  long depth = 3, a = 0;
  bool verify = false, table = false, radical = false;
  std::optional<int> submodule_vertex;
  long cases = 50;

  auto* reduce = app.add_subcommand("reduce", "Levi normal form of a weight");
  reduce->add_option("weight", file_a, "Weight JSON file")->required();

  auto* linked = app.add_subcommand("linked", "Decide a linkage relation between two weights");
  linked->add_option("a", file_a, "First weight JSON file")->required();
  linked->add_option("b", file_b, "Second weight JSON file")->required();
  linked->add_option("--relation", relation)->check(CLI::IsMember({"sim", "approx", "central"}));

  auto* atyp = app.add_subcommand("atyp", "Atypicality of a weight");
  atyp->add_option("weight", file_a)->required();

  auto* wtc = app.add_subcommand("wt", "wt label of a weight in Lambda_{s^ell}(n)");
  wtc->add_option("weight", file_a)->required();
  wtc->add_option("--s", s_text, "Symbol name or scalar");
  wtc->add_option("--ell", ell)->required()->check(CLI::NonNegativeNumber);

  auto* chr = app.add_subcommand("char", "Truncated character of M(lambda) or K(lambda)");
  chr->add_option("module", module_kind)->required()->check(CLI::IsMember({"M", "K"}));
  chr->add_option("weight", file_a)->required();
  chr->add_option("--ell", ell)->check(CLI::NonNegativeNumber);
  chr->add_option("--depth", depth)->check(CLI::NonNegativeNumber);

  auto* tr = app.add_subcommand("translate", "Character of E_a K(zeta) or F_a K(zeta)");
  tr->add_option("kind", translation_kind)->required()->check(CLI::IsMember({"E", "F"}));
  tr->add_option("weight", file_a)->required();
  tr->add_option("--a", a)->required();
  tr->add_option("--ell", ell)->required()->check(CLI::NonNegativeNumber);
  tr->add_option("--s", s_text);
  tr->add_option("--depth", depth)->check(CLI::NonNegativeNumber);
  tr->add_flag("--verify", verify, "Recompute through the tensor product and compare");

  auto* lminus = app.add_subcommand("lambda-minus", "Predecessor along the atypical root");
  auto* lplus = app.add_subcommand("lambda-plus", "Successor along the atypical root");
  for (auto* sub : {lminus, lplus}) {
    sub->add_option("weight", file_a)->required();
    sub->add_option("--s", s_text);
    sub->add_option("--ell", ell)->required()->check(CLI::NonNegativeNumber);
  }

  auto* quiver = app.add_subcommand("block-quiver", "Atypicality-one block chart and zigzag comparison");
  quiver->add_option("weight", file_a)->required();
  quiver->add_option("--s", s_text);
  quiver->add_option("--ell", ell)->required()->check(CLI::NonNegativeNumber);
  quiver->add_option("--window", window)->check(CLI::NonNegativeNumber);

  auto* glmap = app.add_subcommand("glmap", "Image in the gl(ell|n-ell) weight lattice");
  glmap->add_option("weight", file_a)->required();
  glmap->add_option("--s", s_text);
  glmap->add_option("--ell", ell)->required()->check(CLI::NonNegativeNumber);

  auto* zz = app.add_subcommand("zigzag", "Truncated zigzag algebra");
  zz->add_option("--window", window)->check(CLI::PositiveNumber);
  zz->add_flag("--table", table);
  zz->add_flag("--radical", radical);
  zz->add_option("--submodules", submodule_vertex, "Vertex i of the projective A E(i)");

  auto* sc = app.add_subcommand("selfcheck", "Run every oracle suite");
  sc->add_option("--cases", cases)->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Output o{out, format == "json"};
  try {
    if (*reduce) {
      const auto r = normalize_block(read_weight_file(file_a));
      std::vector<std::string> lines;
      std::string shape;
      for (const auto& f : r.levi) shape += (shape.empty() ? "" : " x ") + ("q(" + std::to_string(f.size) + ")");
      lines.push_back("levi: " + shape);
      for (const auto& f : r.levi) lines.push_back("  " + f.str());
      lines.push_back("reduced: " + r.reduced.str());
      for (const auto& m : r.moves) {
        lines.push_back("move: " + m.alpha.str() + " " + std::string(move_kind_name(m.kind)));
      }
      for (const auto& note : r.notes) lines.push_back("note: " + note);
      o.emit(reduction_to_json(r), lines);
    } else if (*linked) {
      const Weight lambda = read_weight_file(file_a);
      const Weight mu = read_weight_file(file_b);
      Json j{{"relation", relation}};
      std::vector<std::string> lines;
      bool result = false;
      if (relation == "sim") {
        result = linked_sim(lambda, mu);
        j["linked"] = result;
      } else if (relation == "central") {
        result = same_central_char(lambda, mu);
        j["linked"] = result;
        Json core = Json::array();
        for (const auto& c : central_core(lambda)) core.push_back(c.str());
        j["central_core"] = core;
      } else {
        const auto witness = linked_approx(lambda, mu);
        result = witness.has_value();
        j["linked"] = result;
        j["search_bound"] = approx_search_bound(lambda, mu);
        j["witness"] = witness ? witness_to_json(*witness) : Json(nullptr);
        if (witness) {
          std::string w;
          for (int x : witness->w) w += (w.empty() ? "" : " ") + std::to_string(x);
          lines.push_back("w: " + w);
          for (const auto& p : witness->pairs) lines.push_back("pair: " + p.alpha.str() + " k=" + p.k.str());
          if (witness->pairs.empty()) lines.push_back("pairs: none");
        } else {
          lines.push_back("note: no witness within the search bound; this does not prove non-linkage");
        }
      }
      lines.insert(lines.begin(), std::string("linked: ") + (result ? "yes" : "no"));
      o.emit(j, lines);
    } else if (*atyp) {
      const int k = atypicality(read_weight_file(file_a));
      o.emit(Json{{"atypicality", k}}, {std::to_string(k)});
    } else if (*wtc) {
      const Weight w = read_weight_file(file_a);
      const WtVector v = wt(w, resolve_s(s_text, w), ell);
      o.emit(Json{{"wt", wt_to_json(v)}, {"text", v.str()}}, {v.str()});
    } else if (*chr) {
      const Weight w = read_weight_file(file_a);
      FormalCharacter ch;
      if (module_kind == "M") {
        ch = verma_character(w, depth);
      } else {
        if (ell < 0) throw DomainError("char K needs --ell");
        ch = parabolic_verma_character(w, ell, depth);
      }
      o.emit(character_to_json(ch), sorted_character_lines(ch));
    } else if (*tr) {
      const Weight zeta = read_weight_file(file_a);
      const Scalar s = resolve_s(s_text, zeta);
      const auto kind = parse_translation_kind(translation_kind);
      const FormalCharacter ch = translate_char(kind, a, zeta, s, ell, depth);
      Json j{{"character", character_to_json(ch)}};
      auto lines = sorted_character_lines(ch);
      bool ok = true;
      if (verify) {
        const auto check = tensor_project_verify(zeta, s, ell, a, kind, depth);
        ok = check.ok;
        Json flags = Json::array();
        for (const auto& f : check.flags) {
          flags.push_back({{"weight", weight_to_json(f.mu)}, {"multiplicity", f.multiplicity}, {"wt", f.label.str()}});
        }
        j["verify"] = {{"ok", check.ok}, {"detail", check.detail}, {"flags", flags}};
        lines.push_back(std::string("verify: ") + (check.ok ? "ok" : "MISMATCH") +
                        (check.detail.empty() ? "" : " (" + check.detail + ")"));
      }
      o.emit(j, lines);
      if (!ok) return 1;
    } else if (*lminus || *lplus) {
      const Weight w = read_weight_file(file_a);
      const Scalar s = resolve_s(s_text, w);
      const LambdaStep step = *lminus ? lambda_minus_step(w, s, ell) : lambda_plus_step(w, s, ell);
      const Root alpha = atypical_root(w, s, ell);
      o.emit(Json{{"weight", weight_to_json(step.weight)}, {"k", step.k}, {"root", alpha.str()}},
             {step.weight.str(), "k=" + std::to_string(step.k), "root " + alpha.str()});
    } else if (*quiver) {
      const Weight w = read_weight_file(file_a);
      const BlockChart chart = block_chart(w, resolve_s(s_text, w), ell, window);
      const ZigzagAlgebra algebra(std::max(window, 1));
      const ChartComparison cmp = compare_with_chart(algebra, chart);
      Json j = chart_to_json(chart);
      j["comparison"] = comparison_to_json(cmp);
      std::vector<std::string> lines;
      for (int i = -window; i <= window; ++i) lines.push_back("vertex " + std::to_string(i) + " " + chart.at(i).str());
      lines.push_back("D:");
      for (const auto& row : chart.D) lines.push_back("  " + matrix_line(row));
      lines.push_back("C:");
      for (const auto& row : chart.C) lines.push_back("  " + matrix_line(row));
      for (const auto& [x, y] : chart.edges) lines.push_back("edge " + std::to_string(x) + " " + std::to_string(y));
      for (const auto& line : comparison_lines(cmp)) lines.push_back(line);
      o.emit(j, lines);
    } else if (*glmap) {
      const Weight w = read_weight_file(file_a);
      const GlWeight nu = to_gl(w, resolve_s(s_text, w), ell);
      std::string coords;
      for (long c : nu.coords) coords += (coords.empty() ? "" : ", ") + std::to_string(c);
      o.emit(gl_to_json(nu), {"(" + coords + ") ell=" + std::to_string(nu.ell)});
    } else if (*zz) {
      const ZigzagAlgebra alg(window);
      Json j{{"window", window}, {"dim", alg.dim()}, {"basis", ids_json(alg.basis())}};
      std::vector<std::string> lines;
      for (const auto& id : alg.basis()) lines.push_back(id.str());
      if (table) {
        const auto rows = alg.table();
        j["table"] = rows;
        lines.insert(lines.end(), rows.begin(), rows.end());
      }
      if (radical) {
        const auto series = alg.radical_series();
        Json dims = Json::array();
        for (const auto& p : series.powers) dims.push_back(p.dim());
        j["radical"] = {{"dims", dims},
                        {"loewy_length", series.loewy_length},
                        {"semisimple_quotient_dim", series.semisimple_quotient_dim},
                        {"quotient_is_split", series.quotient_is_split}};
        for (std::size_t k = 0; k < series.powers.size(); ++k) {
          lines.push_back("dim rad^" + std::to_string(k + 1) + " = " + std::to_string(series.powers[k].dim()));
        }
        lines.push_back("loewy length " + std::to_string(series.loewy_length));
      }
      if (submodule_vertex) {
        const auto rep = alg.projective_submodules(*submodule_vertex);
        Json proper = Json::array();
        for (const auto& sub : rep.proper) proper.push_back(ids_json(sub));
        j["submodules"] = {{"vertex", rep.vertex},         {"boundary", rep.boundary},
                           {"proper", proper},             {"complete", rep.complete},
                           {"socle", ids_json(rep.socle)}, {"rad_squared", ids_json(rep.rad_squared)},
                           {"rad_top_vertices", rep.rad_top_vertices}, {"note", rep.note}};
        lines.push_back("proper submodules of P" + std::to_string(rep.vertex) + ": " + std::to_string(rep.proper.size()));
        for (const auto& sub : rep.proper) lines.push_back("  {" + ids_line(sub) + "}");
        lines.push_back("socle: " + ids_line(rep.socle));
        lines.push_back("rad^2: " + ids_line(rep.rad_squared));
        if (!rep.note.empty()) lines.push_back("note: " + rep.note);
      }
      o.emit(j, lines);
    } else if (*sc) {
      SelfcheckOptions opts;
      opts.seed = seed;
      opts.cases = cases;
      const auto report = selfcheck(opts);
      Json suites = Json::array();
      for (const auto& s : report.suites) {
        suites.push_back({{"name", s.name}, {"passed", s.passed}, {"failed", s.failed}, {"failures", s.failures}});
      }
      std::vector<std::string> lines;
      std::string text = report.str();
      for (std::size_t pos = 0; pos < text.size();) {
        const auto end = text.find('\n', pos);
        lines.push_back(text.substr(pos, end - pos));
        pos = end + 1;
      }
      o.emit(Json{{"seed", seed}, {"cases", cases}, {"ok", report.ok()}, {"suites", suites}}, lines);
      if (!report.ok()) return 1;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace qblocks
