#include "nilhom/cli.hpp"

#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nilhom/hom_count.hpp"
#include "nilhom/spectral.hpp"
#include "nilhom/subgroups.hpp"
#include "nilhom/verify.hpp"

namespace nilhom {

namespace {

CountMethod method_from(const std::string& s) {
  if (s == "formula") return CountMethod::Formula;
  if (s == "enumeration") return CountMethod::Enumeration;
  return CountMethod::Both;
}

nlohmann::json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

int nilpotency_class_of(const GroupId& g) {
  if (g.family == Family::Cyclic) return g.order() > 1 ? 1 : 0;
  return std::max(1, g.m - 1);  // quaternion and dihedral families
}

struct Ctx {
  std::ostream& out;
  bool tsv = false;
};

void emit(Ctx& ctx, const nlohmann::json& j, const std::string& tsv_text) {
  if (ctx.tsv)
    ctx.out << tsv_text;
  else
    ctx.out << j.dump() << "\n";
}

int cmd_components(Ctx& ctx, const std::string& target, int n, int q, CountMethod method) {
  if (target == "su2") {
    auto rep = su2_component_count(n, q, method);
    emit(ctx, nlohmann::json::parse(to_json(rep)), to_tsv(rep));
    return method == CountMethod::Both && !rep.agree ? 1 : 0;
  }
  if (target == "so3") {
    auto rep = so3_component_count(n, q);
    nlohmann::json j{{"abelian", 1},
                     {"m_n", big_json(rep.m_n)},
                     {"m_nq", big_json(rep.m_nq)},
                     {"covering_consistent", rep.covering_consistent}};
    emit(ctx, j,
         "m_n\t" + rep.m_n.str() + "\nm_nq\t" + rep.m_nq.str() + "\ncovering_consistent\t" +
             (rep.covering_consistent ? "true" : "false") + "\n");
    return rep.covering_consistent ? 0 : 1;
  }
  auto rep = u2_component_count(n, q);
  bool agree = true;
  nlohmann::json j{{"abelian", big_json(rep.abelian)},
                   {"type_z2z2", big_json(rep.type_z2z2)},
                   {"type_z2", big_json(rep.type_z2)}};
  if (method == CountMethod::Both) {
    auto e = u2_component_count_enumerated(n, q);
    agree = e.type_z2z2 == rep.type_z2z2 && e.type_z2 == rep.type_z2;
    j["agree"] = agree;
  }
  emit(ctx, j,
       "type_z2z2\t" + rep.type_z2z2.str() + "\ntype_z2\t" + rep.type_z2.str() + "\n");
  return agree ? 0 : 1;
}

int cmd_summands(Ctx& ctx, const std::string& target, int k, int q, CountMethod method) {
  auto rep = stable_summand_counts(
      k, q, target == "su2" ? SummandTarget::SU2 : SummandTarget::SO3, method);
  std::string tsv = target == "su2"
                        ? "K\t" + rep.su2_count.str() + "\n"
                        : "N\t" + rep.so3_base.str() + "\nNq\t" + rep.so3_extra.str() + "\n";
  emit(ctx, nlohmann::json::parse(to_json(rep)), tsv);
  return method == CountMethod::Both && !rep.agree ? 1 : 0;
}

int cmd_group_info(Ctx& ctx, const std::string& id) {
  GroupId g = parse_group(id);
  g.check_valid();
  nlohmann::json j{{"group", to_string(g)},
                   {"family", g.family == Family::Quaternion ? "quaternion"
                              : g.family == Family::Cyclic   ? "cyclic"
                                                             : "dihedral"},
                   {"order", g.order()},
                   {"torus_modulus", g.torus_modulus()},
                   {"nilpotency_class", nilpotency_class_of(g)}};
  std::string tsv;
  for (auto& [key, value] : j.items())
    tsv += key + "\t" + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
  emit(ctx, j, tsv);
  return 0;
}

int cmd_poset(Ctx& ctx, const std::string& id, int r) {
  GroupId g = parse_group(id);
  g.check_valid();
  auto p = nil_poset_report(g, r);
  std::string tsv = "maximals\t" + std::to_string(p.maximals.size()) + "\nintersections\t" +
                    std::to_string(p.intersections.size()) + "\ntree\t" +
                    (p.tree ? "true" : "false") + "\namalgam\t" + p.amalgam + "\n";
  emit(ctx, nlohmann::json::parse(to_json(p)), tsv);
  return 0;
}

int cmd_gb(Ctx& ctx, std::ostream& err, const std::string& action, const std::string& file,
           const std::string& poly, int maxdeg) {
  IdealFile f = load_ideal_file(file);
  if ((action == "reduce" || action == "colon") && poly.empty()) {
    err << "gb " << action << " requires --poly\n";
    return 2;
  }
  if (action == "basis") {
    auto gb = groebner_basis(f.ring, f.gens);
    std::string tsv;
    for (const auto& g : gb.gens) tsv += to_string(f.ring, g) + "\n";
    emit(ctx, nlohmann::json::parse(to_json(f.ring, gb)), tsv);
  } else if (action == "reduce") {
    auto nf = normal_form(f.ring, parse_polynomial(f.ring, poly),
                          groebner_basis(f.ring, f.gens));
    std::string text = to_string(f.ring, nf);
    emit(ctx, nlohmann::json{{"normal_form", text}}, text + "\n");
  } else if (action == "colon") {
    auto cg = colon_ideal(f.ring, f.gens, parse_polynomial(f.ring, poly));
    std::vector<std::string> texts;
    std::string tsv;
    for (const auto& g : cg) {
      texts.push_back(to_string(f.ring, g));
      tsv += texts.back() + "\n";
    }
    emit(ctx, nlohmann::json{{"colon", texts}}, tsv);
  } else {  // hilbert
    auto h = hilbert_function(f.ring, f.gens, maxdeg);
    std::string tsv;
    for (std::size_t d = 0; d < h.dims.size(); ++d)
      tsv += std::to_string(d) + "\t" + std::to_string(h.dims[d]) + "\n";
    emit(ctx, nlohmann::json{{"dims", h.dims}}, tsv);
  }
  return 0;
}

std::string poincare_tsv(const HilbertFunction& h) {
  std::string tsv;
  for (std::size_t d = 0; d < h.dims.size(); ++d)
    tsv += std::to_string(d) + "\t" + std::to_string(h.dims[d]) + "\n";
  return tsv;
}

int cmd_spectral(Ctx& ctx, const std::string& kind, int n, int maxdeg) {
  if (kind == "bcom") {
    auto p = bcom_presentation(n);
    auto h = hilbert_function(p.ring, p.ideal, maxdeg);
    nlohmann::json ring;
    for (int i = 0; i < p.ring.nvars(); ++i)
      ring[p.ring.names[static_cast<std::size_t>(i)]] =
          p.ring.degrees[static_cast<std::size_t>(i)];
    std::vector<std::string> ideal;
    for (const auto& g : p.ideal) ideal.push_back(to_string(p.ring, g));
    emit(ctx, nlohmann::json{{"ring", ring}, {"ideal", ideal}, {"hilbert", h.dims}},
         poincare_tsv(h));
    return 0;
  }
  auto ext = b3q16_datum();
  auto rep = e4_page(ext, maxdeg, b3q16_d5_candidate());
  emit(ctx, nlohmann::json::parse(to_json(ext.ring, rep)), poincare_tsv(rep.poincare));
  return 0;
}

int cmd_verify(Ctx& ctx, const std::string& scope) {
  auto verdicts = scope == "appendix" ? verify_appendix() : verify_acceptance();
  nlohmann::json list = nlohmann::json::array();
  std::string tsv;
  for (const auto& v : verdicts) {
    list.push_back({{"name", v.name}, {"pass", v.pass}});
    tsv += v.name + "\t" + (v.pass ? "pass" : "fail") + "\n";
  }
  bool ok = all_pass(verdicts);
  emit(ctx, nlohmann::json{{"all_pass", ok}, {"verdicts", list}}, tsv);
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computations around nilpotent tuples in SU(2), SO(3) and U(2)"};
  app.require_subcommand(1);
  bool tsv = false;
  unsigned workers = 0;
  app.add_flag("--tsv", tsv, "tabular output instead of JSON");
  app.add_option("--workers", workers, "enumeration worker count (0 = auto)");

  std::string target, method = "formula", group_id, action, ring_file, poly, scope;
  int n = 0, q = 0, k = 0, r = 0, maxdeg = 12, bcom_n = 0;

  auto* comp = app.add_subcommand("components", "connected-component counts");
  comp->add_option("target", target)->required()->check(CLI::IsMember({"su2", "so3", "u2"}));
  comp->add_option("-n", n)->required();
  comp->add_option("-q", q)->required();
  comp->add_option("--method", method)
      ->check(CLI::IsMember({"formula", "enumeration", "both"}));

  auto* summ = app.add_subcommand("summands", "stable wedge-summand counts");
  summ->add_option("target", target)->required()->check(CLI::IsMember({"su2", "so3"}));
  summ->add_option("-k", k)->required();
  summ->add_option("-q", q)->required();
  summ->add_option("--method", method)
      ->check(CLI::IsMember({"formula", "enumeration", "both"}));

  auto* grp = app.add_subcommand("group", "group facts");
  grp->add_option("action", action)->required()->check(CLI::IsMember({"info"}));
  grp->add_option("id", group_id)->required();

  auto* pos = app.add_subcommand("poset", "poset of low-class maximal subgroups");
  pos->add_option("id", group_id)->required();
  pos->add_option("-r", r)->required();

  auto* gb = app.add_subcommand("gb", "Groebner computations over F2");
  gb->add_option("action", action)
      ->required()
      ->check(CLI::IsMember({"basis", "reduce", "colon", "hilbert"}));
  gb->add_option("--ring", ring_file)->required();
  gb->add_option("--poly", poly);
  gb->add_option("--maxdeg", maxdeg);

  auto* spec = app.add_subcommand("spectral", "spectral-sequence page assembly");
  spec->add_option("kind", target)->required()->check(CLI::IsMember({"bcom", "b3q16"}));
  spec->add_option("n", bcom_n);
  spec->add_option("--maxdeg", maxdeg);

  auto* ver = app.add_subcommand("verify", "cross-check suites");
  ver->add_option("scope", scope)->required()->check(CLI::IsMember({"appendix", "all"}));

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  set_enumeration_workers(workers);
  Ctx ctx{out, tsv};
  try {
    if (comp->parsed()) return cmd_components(ctx, target, n, q, method_from(method));
    if (summ->parsed()) return cmd_summands(ctx, target, k, q, method_from(method));
    if (grp->parsed()) return cmd_group_info(ctx, group_id);
    if (pos->parsed()) return cmd_poset(ctx, group_id, r);
    if (gb->parsed()) return cmd_gb(ctx, err, action, ring_file, poly, maxdeg);
    if (spec->parsed()) {
      if (target == "bcom" && bcom_n == 0) {
        err << "spectral bcom requires an n argument\n";
        return 2;
      }
      return cmd_spectral(ctx, target, bcom_n, maxdeg);
    }
    if (ver->parsed()) return cmd_verify(ctx, scope);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no command given\n";
  return 2;
}

}  // namespace nilhom
