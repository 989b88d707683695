#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hitchin/battery.hpp"
#include "hitchin/json_io.hpp"

#ifndef HITCHIN_CORPUS_DEFAULT
#define HITCHIN_CORPUS_DEFAULT "corpus"
#endif

namespace {

using hitchin::Json;

struct Cli {
  std::string format = "json";
  std::string corpus = HITCHIN_CORPUS_DEFAULT;
  std::string command;

  std::string group;
  int n = 1;
  int genus = 2;

  std::string form_name;
  std::vector<int> params;

  std::string input;

  std::uint64_t seed = 7;
  std::string mutate = "none";
};

std::string pass_fail(bool b) { return b ? "pass" : "fail"; }

void print_envelope(const Cli& cli, const Json& inputs, const Json& result,
                    const std::vector<std::string>& warnings, const std::string& text) {
  if (cli.format == "text") {
    std::cout << text;
    for (const auto& w : warnings) std::cout << "warning: " << w << "\n";
    return;
  }
  const Json env{{"schema_version", "1"},
                 {"command", cli.command},
                 {"inputs_echo", inputs},
                 {"result", result},
                 {"warnings", warnings}};
  std::cout << env.dump(1) << "\n";
}

void print_error(const Cli& cli, const std::string& type, const std::string& message) {
  std::cerr << "error (" << type << "): " << message << "\n";
  if (cli.format == "text") return;
  const Json env{{"schema_version", "1"},
                 {"command", cli.command},
                 {"error", Json{{"type", type}, {"message", message}}}};
  std::cout << env.dump(1) << "\n";
}

std::string matrix_text(const hitchin::PolyMat& m) {
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    out += "  [";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += m.at(i, j).str("w");
    }
    out += "]\n";
  }
  return out;
}

std::string element_text(const hitchin::AlgebraElement& e) {
  std::string out = "[";
  for (size_t k = 0; k < e.size(); ++k) {
    if (k) out += ", ";
    out += e[k].str("w");
  }
  return out + "]";
}

int run_dims(const Cli& cli) {
  const hitchin::GroupDescriptor g{hitchin::parse_group(cli.group), cli.n};
  const hitchin::DimensionReport rep = hitchin::dimensions(g, cli.genus);
  const Json result{{"degrees", rep.degrees},
                    {"base_dim", rep.base_dim},
                    {"moduli_dim", rep.moduli_dim},
                    {"half_dim_check", pass_fail(rep.half_dim_ok)},
                    {"degree_sum_check", pass_fail(rep.degree_sum_ok)}};
  std::string text = g.display() + ", genus " + std::to_string(cli.genus) + "\n";
  text += "invariant degrees:";
  for (int d : rep.degrees) text += " " + std::to_string(d);
  text += "\nbase dimension: " + std::to_string(rep.base_dim);
  text += "\nmoduli dimension: " + std::to_string(rep.moduli_dim);
  text += "\nhalf-dimension check: " + pass_fail(rep.half_dim_ok);
  text += "\ndegree-sum check: " + pass_fail(rep.degree_sum_ok) + "\n";
  print_envelope(cli, Json{{"group", cli.group}, {"n", cli.n}, {"genus", cli.genus}}, result, {},
                 text);
  return 0;
}

int run_curve(const Cli& cli) {
  const hitchin::GroupDescriptor g{hitchin::parse_group(cli.group), cli.n};
  const hitchin::CurveModel model{g, cli.genus, std::nullopt};
  const int ram = hitchin::ramification_count(model);
  std::vector<std::string> warnings;
  Json result;
  std::string text = g.display() + ", genus " + std::to_string(cli.genus) + "\n";
  if (g.kind == hitchin::GroupKind::SO_even) {
    const hitchin::GenusReport rep = hitchin::so_even_desingularization(g.n, cli.genus);
    result = Json{{"virtual_genus", rep.spectral_genus},
                  {"double_points", rep.ramification_count},
                  {"pfaffian_zero_count", ram},
                  {"desing_genus", *rep.desing_genus},
                  {"quotient_genus", *rep.quotient_genus},
                  {"prym_dim", *rep.prym_dim},
                  {"notes", Json::array({rep.notes})}};
    warnings.push_back(rep.notes);
    text += "virtual genus (singular model): " + std::to_string(rep.spectral_genus) + "\n";
    text += "double points: " + std::to_string(rep.ramification_count) + "\n";
    text += "desingularized genus: " + std::to_string(*rep.desing_genus) + "\n";
    text += "quotient genus: " + std::to_string(*rep.quotient_genus) + "\n";
    text += "prym dimension: " + std::to_string(*rep.prym_dim) + "\n";
  } else {
    const int gs = hitchin::spectral_genus(model);
    result = Json{{"spectral_genus", gs}, {"ramification_count", ram}};
    text += "spectral genus: " + std::to_string(gs) + "\n";
    text += "top-coefficient zeros: " + std::to_string(ram) + "\n";
    if (g.kind == hitchin::GroupKind::SL) {
      result["prym_dim"] = gs - cli.genus;
      text += "prym dimension: " + std::to_string(gs - cli.genus) + "\n";
    }
    if (g.kind == hitchin::GroupKind::Sp || g.kind == hitchin::GroupKind::SO_odd) {
      const int gq = hitchin::quotient_genus_ramified(gs, ram);
      result["sigma_fixed_points"] = ram;
      result["quotient_genus"] = gq;
      result["prym_dim"] = gs - gq;
      text += "sigma-quotient genus: " + std::to_string(gq) + "\n";
      text += "prym dimension: " + std::to_string(gs - gq) + "\n";
    }
  }
  print_envelope(cli, Json{{"group", cli.group}, {"n", cli.n}, {"genus", cli.genus}}, result,
                 warnings, text);
  return 0;
}

int run_realform(const Cli& cli) {
  const hitchin::RealFormDescriptor f = hitchin::parse_real_form(cli.form_name, cli.params);
  const hitchin::RowReport rep = hitchin::verify_row(f);
  Json checks = Json::array();
  for (const auto& c : rep.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}});
  const Json result{{"form", f.display()},
                    {"row", f.row_label()},
                    {"parent", hitchin::json_of(f.parent())},
                    {"checks", checks},
                    {"all_pass", rep.all_pass},
                    {"compact_dim", rep.compact_dim},
                    {"expected_compact_dim", rep.expected_compact_dim},
                    {"eigenspace_dims", rep.eigendims}};
  std::string text = f.display() + " (" + f.row_label() + ")\n";
  text += "maximal compact dimension: " + std::to_string(rep.compact_dim) + " (expected " +
          std::to_string(rep.expected_compact_dim) + ")\n";
  text += "eigenspace dims (h, m, im, ih): " + std::to_string(rep.eigendims[0]) + ", " +
          std::to_string(rep.eigendims[1]) + ", " + std::to_string(rep.eigendims[2]) + ", " +
          std::to_string(rep.eigendims[3]) + "\n";
  for (const auto& c : rep.checks) text += "  " + c.name + ": " + pass_fail(c.pass) + "\n";
  text += std::string("all checks: ") + pass_fail(rep.all_pass) + "\n";
  print_envelope(cli, Json{{"name", cli.form_name}, {"params", cli.params}}, result, {}, text);
  return 0;
}

int run_validate(const Cli& cli) {
  const Json doc = hitchin::load_json_file(cli.input);
  if (!doc.contains("group") || !doc.at("group").is_string() || !doc.contains("n") ||
      !doc.at("n").is_number_integer())
    throw hitchin::parse_error("validate input needs string 'group' and integer 'n'");
  const hitchin::GroupDescriptor g{hitchin::parse_group(doc.at("group").get<std::string>()),
                                   doc.at("n").get<int>()};
  std::vector<std::string> warnings;
  Json result;
  std::string text = "characteristic data for " + g.display() + "\n";
  hitchin::CharStructureReport rep{};
  if (doc.contains("p")) {
    const hitchin::BiSpectralPolynomial p = hitchin::spectral_from(doc.at("p"));
    rep = hitchin::validate_char_structure(g, p);
    const hitchin::SmoothnessReport sm = hitchin::affine_smoothness(p);
    Json singular = Json::array();
    for (const auto& r : sm.singular_w) singular.push_back(hitchin::json_of(r));
    Json repeated = Json::array();
    for (const auto& q : sm.repeated_factors) repeated.push_back(hitchin::json_of(q));
    result["smoothness"] = Json{{"smooth", sm.smooth},
                                {"disc_zero", sm.disc_zero},
                                {"repeated_factors", repeated},
                                {"singular_w", singular},
                                {"scope", sm.scope}};
    warnings.push_back("smoothness assessed on the " + sm.scope);
    text += "curve: " + p.str() + "\n";
    text += std::string("affine smoothness: ") + (sm.smooth ? "smooth" : "singular") + "\n";
  } else if (doc.contains("char")) {
    rep = hitchin::validate_char_structure(g, hitchin::unipoly_from(doc.at("char")));
  } else {
    throw hitchin::parse_error("validate input needs a 'p' or 'char' entry");
  }
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}});
    text += "  " + c.name + ": " + pass_fail(c.pass) + "\n";
  }
  result["checks"] = checks;
  result["ok"] = rep.ok;
  if (rep.pfaffian_sqrt) {
    result["pfaffian_sqrt"] = hitchin::json_of(*rep.pfaffian_sqrt);
    text += "pfaffian square root: " + rep.pfaffian_sqrt->str("w") + "\n";
  }
  text += std::string("structure: ") + pass_fail(rep.ok) + "\n";
  print_envelope(cli,
                 Json{{"input", cli.input}, {"group", doc.at("group")}, {"n", doc.at("n")}},
                 result, warnings, text);
  return 0;
}

int run_pushforward(const Cli& cli) {
  const Json doc = hitchin::load_json_file(cli.input);
  const hitchin::PushforwardResult r = [&]() {
    if (doc.contains("first") && doc.contains("second")) {
      hitchin::FractionalIdeal a = hitchin::ideal_from(doc.at("first"));
      hitchin::FractionalIdeal b = hitchin::ideal_from(doc.at("second"));
      return hitchin::pushforward_rank2({a.algebra, std::move(a), std::move(b)});
    }
    return hitchin::pushforward_line(hitchin::ideal_from(doc));
  }();
  const Json result{{"higgs", hitchin::json_of(r.higgs)},
                    {"basis", hitchin::json_of(r.basis.rows)},
                    {"pivot_cols", r.basis.pivot_cols}};
  std::string text = "multiplication-by-eta matrix:\n" + matrix_text(r.higgs.phi);
  text += "canonical basis rows:\n" + matrix_text(r.basis.rows);
  print_envelope(cli, Json{{"input", cli.input}}, result, r.warnings, text);
  return 0;
}

int run_eigenline(const Cli& cli) {
  const hitchin::HiggsMatrix m = hitchin::higgs_from(hitchin::load_json_file(cli.input));
  const hitchin::FractionalIdeal ideal = hitchin::eigenline(m);
  const Json result{{"ideal", hitchin::json_of(ideal)}};
  std::string text = "spectral curve: " + ideal.algebra.p.str() + "\n";
  text += "eigenline generators (coordinates in 1, eta, ..., eta^{n-1}):\n";
  for (const auto& g : ideal.generators) text += "  " + element_text(g) + "\n";
  print_envelope(cli, Json{{"input", cli.input}}, result, {}, text);
  return 0;
}

int run_fixedpoint(const Cli& cli) {
  const Json doc = hitchin::load_json_file(cli.input);
  if (!doc.contains("form") || !doc.contains("higgs"))
    throw hitchin::parse_error("check-fixedpoint input needs 'form' and 'higgs'");
  const hitchin::RealFormDescriptor form = hitchin::realform_from(doc.at("form"));
  const hitchin::HiggsMatrix higgs = hitchin::higgs_from(doc.at("higgs"));
  std::optional<hitchin::RatMat> candidate;
  if (doc.contains("candidate")) candidate = hitchin::ratmat_from(doc.at("candidate"));
  const hitchin::FixedPointReport rep = hitchin::fixed_point_check(form, higgs, candidate);
  Json result{{"status", rep.status},
              {"identities", rep.identities},
              {"failures", rep.failures}};
  if (rep.witness) result["witness"] = hitchin::json_of(*rep.witness);
  std::string text = form.display() + " fixed-point check: " + rep.status + "\n";
  for (const auto& i : rep.identities) text += "  requires " + i + "\n";
  for (const auto& f : rep.failures) text += "  fails " + f + "\n";
  print_envelope(cli, Json{{"input", cli.input}, {"form", hitchin::json_of(form)}}, result, {},
                 text);
  return 0;
}

int run_norm(const Cli& cli) {
  const hitchin::Divisor d = hitchin::divisor_from(hitchin::load_json_file(cli.input));
  const hitchin::BaseDivisor nd = hitchin::norm(d);
  Json pts = Json::array();
  std::string text = "norm of the divisor:\n";
  for (const auto& [w, m] : nd.support) {
    pts.push_back(Json{{"w", hitchin::json_of(w)}, {"mult", m}});
    text += "  " + std::to_string(m) + " x (w = " + w.str() + ")\n";
  }
  if (nd.support.empty()) text += "  0\n";
  const Json result{{"degree", hitchin::degree(d)},
                    {"norm", pts},
                    {"norm_degree", hitchin::degree(nd)}};
  text += "degree: " + std::to_string(hitchin::degree(d)) +
          ", norm degree: " + std::to_string(hitchin::degree(nd)) + "\n";
  print_envelope(cli, Json{{"input", cli.input}}, result, {}, text);
  return 0;
}

int run_prym_check(const Cli& cli) {
  const hitchin::Divisor d = hitchin::divisor_from(hitchin::load_json_file(cli.input));
  const hitchin::PrymReport rep = hitchin::prym_membership_degreewise(d);
  const Json result{{"degree", rep.degree},
                    {"norm_degree", rep.norm_degree},
                    {"prym_representative", rep.prym_representative},
                    {"order_two_necessary", rep.order_two_necessary}};
  std::vector<std::string> warnings;
  if (!rep.caveat.empty()) warnings.push_back(rep.caveat);
  std::string text = "divisor degree: " + std::to_string(rep.degree) + "\n";
  text += "norm degree: " + std::to_string(rep.norm_degree) + "\n";
  text += std::string("prym representative (degree level): ") +
          (rep.prym_representative ? "yes" : "no") + "\n";
  text += std::string("order-two necessary conditions: ") +
          (rep.order_two_necessary ? "hold" : "fail") + "\n";
  print_envelope(cli, Json{{"input", cli.input}}, result, warnings, text);
  return 0;
}

int run_verify_all(const Cli& cli) {
  const hitchin::Mutation mutation = hitchin::parse_mutation(cli.mutate);
  const hitchin::BatteryResult battery = hitchin::run_all(
      cli.seed, cli.corpus, mutation, [](const hitchin::SuiteResult& s, long ms) {
        std::cerr << s.name << ": " << s.checks << " checks, " << s.failures << " failures, "
                  << ms << " ms\n";
      });
  Json suites = Json::array();
  std::string text;
  for (const auto& s : battery.suites) {
    suites.push_back(Json{{"name", s.name},
                          {"checks", s.checks},
                          {"failures", s.failures},
                          {"pass", s.pass()},
                          {"notes", s.notes}});
    text += s.name + ": " + std::to_string(s.checks) + " checks, " +
            std::to_string(s.failures) + " failures\n";
    for (const auto& n : s.notes) text += "    " + n + "\n";
  }
  const Json result{{"seed", cli.seed},
                    {"mutation", hitchin::mutation_name(mutation)},
                    {"suites", suites},
                    {"total_checks", battery.total_checks()},
                    {"total_failures", battery.total_failures()},
                    {"all_pass", battery.all_pass()}};
  text += std::string("battery: ") + (battery.all_pass() ? "pass" : "FAIL") + " (" +
          std::to_string(battery.total_checks()) + " checks, " +
          std::to_string(battery.total_failures()) + " failures)\n";
  print_envelope(cli,
                 Json{{"seed", cli.seed}, {"mutation", hitchin::mutation_name(mutation)}},
                 result, {}, text);
  return battery.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  CLI::App app{"exact spectral data of Higgs bundles: dimensions, curves, real forms, and the "
               "line-bundle correspondence over affine local models"};
  app.require_subcommand(1);
  app.add_option("--format", cli.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--corpus", cli.corpus, "fixture directory")->envname("HITCHIN_CORPUS_DIR");

  auto numeric = [&](CLI::App* sub) {
    sub->add_option("--group", cli.group, "gl, sl, sp, so_odd, so_even")->required();
    sub->add_option("--n", cli.n, "group parameter")->required();
    sub->add_option("--genus", cli.genus, "base-curve genus")->required();
    sub->fallthrough();
  };
  numeric(app.add_subcommand("dims", "Hitchin base and moduli dimensions"));
  numeric(app.add_subcommand("curve", "spectral-curve genus and ramification data"));

  auto* realform = app.add_subcommand("realform", "verify one real-form table row");
  realform->add_option("--name", cli.form_name, "row label, e.g. 'SU(p,q)'")->required();
  realform->add_option("--params", cli.params, "row parameters")->required();
  realform->fallthrough();

  auto file_input = [&](CLI::App* sub) {
    sub->add_option("--input", cli.input, "input file")->required();
    sub->fallthrough();
  };
  file_input(app.add_subcommand("validate", "characteristic-structure and smoothness checks"));
  file_input(app.add_subcommand("pushforward", "module to multiplication-by-eta matrix"));
  file_input(app.add_subcommand("eigenline", "matrix to its eigenline module"));
  file_input(app.add_subcommand("check-fixedpoint",
                                "involution fixed-point predicate for a Higgs field"));
  file_input(app.add_subcommand("norm", "base-divisor norm of a spectral divisor"));
  file_input(app.add_subcommand("prym-check", "degree-level Prym membership conditions"));

  auto* verify = app.add_subcommand("verify-all", "run the full invariant battery");
  verify->add_option("--seed", cli.seed, "sampling seed");
  verify->add_option("--mutate", cli.mutate, "none or pfaffian-sign");
  verify->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }
  cli.command = app.get_subcommands().front()->get_name();

  try {
    if (cli.command == "dims") return run_dims(cli);
    if (cli.command == "curve") return run_curve(cli);
    if (cli.command == "realform") return run_realform(cli);
    if (cli.command == "validate") return run_validate(cli);
    if (cli.command == "pushforward") return run_pushforward(cli);
    if (cli.command == "eigenline") return run_eigenline(cli);
    if (cli.command == "check-fixedpoint") return run_fixedpoint(cli);
    if (cli.command == "norm") return run_norm(cli);
    if (cli.command == "prym-check") return run_prym_check(cli);
    if (cli.command == "verify-all") return run_verify_all(cli);
    print_error(cli, "internal", "unhandled subcommand " + cli.command);
    return 4;
  } catch (const hitchin::parse_error& e) {
    print_error(cli, "parse", e.what());
    return 3;
  } catch (const hitchin::domain_error& e) {
    print_error(cli, "domain", e.what());
    return 2;
  } catch (const hitchin::internal_error& e) {
    print_error(cli, "internal", e.what());
    return 4;
  } catch (const std::exception& e) {
    print_error(cli, "internal", e.what());
    return 4;
  }
}
