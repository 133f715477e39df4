#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pocfrob/census.hpp"
#include "pocfrob/diophantine.hpp"
#include "pocfrob/realize.hpp"
#include "pocfrob/spec_text.hpp"

namespace {

using namespace pocfrob;

void print_census_table(const OrderCensus& c, const std::string& format) {
  if (format == "json") {
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [d, n] : c.entries) counts[std::to_string(d)] = n;
    nlohmann::json out = {{"group_order", c.group_order}, {"counts", counts}};
    std::cout << out.dump(2) << "\n";
    return;
  }
  for (const auto& [d, n] : c.entries) std::cout << d << "\t" << n << "\n";
}

// Deterministic small realization of a standalone complement, scanning the
// catalog dimensions and the smallest suitable primes.
MatrixAction realize_standalone(const ComplementSpec& spec) {
  std::vector<u32> dims;
  switch (spec.kind) {
    case ComplementSpec::Kind::Cyclic: dims = {1, 2}; break;
    case ComplementSpec::Kind::SL2_3:
    case ComplementSpec::Kind::SL2_5: dims = {2}; break;
    default: dims = {2, 4}; break;
  }
  for (u32 r : dims) {
    for (u64 p = 3; p < 300; p += 2) {
      if (!is_prime(p) || spec.order() % p == 0) continue;
      if (ipow(p, r) > 100000) break;
      if (auto act = realize_complement(spec, r, p)) return *act;
    }
  }
  throw std::domain_error("no matrix realization found at the probed dimensions");
}

int run(int argc, char** argv) {
  CLI::App app{"Census and classification of Frobenius groups with perfect order classes"};
  app.require_subcommand(1);

  u64 limit = kDefaultCensusLimit;
  app.add_option("--limit", limit, "brute-force group-order limit")
      ->envname("POCFROB_LIMIT")
      ->capture_default_str();

  // census
  auto* census_cmd = app.add_subcommand("census", "enumerate the census up to a bound");
  u64 census_max = 15000;
  std::string census_format = "tsv";
  u64 crosscheck_limit = 0;
  census_cmd->add_option("--max", census_max, "largest group order")->capture_default_str();
  census_cmd->add_option("--format", census_format, "tsv, json or markdown")
      ->check(CLI::IsMember({"tsv", "json", "markdown"}))
      ->capture_default_str();
  census_cmd->add_option("--crosscheck", crosscheck_limit,
                         "verify rows up to this order against the brute-force engine");

  // check
  auto* check_cmd = app.add_subcommand("check", "POC verdict for a spec");
  std::string check_spec;
  check_cmd->add_option("spec", check_spec, "group spec, e.g. \"H(11,1,2):SL(2,5)\"")->required();

  // orders
  auto* orders_cmd = app.add_subcommand("orders", "order-class census of a spec");
  std::string orders_spec;
  bool orders_brute = false;
  std::string orders_format = "table";
  orders_cmd->add_option("spec", orders_spec, "group spec")->required();
  orders_cmd->add_flag("--brute", orders_brute, "use the brute-force matrix engine");
  orders_cmd->add_option("--format", orders_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "bounded Diophantine family solver");
  std::string family_name;
  u64 bound = 0;
  u64 family_q = 0;
  solve_cmd->add_option("family", family_name, "family tag, e.g. DIO240")->required();
  solve_cmd->add_option("--bound", bound, "enumeration bound")->required();
  solve_cmd->add_option("--q", family_q, "odd prime parameter for the 2Q families");

  // embed
  auto* embed_cmd = app.add_subcommand("embed", "search GL(r,p) for a complement");
  u32 embed_dim = 2;
  u64 embed_prime = 0;
  std::string embed_spec;
  bool embed_fpf = false;
  embed_cmd->add_option("--dim", embed_dim, "matrix dimension r")->required();
  embed_cmd->add_option("--prime", embed_prime, "field characteristic p")->required();
  embed_cmd->add_option("--spec", embed_spec, "complement spec")->required();
  embed_cmd->add_flag("--fpf", embed_fpf, "also report fixed-point-freeness");

  // zsigmondy
  auto* zs_cmd = app.add_subcommand("zsigmondy", "primitive prime divisors of a^n + eps*b^n");
  ZsigmondyQuery q;
  zs_cmd->add_option("--a", q.a)->required();
  zs_cmd->add_option("--b", q.b)->required();
  zs_cmd->add_option("--n", q.n)->required();
  zs_cmd->add_option("--eps", q.epsilon, "+1 or -1")->required();

  CLI11_PARSE(app, argc, argv);

  if (census_cmd->parsed()) {
    const auto rows = census_enumerate(census_max);
    RenderFormat f = RenderFormat::Tsv;
    if (census_format == "json") f = RenderFormat::Json;
    if (census_format == "markdown") f = RenderFormat::Markdown;
    std::cout << census_render(rows, f);
    if (crosscheck_limit > 0) {
      const auto report = census_crosscheck(rows, std::min(crosscheck_limit, limit));
      std::cout << "\n";
      for (const auto& e : report) {
        std::cout << "crosscheck " << e.row.order << " " << e.row.structure << ": "
                  << (e.pass() ? "pass" : "FAIL " + e.message) << "\n";
      }
    }
    return 0;
  }

  if (check_cmd->parsed()) {
    const ParsedSpec parsed = parse_spec(check_spec);
    const Verdict v = std::holds_alternative<FrobeniusSpec>(parsed)
                          ? classify(std::get<FrobeniusSpec>(parsed))
                          : classify_complement(std::get<ComplementSpec>(parsed));
    std::cout << "POC: " << (v.poc ? "yes" : "no") << " (" << tag_label(v.justification) << ")\n";
    std::cout << "  " << v.details << "\n";
    return 0;
  }

  if (orders_cmd->parsed()) {
    const ParsedSpec parsed = parse_spec(orders_spec);
    OrderCensus c;
    if (std::holds_alternative<FrobeniusSpec>(parsed)) {
      const auto& s = std::get<FrobeniusSpec>(parsed);
      if (orders_brute) {
        auto act = realize_complement(s.complement, s.kernel.r, s.kernel.p);
        if (!act) throw std::domain_error("complement does not embed in GL(r,p)");
        const ConcreteGroup g = semidirect_product(s.kernel, lift_action(*act, s.kernel.k), limit);
        c = order_census_bruteforce(g, limit);
      } else {
        c = frobenius_census(homocyclic_census(s.kernel.p, s.kernel.k, s.kernel.r),
                             complement_census(s.complement));
      }
    } else {
      const auto& comp = std::get<ComplementSpec>(parsed);
      if (orders_brute) {
        const MatrixAction act = realize_standalone(comp);
        c = order_census_bruteforce(group_from_matrices(act.modulus, action_elements(act)), limit);
      } else {
        c = complement_census(comp);
      }
    }
    print_census_table(c, orders_format);
    return 0;
  }

  if (solve_cmd->parsed()) {
    const auto tag = diophantine_tag_from_name(family_name);
    if (!tag) throw ParseError(0, "unknown family " + family_name);
    DiophantineFamily fam{*tag, family_q == 0 ? std::nullopt : std::optional<u64>(family_q)};
    for (const auto& sol : solve_family(fam, bound)) {
      if (sol.size() == 1) {
        std::cout << sol[0] << "\n";
        continue;
      }
      std::cout << "(";
      for (std::size_t i = 0; i < sol.size(); ++i) std::cout << (i ? "," : "") << sol[i];
      std::cout << ")\n";
    }
    return 0;
  }

  if (embed_cmd->parsed()) {
    const ParsedSpec parsed = parse_spec(embed_spec);
    if (!std::holds_alternative<ComplementSpec>(parsed))
      throw std::domain_error("embed expects a complement spec");
    const auto act = realize_complement(std::get<ComplementSpec>(parsed), embed_dim, embed_prime);
    if (!act) {
      std::cout << "no embedding\n";
      return 0;
    }
    std::cout << "embedding found\n";
    for (const auto& [label, m] : act->generators)
      std::cout << label << " = " << mat_text(m) << "\n";
    if (embed_fpf)
      std::cout << "fixed-point-free: " << (is_fixed_point_free(*act) ? "yes" : "no") << "\n";
    return 0;
  }

  if (zs_cmd->parsed()) {
    const ZsigmondyResult res = zsigmondy(q);
    if (res.exception()) {
      std::cout << "exception\n";
    } else {
      for (std::size_t i = 0; i < res.primitive_primes.size(); ++i)
        std::cout << (i ? " " : "") << res.primitive_primes[i];
      std::cout << "\n";
    }
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
