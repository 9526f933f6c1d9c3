#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "semistar/extension.hpp"
#include "semistar/sample.hpp"

using json = nlohmann::json;
using namespace sst;

namespace {

struct SchemaError : std::runtime_error {
  SchemaError(const std::string& path, const std::string& msg)
      : std::runtime_error(path + ": " + msg) {}
};

struct RunConfig {
  unsigned long seed = 1;
  int pool_size = 200;
  long prime_bound = 97;
  int degree_bound = 8;
};

void check_keys(const json& j, const std::string& path,
                const std::vector<std::string>& allowed,
                const std::vector<std::string>& required) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  for (const auto& [k, v] : j.items())
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
      throw SchemaError(path + "/" + k, "unknown key");
  for (const auto& k : required)
    if (!j.contains(k)) throw SchemaError(path + "/" + k, "missing key");
}

long get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<long>();
}

PrimeIdeal parse_prime(const json& j, const std::string& path,
                       const Domain* global, long bound) {
  check_keys(j, path, {"p", "index"}, {"p"});
  long p = get_int(j.at("p"), path + "/p");
  long index = j.contains("index") ? get_int(j.at("index"), path + "/index") : 0;
  auto primes = primes_above(global, p, bound);
  if (index < 0 || index >= static_cast<long>(primes.size()))
    throw SchemaError(path + "/index", "no prime with this index above " +
                                           std::to_string(p));
  return primes[static_cast<size_t>(index)];
}

const Domain* parse_domain_inner(const json& j, const std::string& path,
                                 const RunConfig& cfg) {
  if (!j.is_object() || !j.contains("kind"))
    throw SchemaError(path + "/kind", "missing key");
  std::string kind = j.at("kind").is_string() ? j.at("kind").get<std::string>()
                                              : throw SchemaError(path + "/kind",
                                                                  "expected a string");
  Registry& R = Registry::get();
  if (kind == "integers") {
    check_keys(j, path, {"kind"}, {});
    return R.integers();
  }
  if (kind == "localized_integers") {
    check_keys(j, path, {"kind", "S"}, {"S"});
    if (!j.at("S").is_array()) throw SchemaError(path + "/S", "expected an array");
    std::vector<long> S;
    for (size_t i = 0; i < j.at("S").size(); ++i)
      S.push_back(get_int(j.at("S")[i], path + "/S/" + std::to_string(i)));
    return R.localized_integers(std::move(S));
  }
  if (kind == "quadratic_order") {
    check_keys(j, path, {"kind", "d", "conductor"}, {"d"});
    long d = get_int(j.at("d"), path + "/d");
    long f = j.contains("conductor") ? get_int(j.at("conductor"), path + "/conductor") : 1;
    return R.quadratic_order(d, f);
  }
  if (kind == "localized_order") {
    check_keys(j, path, {"kind", "d", "conductor", "at"}, {"d", "at"});
    long d = get_int(j.at("d"), path + "/d");
    long f = j.contains("conductor") ? get_int(j.at("conductor"), path + "/conductor") : 1;
    const Domain* global = R.quadratic_order(d, f);
    std::vector<PrimeIdeal> at;
    const json& a = j.at("at");
    if (a.is_array()) {
      for (size_t i = 0; i < a.size(); ++i)
        at.push_back(parse_prime(a[i], path + "/at/" + std::to_string(i), global,
                                 cfg.prime_bound));
    } else {
      at.push_back(parse_prime(a, path + "/at", global, cfg.prime_bound));
    }
    return R.localized_order(global, std::move(at));
  }
  throw SchemaError(path + "/kind", "unknown domain kind: " + kind);
}

const Domain* parse_domain(const json& j, const std::string& path,
                           const RunConfig& cfg) {
  check_keys(j, path, {"domain"}, {"domain"});
  return parse_domain_inner(j.at("domain"), path + "/domain", cfg);
}

SemistarOp parse_op_inner(const json& j, const std::string& path,
                          const Domain* D, const RunConfig& cfg);

SemistarOp parse_parent(const json& j, const std::string& path,
                        const RunConfig& cfg) {
  check_keys(j, path, {"domain", "op"}, {"domain", "op"});
  const Domain* PD = parse_domain_inner(j.at("domain"), path + "/domain", cfg);
  return parse_op_inner(j.at("op"), path + "/op", PD, cfg);
}

SemistarOp parse_op_inner(const json& j, const std::string& path,
                          const Domain* D, const RunConfig& cfg) {
  if (!j.is_object() || !j.contains("kind"))
    throw SchemaError(path + "/kind", "missing key");
  std::string kind = j.at("kind").is_string() ? j.at("kind").get<std::string>()
                                              : throw SchemaError(path + "/kind",
                                                                  "expected a string");
  if (kind == "identity") {
    check_keys(j, path, {"kind"}, {});
    return make_identity(D);
  }
  if (kind == "v") {
    check_keys(j, path, {"kind"}, {});
    return make_divisorial(D);
  }
  if (kind == "spectral") {
    check_keys(j, path, {"kind", "primes"}, {"primes"});
    if (!j.at("primes").is_array())
      throw SchemaError(path + "/primes", "expected an array");
    std::vector<PrimeIdeal> primes;
    for (size_t i = 0; i < j.at("primes").size(); ++i)
      primes.push_back(parse_prime(j.at("primes")[i],
                                   path + "/primes/" + std::to_string(i),
                                   D->global_ring(), cfg.prime_bound));
    return make_spectral(D, std::move(primes));
  }
  if (kind == "overring_family" || kind == "valuation_family") {
    check_keys(j, path, {"kind", "overrings"}, {"overrings"});
    if (!j.at("overrings").is_array())
      throw SchemaError(path + "/overrings", "expected an array");
    std::vector<const Domain*> family;
    for (size_t i = 0; i < j.at("overrings").size(); ++i)
      family.push_back(parse_domain_inner(
          j.at("overrings")[i], path + "/overrings/" + std::to_string(i), cfg));
    return kind == "overring_family"
               ? make_overring_family(D, std::move(family))
               : make_valuation_family(D, std::move(family));
  }
  if (kind == "induced") {
    check_keys(j, path, {"kind", "parent"}, {"parent"});
    return make_induced(D, parse_parent(j.at("parent"), path + "/parent", cfg));
  }
  if (kind == "restricted") {
    check_keys(j, path, {"kind", "parent"}, {"parent"});
    return make_restricted(D, parse_parent(j.at("parent"), path + "/parent", cfg));
  }
  throw SchemaError(path + "/kind", "unknown operation kind: " + kind);
}

SemistarOp parse_op(const json& j, const std::string& path, const Domain* D,
                    const RunConfig& cfg) {
  check_keys(j, path, {"op"}, {"op"});
  return parse_op_inner(j.at("op"), path + "/op", D, cfg);
}

json load_json(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw SchemaError(file, "cannot open file");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SchemaError(file, e.what());
  }
  return j;
}

const char* tri_text(Tri t) { return tri_str(t); }

json prime_json(const PrimeIdeal& P) {
  return json{{"p", P.p},
              {"index", P.index},
              {"contains_conductor", P.contains_conductor},
              {"ideal", P.under.str()}};
}

json report_json(const TheoremReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back(json{{"claim", c.claim},
                          {"paper_quote", c.statement},
                          {"verdict", c.verdict},
                          {"witness", c.witness}});
  return json{{"theorem_id", rep.theorem_id},
              {"instance", rep.instance},
              {"checks", checks},
              {"seed", rep.seed}};
}

int report_exit(const TheoremReport& rep) {
  bool unknown = false;
  for (const auto& c : rep.checks) {
    if (c.verdict == "FAIL") return 1;
    if (c.verdict == "UNKNOWN") unknown = true;
  }
  return unknown ? 2 : 0;
}

int tri_exit(Tri t) {
  switch (t) {
    case Tri::yes: return 0;
    case Tri::no: return 1;
    case Tri::unknown: return 2;
  }
  return 2;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

TheoremInstance parse_instance(const json& j, const RunConfig& cfg) {
  check_keys(j, "#",
             {"domain", "op", "T", "seed", "pool_size", "degree_bound"},
             {"domain"});
  TheoremInstance inst;
  inst.D = parse_domain_inner(j.at("domain"), "#/domain", cfg);
  if (j.contains("op")) inst.op = parse_op_inner(j.at("op"), "#/op", inst.D, cfg);
  if (j.contains("T")) inst.T = parse_domain_inner(j.at("T"), "#/T", cfg);
  inst.seed = j.contains("seed")
                  ? static_cast<unsigned long>(get_int(j.at("seed"), "#/seed"))
                  : cfg.seed;
  inst.pool_size = j.contains("pool_size")
                       ? static_cast<int>(get_int(j.at("pool_size"), "#/pool_size"))
                       : std::min(cfg.pool_size, 60);
  inst.degree_bound =
      j.contains("degree_bound")
          ? static_cast<int>(get_int(j.at("degree_bound"), "#/degree_bound"))
          : cfg.degree_bound;
  return inst;
}

// One entry of the bundled suite: named report plus the pinned expectation
// that every check lands on PASS.
struct SuiteEntry {
  std::string name;
  TheoremReport report;
};

std::vector<SuiteEntry> run_paper_examples(const RunConfig& cfg) {
  Registry& R = Registry::get();
  const Domain* Z = R.integers();
  const Domain* Z23 = R.localized_integers({2, 3});
  const Domain* Zi = R.quadratic_order(-1, 1);
  const Domain* Z3i = R.quadratic_order(-1, 3);
  std::vector<SuiteEntry> out;

  {  // non-integrally-closed instance decided through one unramified prime
    TheoremInstance inst;
    inst.D = Z3i;
    inst.op = make_spectral(Z3i, {primes_above(Z3i, 5).front()});
    inst.seed = cfg.seed;
    TheoremReport rep;
    rep.theorem_id = "SPECTRAL_Q5";
    rep.instance = inst.D->name + "," + inst.op->name;
    rep.seed = inst.seed;
    PmdVerdict v = pmd_decide(inst.D, *inst.op);
    rep.checks.push_back(TheoremCheck{
        "spectral operation over an unramified prime qualifies",
        "pmd decision is YES although the domain is not integrally closed",
        v.status == PmdVerdict::Status::YES &&
                inst.D->is_integrally_closed == Tri::no
            ? "PASS"
            : "FAIL",
        pmd_status_str(v.status)});
    out.push_back({"spectral-q5", std::move(rep)});
  }
  {  // descent fails without flatness
    const Domain* Dloc = R.localized_order(Z3i, primes_above(Z3i, 3));
    const Domain* Tloc = R.localized_order(Zi, primes_above(Zi, 3));
    TheoremInstance inst;
    inst.D = Dloc;
    inst.T = Tloc;
    inst.op = make_overring_family(Dloc, {Tloc});
    inst.seed = cfg.seed;
    out.push_back({"re9", verify_theorem("RE9", inst)});
  }
  {  // ascent to an overring
    TheoremInstance inst;
    inst.D = Z23;
    inst.op = make_identity(Z23);
    inst.T = R.localized_integers({2});
    inst.seed = cfg.seed;
    out.push_back({"pr5", verify_theorem("PROP_PR5", inst)});
  }
  {  // flat descent along a localization
    const Domain* Tloc = R.localized_order(Z3i, primes_above(Z3i, 5));
    TheoremInstance inst;
    inst.D = Z3i;
    inst.T = Tloc;
    inst.op = make_identity(Tloc);
    inst.seed = cfg.seed;
    out.push_back({"pr8", verify_theorem("PROP_PR8", inst)});
  }
  {  // quadratic extension pair: divisorial decision transfers, and the
     // valuation-family extension qualifies upstairs
    ExtensionPair pair = make_extension_pair(
        Z, Zi, ExtensionPair::Relation::T_INTEGRAL_CLOSURE_OF_D, cfg.prime_bound);
    TheoremReport rep;
    rep.theorem_id = "SEC3_PAIR";
    rep.instance = Z->name + ",T=" + Zi->name;
    rep.seed = cfg.seed;
    AscentDescentReport ad = pvmd_ascent_descent_check(pair);
    rep.checks.push_back(TheoremCheck{
        "divisorial decision transfers across the extension",
        "the base and its integral closure get the same divisorial verdict",
        ad.agree == Tri::yes ? "PASS" : (ad.agree == Tri::no ? "FAIL" : "UNKNOWN"),
        std::string(pmd_status_str(ad.down.status)) + "/" +
            pmd_status_str(ad.up.status)});
    std::vector<PrimeIdeal> delta;
    for (long p : {2L, 3L})
      for (const auto& P : primes_above(Z, p)) delta.push_back(P);
    SemistarOp over = make_overline_extension(make_spectral(Z, delta), pair);
    PmdVerdict up = pmd_decide(Zi, over);
    rep.checks.push_back(TheoremCheck{
        "the extended valuation family qualifies upstairs",
        "pmd decision for the overring under the extended operation is YES",
        up.status == PmdVerdict::Status::YES ? "PASS" : "FAIL",
        pmd_status_str(up.status)});
    out.push_back({"sec3-pair", std::move(rep)});
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact semistar-operation calculus over Q and Q(sqrt d)"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "deterministic sample seed");
  app.add_option("--pool-size", cfg.pool_size, "sample pool size");
  app.add_option("--prime-bound", cfg.prime_bound, "largest rational prime considered");
  app.add_option("--degree-bound", cfg.degree_bound, "polynomial degree bound");
  std::string config_file;
  app.add_option("--config", config_file, "run configuration JSON file");

  std::string domain_file, op_file, ideal_text, elem_text, theorem_id,
      instance_file, suite, mode;
  long prime_p = 0;

  CLI::App* c_closure = app.add_subcommand("closure", "canonical closure of an ideal");
  c_closure->add_option("--domain", domain_file)->required();
  c_closure->add_option("--op", op_file)->required();
  c_closure->add_option("--ideal", ideal_text)->required();

  CLI::App* c_spec = app.add_subcommand("spectrum", "maximal ideals above a prime");
  c_spec->add_option("--domain", domain_file)->required();
  c_spec->add_option("--p", prime_p)->required();

  CLI::App* c_inv = app.add_subcommand("invertible", "closure-invertibility of an ideal");
  c_inv->add_option("--domain", domain_file)->required();
  c_inv->add_option("--op", op_file)->required();
  c_inv->add_option("--ideal", ideal_text)->required();

  CLI::App* c_pmd = app.add_subcommand("pmd", "decide the multiplication-domain property");
  c_pmd->add_option("--domain", domain_file)->required();
  c_pmd->add_option("--op", op_file)->required();

  CLI::App* c_na = app.add_subcommand("nagata", "polynomial localization queries");
  CLI::App* c_na_member = c_na->add_subcommand("member", "membership of a rational function");
  CLI::App* c_na_unit = c_na->add_subcommand("unit", "unit test for a rational function");
  for (CLI::App* c : {c_na_member, c_na_unit}) {
    c->add_option("--domain", domain_file)->required();
    c->add_option("--op", op_file)->required();
    c->add_option("--elem", elem_text)->required();
    c->add_option("--mode", mode)->check(CLI::IsMember({"certified", "local"}));
  }
  c_na->require_subcommand(1);

  CLI::App* c_kr = app.add_subcommand("kronecker", "valuation-hull queries");
  CLI::App* c_kr_member = c_kr->add_subcommand("member", "membership of a rational function");
  c_kr_member->add_option("--domain", domain_file)->required();
  c_kr_member->add_option("--op", op_file)->required();
  c_kr_member->add_option("--elem", elem_text)->required();
  c_kr_member->add_option("--mode", mode)->check(CLI::IsMember({"valuation", "bounded"}));
  c_kr->require_subcommand(1);

  CLI::App* c_verify = app.add_subcommand("verify", "run a theorem verifier");
  c_verify->add_option("--theorem", theorem_id)->required();
  c_verify->add_option("--instance", instance_file)->required();

  CLI::App* c_report = app.add_subcommand("report", "run a bundled suite");
  c_report->add_option("--suite", suite)->required()
      ->check(CLI::IsMember({"paper-examples"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 3 : 0;
  }

  try {
    if (!config_file.empty()) {
      json j = load_json(config_file);
      check_keys(j, "#", {"seed", "pool_size", "prime_bound", "degree_bound"}, {});
      if (j.contains("seed"))
        cfg.seed = static_cast<unsigned long>(get_int(j.at("seed"), "#/seed"));
      if (j.contains("pool_size"))
        cfg.pool_size = static_cast<int>(get_int(j.at("pool_size"), "#/pool_size"));
      if (j.contains("prime_bound"))
        cfg.prime_bound = get_int(j.at("prime_bound"), "#/prime_bound");
      if (j.contains("degree_bound"))
        cfg.degree_bound = static_cast<int>(get_int(j.at("degree_bound"), "#/degree_bound"));
    }

    if (c_closure->parsed()) {
      const Domain* D = parse_domain(load_json(domain_file), "#", cfg);
      SemistarOp op = parse_op(load_json(op_file), "#", D, cfg);
      FractionalIdeal E = ideal_parse(D, ideal_text);
      std::cout << closure(op, E).str() << "\n";
      return 0;
    }
    if (c_spec->parsed()) {
      const Domain* D = parse_domain(load_json(domain_file), "#", cfg);
      json out = json::array();
      for (const auto& P : primes_above(D->global_ring(), prime_p, cfg.prime_bound))
        if (!D->localized() || D->survives(P)) out.push_back(prime_json(P));
      emit(json{{"p", prime_p}, {"primes", out}});
      return 0;
    }
    if (c_inv->parsed()) {
      const Domain* D = parse_domain(load_json(domain_file), "#", cfg);
      SemistarOp op = parse_op(load_json(op_file), "#", D, cfg);
      InvertReport rep = star_invertible(op, ideal_parse(D, ideal_text));
      json out{{"invertible", rep.invertible},
               {"definition_route", tri_text(rep.definition_route)},
               {"local_route", tri_text(rep.local_route)},
               {"nagata_route", tri_text(rep.nagata_route)}};
      if (rep.blocking_prime) out["blocking_prime"] = prime_json(*rep.blocking_prime);
      emit(out);
      return rep.invertible ? 0 : 1;
    }
    if (c_pmd->parsed()) {
      const Domain* D = parse_domain(load_json(domain_file), "#", cfg);
      SemistarOp op = parse_op(load_json(op_file), "#", D, cfg);
      PmdVerdict v = pmd_decide(D, op);
      json out{{"status", pmd_status_str(v.status)}, {"note", v.note}};
      if (v.witness) out["witness"] = prime_json(*v.witness);
      json ev = json::array();
      for (const auto& Q : v.evidence) ev.push_back(prime_json(Q));
      out["evidence"] = ev;
      emit(out);
      return v.status == PmdVerdict::Status::YES
                 ? 0
                 : (v.status == PmdVerdict::Status::NO ? 1 : 2);
    }
    if (c_na_member->parsed() || c_na_unit->parsed()) {
      const Domain* D = parse_domain(load_json(domain_file), "#", cfg);
      SemistarOp op = parse_op(load_json(op_file), "#", D, cfg);
      RationalFunction u = ratfun_parse(D->field, elem_text);
      NaMode m = mode == "certified" ? NaMode::CERTIFIED : NaMode::LOCAL;
      Tri t = c_na_member->parsed() ? na_membership(op, u, m) : na_unit(op, u, m);
      emit(json{{"verdict", tri_text(t)}, {"mode", mode.empty() ? "local" : mode}});
      return tri_exit(t);
    }
    if (c_kr_member->parsed()) {
      const Domain* D = parse_domain(load_json(domain_file), "#", cfg);
      SemistarOp op = parse_op(load_json(op_file), "#", D, cfg);
      RationalFunction u = ratfun_parse(D->field, elem_text);
      KrMode m = mode == "bounded" ? KrMode::BOUNDED_H : KrMode::VALUATION_EXACT;
      Tri t = kr_membership(op, u, m,
                            sample_polys(D, cfg.pool_size, cfg.degree_bound, cfg.seed));
      emit(json{{"verdict", tri_text(t)},
                {"mode", mode.empty() ? "valuation" : mode}});
      return tri_exit(t);
    }
    if (c_verify->parsed()) {
      TheoremInstance inst = parse_instance(load_json(instance_file), cfg);
      TheoremReport rep = verify_theorem(theorem_id, inst);
      emit(report_json(rep));
      return report_exit(rep);
    }
    if (c_report->parsed()) {
      json entries = json::array();
      int rc = 0;
      for (const auto& e : run_paper_examples(cfg)) {
        int erc = report_exit(e.report);
        rc = std::max(rc, erc);
        json r = report_json(e.report);
        r["name"] = e.name;
        r["passed"] = erc == 0;
        entries.push_back(std::move(r));
      }
      emit(json{{"suite", suite}, {"entries", entries}, {"seed", cfg.seed}});
      return rc;
    }
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 3;
  } catch (const UnknownTheoremIdError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
