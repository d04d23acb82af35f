/* canrel — command-line front end for the exact calculus of linear
 * canonical relations.
 *
 * All object I/O is JSON on files or stdin ("-"); rationals are strings.
 * Exit codes: 0 success, 1 verification/recheck failures, 2 malformed
 * input, 3 type mismatch, 4 precondition violated.
 * The environment variable CANREL_MAX_DIM (default 16) caps the ambient
 * dimension of every loaded space. */

#include <CLI11.hpp>

#include "canrel/errors.hpp"
#include "canrel/indexed.hpp"
#include "canrel/json_io.hpp"
#include "canrel/verify.hpp"
#include "canrel/wwpath.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using namespace canrel;

namespace {

struct Ctx {
  uint64_t seed = 1;
  bool extended = false;
  int indent = 2;
  size_t max_dim = 16;
  int rc = 0;  // sticky exit code for reported (non-exceptional) failures
};

std::string slurp(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  ss << in.rdbuf();
  return ss.str();
}

Json load(const std::string& path) { return parse_json_text(slurp(path)); }

void print(const Ctx& ctx, const Json& j) {
  if (ctx.indent >= 0)
    std::cout << j.dump(ctx.indent) << "\n";
  else
    std::cout << j.dump() << "\n";
}

void check_dim(const Ctx& ctx, size_t dim, const std::string& what) {
  if (dim > ctx.max_dim)
    throw PreconditionError(what + " has dimension " + std::to_string(dim) +
                            ", above the CANREL_MAX_DIM cap " +
                            std::to_string(ctx.max_dim));
}

SymplecticSpace load_space(const Ctx& ctx, const std::string& path) {
  SymplecticSpace x = space_from_json(load(path));
  check_dim(ctx, x.dim, "space " + path);
  return x;
}

Subspace load_subspace(const Ctx& ctx, const std::string& path) {
  Subspace s = subspace_from_json(load(path));
  check_dim(ctx, s.ambient(), "ambient of " + path);
  return s;
}

CanonicalRelation load_relation(const Ctx& ctx, const std::string& path) {
  CanonicalRelation f = relation_from_json(load(path));
  check_dim(ctx, f.target.dim, "target of " + path);
  check_dim(ctx, f.source.dim, "source of " + path);
  return f;
}

Path load_path(const Ctx& ctx, const std::string& path) {
  Path p = path_from_json(load(path));
  check_dim(ctx, p.target.dim, "target of " + path);
  check_dim(ctx, p.source.dim, "source of " + path);
  for (const CanonicalRelation& f : p.steps)
    check_dim(ctx, f.target.dim, "intermediate space in " + path);
  return p;
}

size_t env_max_dim() {
  const char* e = std::getenv("CANREL_MAX_DIM");
  if (!e || !*e) return 16;
  char* end = nullptr;
  unsigned long long v = std::strtoull(e, &end, 10);
  if (!end || *end != '\0' || v == 0)
    throw ParseError("CANREL_MAX_DIM must be a positive integer, got: " +
                     std::string(e));
  return (size_t)v;
}

Json failure_to_json(const VerifyFailure& f) {
  return Json{{"suite", f.suite},
              {"law", f.law},
              {"trial", f.trial},
              {"seed", f.seed},
              {"counterexample", f.counterexample}};
}

Json report_to_json(const VerifyReport& r) {
  Json failures = Json::array();
  for (const VerifyFailure& f : r.failures) failures.push_back(failure_to_json(f));
  return Json{{"suite", r.suite},
              {"trials", r.trials},
              {"failures", std::move(failures)},
              {"notes", r.notes},
              {"elapsed_ms", r.elapsed_ms}};
}

int run(Ctx& ctx, int argc, char** argv) {
  CLI::App app{"exact calculus of linear canonical relations"};
  app.require_subcommand(1);
  app.add_option("--seed", ctx.seed, "seed for randomized commands")
      ->capture_default_str();
  app.add_flag("--extended-indices", ctx.extended,
               "admit negative indices on indexed morphisms");
  app.add_option("--json-indent", ctx.indent,
                 "indent for JSON output; negative means compact")
      ->capture_default_str();

  /* ---- compose ---- */
  auto files = std::make_shared<std::vector<std::string>>();
  auto indexed = std::make_shared<bool>(false);
  CLI::App* compose_cmd =
      app.add_subcommand("compose", "left-fold composition of relation files");
  compose_cmd->add_option("files", *files, "relation (or indexed) JSON files")
      ->required()
      ->expected(-1);
  compose_cmd->add_flag("--indexed", *indexed,
                        "treat inputs as indexed relations and track the index");
  compose_cmd->callback([&ctx, files, indexed] {
    if (*indexed) {
      IndexMode mode = ctx.extended ? IndexMode::extended : IndexMode::standard;
      IndexedCanonicalRelation acc = indexed_from_json(load((*files)[0]), mode);
      check_dim(ctx, acc.relation.target.dim, "target of " + (*files)[0]);
      check_dim(ctx, acc.relation.source.dim, "source of " + (*files)[0]);
      for (size_t i = 1; i < files->size(); ++i) {
        IndexedCanonicalRelation next = indexed_from_json(load((*files)[i]), mode);
        check_dim(ctx, next.relation.source.dim, "source of " + (*files)[i]);
        acc = icompose(acc, next);
      }
      print(ctx, indexed_to_json(acc));
    } else {
      CanonicalRelation acc = load_relation(ctx, (*files)[0]);
      for (size_t i = 1; i < files->size(); ++i)
        acc = compose(acc, load_relation(ctx, (*files)[i]));
      print(ctx, relation_to_json(acc));
    }
  });

  /* ---- normalize ---- */
  auto npath = std::make_shared<std::string>();
  CLI::App* normalize_cmd =
      app.add_subcommand("normalize", "shadow and excess of a composable path");
  normalize_cmd->add_option("path", *npath, "path JSON file")->required();
  normalize_cmd->callback([&ctx, npath] {
    WWNormalForm nf = ww_normalize(load_path(ctx, *npath));
    print(ctx, Json{{"shadow", relation_to_json(nf.shadow)}, {"excess", nf.excess}});
  });

  /* ---- factor ---- */
  auto fpath = std::make_shared<std::string>();
  auto recheck = std::make_shared<bool>(false);
  CLI::App* factor_cmd = app.add_subcommand(
      "factor", "reduction/coreduction pair with the path's normal form");
  factor_cmd->add_option("path", *fpath, "path JSON file")->required();
  factor_cmd->add_flag("--recheck", *recheck,
                       "re-normalize [A, B] and compare against the input path");
  factor_cmd->callback([&ctx, fpath, recheck] {
    Path p = load_path(ctx, *fpath);
    auto [a, b] = path_factorize(p);
    Json out{{"A", relation_to_json(a)}, {"B", relation_to_json(b)}};
    if (*recheck) {
      bool ok = ww_normalize(make_path({a, b})) == ww_normalize(p);
      out["recheck"] = ok;
      if (!ok) ctx.rc = 1;
    }
    print(ctx, out);
  });

  /* ---- reduce ---- */
  auto rspace = std::make_shared<std::string>();
  auto rcoiso = std::make_shared<std::string>();
  auto rlagr = std::make_shared<std::string>();
  auto rk = std::make_shared<long long>(0);
  CLI::App* reduce_cmd =
      app.add_subcommand("reduce", "reduce an indexed Lagrangian by a coisotropic");
  reduce_cmd->add_option("space", *rspace, "symplectic space JSON file")->required();
  reduce_cmd->add_option("coisotropic", *rcoiso, "coisotropic subspace JSON file")
      ->required();
  reduce_cmd->add_option("lagrangian", *rlagr, "Lagrangian subspace JSON file")
      ->required();
  reduce_cmd->add_option("--k", *rk, "starting index")->capture_default_str();
  reduce_cmd->callback([&ctx, rspace, rcoiso, rlagr, rk] {
    SymplecticSpace x = load_space(ctx, *rspace);
    ReductionData rd = reduction_data(x, load_subspace(ctx, *rcoiso));
    IndexedLagrangian a =
        make_indexed_lagrangian(x, load_subspace(ctx, *rlagr), *rk);
    print(ctx, indexed_lagrangian_to_json(indexed_reduce(rd, a)));
  });

  /* ---- distance ---- */
  auto d1 = std::make_shared<std::string>();
  auto d2 = std::make_shared<std::string>();
  CLI::App* distance_cmd =
      app.add_subcommand("distance", "Chow distance between two Lagrangians");
  distance_cmd->add_option("first", *d1, "subspace JSON file")->required();
  distance_cmd->add_option("second", *d2, "subspace JSON file")->required();
  distance_cmd->callback([&ctx, d1, d2] {
    Subspace l1 = load_subspace(ctx, *d1);
    Subspace l2 = load_subspace(ctx, *d2);
    if (l1.ambient() != l2.ambient())
      throw TypeMismatchError("subspaces live in different ambient spaces");
    print(ctx, Json{{"distance", chow_distance(l1, l2)}});
  });

  /* ---- order ---- */
  auto o1 = std::make_shared<std::string>();
  auto o2 = std::make_shared<std::string>();
  CLI::App* order_cmd =
      app.add_subcommand("order", "compare two indexed Lagrangian points");
  order_cmd->add_option("first", *o1, "indexed Lagrangian JSON file")->required();
  order_cmd->add_option("second", *o2, "indexed Lagrangian JSON file")->required();
  order_cmd->callback([&ctx, o1, o2] {
    IndexedLagrangian a = indexed_lagrangian_from_json(load(*o1));
    IndexedLagrangian b = indexed_lagrangian_from_json(load(*o2));
    check_dim(ctx, a.space.dim, "space of " + *o1);
    check_dim(ctx, b.space.dim, "space of " + *o2);
    if (a.space != b.space)
      throw TypeMismatchError("points live in different spaces");
    print(ctx, Json{{"leq", sabot_leq(a, b)}});
  });

  /* ---- lift ---- */
  auto lspace = std::make_shared<std::string>();
  auto lcoiso = std::make_shared<std::string>();
  auto llam = std::make_shared<std::string>();
  auto lk = std::make_shared<size_t>(0);
  CLI::App* lift_cmd = app.add_subcommand(
      "lift", "preimage of a reduced Lagrangian with prescribed excess");
  lift_cmd->add_option("space", *lspace, "symplectic space JSON file")->required();
  lift_cmd->add_option("coisotropic", *lcoiso, "coisotropic subspace JSON file")
      ->required();
  lift_cmd->add_option("lagrangian", *llam, "Lagrangian in the reduced space")
      ->required();
  lift_cmd->add_option("--k", *lk, "prescribed excess")->capture_default_str();
  lift_cmd->callback([&ctx, lspace, lcoiso, llam, lk] {
    SymplecticSpace x = load_space(ctx, *lspace);
    ReductionData rd = reduction_data(x, load_subspace(ctx, *lcoiso));
    Subspace lam = load_subspace(ctx, *llam);
    if (lam.ambient() != rd.reduced.dim)
      throw TypeMismatchError("Lagrangian does not live in the reduced space");
    print(ctx, subspace_to_json(lift_indexed(rd, lam, *lk)));
  });

  /* ---- deform ---- */
  auto espace = std::make_shared<std::string>();
  auto ecoiso = std::make_shared<std::string>();
  auto elagr = std::make_shared<std::string>();
  auto elam = std::make_shared<std::string>();
  auto eq = std::make_shared<long long>(0);
  auto et = std::make_shared<std::string>("0");
  CLI::App* deform_cmd = app.add_subcommand(
      "deform", "one-parameter family from a Lagrangian toward a reduced target");
  deform_cmd->add_option("space", *espace, "symplectic space JSON file")->required();
  deform_cmd->add_option("coisotropic", *ecoiso, "coisotropic subspace JSON file")
      ->required();
  deform_cmd->add_option("lagrangian", *elagr, "base Lagrangian JSON file")
      ->required();
  deform_cmd->add_option("target", *elam, "target Lagrangian in the reduced space")
      ->required();
  deform_cmd->add_option("--q", *eq, "excess drop along the family")->required();
  deform_cmd->add_option("--t", *et, "rational parameter value")
      ->capture_default_str();
  deform_cmd->callback([&ctx, espace, ecoiso, elagr, elam, eq, et] {
    SymplecticSpace x = load_space(ctx, *espace);
    ReductionData rd = reduction_data(x, load_subspace(ctx, *ecoiso));
    Subspace l = load_subspace(ctx, *elagr);
    Subspace lam = load_subspace(ctx, *elam);
    if (lam.ambient() != rd.reduced.dim)
      throw TypeMismatchError("target does not live in the reduced space");
    DeformationFamily fam = deformation_family(rd, l, lam, *eq);
    Rat t = rat_parse(*et);
    print(ctx, Json{{"k", fam.k},
                    {"q", fam.q},
                    {"r", fam.r},
                    {"strict", fam.satisfies_strict_inequality},
                    {"eval", subspace_to_json(fam.eval(t))}});
  });

  /* ---- verify ---- */
  auto suite = std::make_shared<std::string>("all");
  auto trials = std::make_shared<uint64_t>(100);
  auto vmax = std::make_shared<size_t>(ctx.max_dim);
  auto replay = std::make_shared<std::string>();
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the seeded property-verification suites");
  verify_cmd->add_option("--suite", *suite, "suite name, or 'all'")
      ->capture_default_str();
  verify_cmd->add_option("--trials", *trials, "trials per law")
      ->capture_default_str();
  verify_cmd->add_option("--max-dim", *vmax,
                         "ambient-dimension cap for generated objects")
      ->capture_default_str();
  verify_cmd->add_option("--replay", *replay,
                         "rerun the law recorded in a failure JSON file");
  verify_cmd->callback([&ctx, suite, trials, vmax, replay] {
    VerifyOptions opt;
    opt.trials = *trials;
    opt.seed = ctx.seed;
    opt.max_dim = *vmax;
    opt.extended = ctx.extended;
    if (!replay->empty()) {
      Json j = load(*replay);
      if (!j.is_object() || !j.contains("suite") || !j.contains("law") ||
          !j.contains("seed"))
        throw ParseError("replay file needs suite, law and seed fields");
      std::string cx = replay_law(j["suite"].get<std::string>(),
                                  j["law"].get<std::string>(),
                                  j["seed"].get<uint64_t>(), opt);
      print(ctx, Json{{"suite", j["suite"]},
                      {"law", j["law"]},
                      {"seed", j["seed"]},
                      {"counterexample", cx},
                      {"reproduced", !cx.empty()}});
      if (!cx.empty()) ctx.rc = 1;
      return;
    }
    size_t total = 0;
    if (*suite == "all") {
      Json arr = Json::array();
      for (const std::string& name : verify_suite_names()) {
        VerifyReport rep = run_verify_suite(name, opt);
        total += rep.failures.size();
        arr.push_back(report_to_json(rep));
      }
      print(ctx, arr);
    } else {
      VerifyReport rep = run_verify_suite(*suite, opt);
      total = rep.failures.size();
      print(ctx, report_to_json(rep));
    }
    if (total > 0) ctx.rc = 1;
  });

  /* Let global flags appear on either side of the subcommand. */
  for (CLI::App* sc : app.get_subcommands([](CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;
  }
  return ctx.rc;
}

}  // namespace

int main(int argc, char** argv) {
  Ctx ctx;
  try {
    ctx.max_dim = env_max_dim();
    return run(ctx, argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const TypeMismatchError& e) {
    std::cerr << "type mismatch: " << e.what() << "\n";
    return 3;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
