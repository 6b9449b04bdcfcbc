#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace openpack::cli;

int main(int argc, char** argv) {
  CLI::App app{"Open packing and total domination toolkit"};
  app.require_subcommand(1);
  int status = kExitOk;
  auto dispatch = [&](auto command, const auto& options) {
    return [&, command] {
      status = run_guarded([&] { return command(options, std::cout, std::cerr); }, std::cerr);
    };
  };

  SolveOptions solve;
  auto* s = app.add_subcommand("solve", "Optimum open packing or total dominating set of a graph");
  s->add_option("--problem", solve.problem, "op or tds")->required();
  s->add_option("--method", solve.method, "auto, oracle, bounded, k13free-split, i1-split, split-deg12")
      ->capture_default_str();
  s->add_option("--max-class-r", solve.max_class_r, "largest r tried by class detection")->capture_default_str();
  s->add_option("--oracle-limit", solve.oracle_limit, "largest order handed to exhaustive search")
      ->capture_default_str();
  s->add_option("--bound", solve.bound, "optimum bound for method bounded");
  s->add_option("graph", solve.graph, "graph file")->required();
  s->callback(dispatch(cmd_solve, solve));

  CertifyOptions certify;
  auto* c = app.add_subcommand("certify", "Check a certificate against a graph or instance");
  c->add_option("instance", certify.instance, "graph, multigraph or instance JSON")->required();
  c->add_option("certificate", certify.certificate, "certificate JSON")->required();
  c->callback(dispatch(cmd_certify, certify));

  ReduceOptions reduce;
  auto* r = app.add_subcommand("reduce", "Apply a construction and write the output with its roles");
  r->add_option("--construction", reduce.construction, "1..5")->required();
  r->add_option("-o,--output", reduce.output_prefix, "output path prefix");
  r->add_option("--map", reduce.map_certificate, "certificate to translate through the construction");
  r->add_option("input", reduce.input, "source graph or instance JSON")->required();
  r->callback(dispatch(cmd_reduce, reduce));

  GenerateOptions gen;
  auto* g = app.add_subcommand("generate", "Write a generated graph or instance");
  g->add_option("family", gen.family, "gr, hr, cycle, complete, path, random, split, hitting-set, rdm")
      ->required();
  g->add_option("-o,--output", gen.output, "output file, stdout when absent");
  g->add_option("--n", gen.n, "order");
  g->add_option("--r", gen.r, "family parameter or set arity");
  g->add_option("--p", gen.p, "edge probability")->capture_default_str();
  g->add_option("--clique", gen.clique, "clique side size");
  g->add_option("--independent", gen.independent, "independent side size");
  g->add_option("--min-degree", gen.min_degree, "least independent-side degree")->capture_default_str();
  g->add_option("--max-degree", gen.max_degree, "largest independent-side degree")->capture_default_str();
  g->add_option("--universe", gen.universe, "hitting set universe size");
  g->add_option("--count", gen.count, "number of sets or tuples");
  g->add_option("--q", gen.q, "r-DM coordinate range");
  g->add_option("--seed", gen.seed, "random seed")->capture_default_str();
  g->callback(dispatch(cmd_generate, gen));

  ScanOptions scan;
  auto* sc = app.add_subcommand("scan", "Verification campaign over generated instances");
  sc->add_option("--claim", scan.claim, "claim to check")
      ->required()
      ->check(CLI::IsMember(scan_claim_names(), CLI::ignore_case));
  sc->add_option("--n", scan.n, "order range a..b");
  sc->add_option("--r", scan.r, "r range a..b");
  sc->add_option("--random-n", scan.random_n, "orders of random samples a..b");
  sc->add_option("--t", scan.t, "path orders")->delimiter(',');
  sc->add_option("--construction", scan.constructions, "constructions 1..5")->delimiter(',');
  sc->add_option("--samples", scan.samples, "random samples");
  sc->add_option("--seed", scan.seed, "random seed")->capture_default_str();
  sc->callback(dispatch(cmd_scan, scan));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  return status;
}
