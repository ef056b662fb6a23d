#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "numerolab.h"

namespace {

// Every leaf subcommand binds exactly one library call; the CLI itself
// only parses flags, prints the rendered output, and maps the status.
struct Args {
  nl_format format = NL_PLAIN;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  bool fail_on_empty = false;

  std::string stream = "naturals";
  std::uint64_t offset = 1;
  std::uint64_t count = 10;
  std::string test = "prime";
  int rounds = 64;

  std::string n = "0";
  std::string m = "0";
  unsigned base = 10;
  std::string digits;
  bool complete = true;
  std::uint64_t max_len = 64;

  std::string operands;
  std::string ops;
  std::string opset;
  std::uint64_t digit_cap = 1000;
  std::uint64_t upto = 0;
  std::string threshold = "0";
  std::string domain = "rational";
  std::string start = "1";

  std::uint64_t n_max = 0;
  std::uint64_t p = 1;
  std::uint64_t q = 1;
  std::string fold = "add";
  std::uint64_t p_max = 1;

  std::uint64_t k = 1;
  std::string allowed;
  std::string predicate = "square";
  std::string relation = "double";

  std::string grid;
  std::string cells;
  std::string pool;
  std::uint64_t order = 3;
  std::string law = "sum";
  bool diagonals = true;
  bool distinct = true;
  std::uint64_t limit = 1;

  std::string k_str = "1";
  std::string bound = "0";
  std::string a = "0";
  std::string x_max = "0";
  std::string a_max = "0";
  std::string k_max_str = "0";

  std::string fn = "factorial";
  unsigned depth = 1;
  std::string indices;
  unsigned arity = 2;

  std::string shape;
  std::string point;
  bool clamped = false;
  unsigned grid_density = 12;
  unsigned refine = 40;
  std::string kind = "polygon";
  std::uint64_t sides = 3;
  std::string size = "1";

  std::string extra = "0";
  std::uint64_t extra_nat = 0;
  std::string last = "0";
  std::uint64_t qdiv = 2;
  std::uint64_t steps = 1;
  bool allow_zero = false;
  std::uint64_t cap = 10000000;
  std::uint64_t ucount = 1;
};

using Runner = std::function<nl_result*(const Args&)>;

void add_stream_opts(CLI::App* cmd, Args& a) {
  cmd->add_option("--stream", a.stream, "source stream name");
  cmd->add_option("--offset", a.offset, "1-based start index");
  cmd->add_option("--count", a.count, "number of terms");
}

void add_uniform_opts(CLI::App* cmd, Args& a) {
  cmd->add_option("--n", a.n, "modulus");
  cmd->add_option("--base", a.base, "radix, 2..256");
  cmd->add_option("--digits", a.digits, "comma-separated digit set");
  cmd->add_flag("--complete,!--no-complete", a.complete,
                "require every listed digit to appear");
}

}  // namespace

int main(int argc, char** argv) {
  Args a;
  Runner runner;
  auto bind = [&runner](CLI::App* cmd, Runner fn) {
    cmd->callback([&runner, fn] { runner = fn; });
  };

  CLI::App app{"integer-sequence and combinatorial-search workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  std::map<std::string, nl_format> format_names{
      {"plain", NL_PLAIN}, {"json", NL_JSON}, {"bfile", NL_BFILE}};
  app.add_option("--format", a.format, "output format")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
  app.add_option("--threads", a.threads, "worker hint; never affects output");
  app.add_option("--seed", a.seed, "seed for randomized subcommands");
  app.add_flag("--fail-on-empty", a.fail_on_empty,
               "exit 1 when a search returns nothing");

  auto* kernel = app.add_subcommand("kernel", "primitive number functions");
  kernel->require_subcommand(1);
  auto* kprime = kernel->add_subcommand("prime", "primality verdict");
  kprime->add_option("--n", a.n)->required();
  kprime->add_option("--rounds", a.rounds);
  bind(kprime, [](const Args& a) {
    return nl_kernel_prime(a.n.c_str(), a.rounds, a.format);
  });
  auto* kfactor = kernel->add_subcommand("factor", "prime factors, ascending");
  kfactor->add_option("--n", a.n)->required();
  bind(kfactor, [](const Args& a) {
    return nl_kernel_factor(a.n.c_str(), a.format);
  });
  auto* ksm = kernel->add_subcommand("smarandache", "least m with n | m!");
  ksm->add_option("--n", a.n)->required();
  bind(ksm, [](const Args& a) {
    return nl_kernel_smarandache(a.n.c_str(), a.format);
  });
  auto* kq = kernel->add_subcommand("quotient", "least k with m | k*m!...");
  kq->add_option("--m", a.m)->required();
  bind(kq, [](const Args& a) {
    return nl_kernel_quotient(a.m.c_str(), a.format);
  });
  auto* kpow = kernel->add_subcommand("power", "perfect-power decomposition");
  kpow->add_option("--n", a.n)->required();
  bind(kpow, [](const Args& a) {
    return nl_kernel_power(a.n.c_str(), a.format);
  });
  auto* klucky = kernel->add_subcommand("lucky", "lucky numbers up to limit");
  klucky->add_option("--limit", a.bound)->required();
  bind(klucky, [](const Args& a) {
    return nl_kernel_lucky(a.bound.c_str(), a.format);
  });
  auto* kstream = kernel->add_subcommand("stream", "terms of a named stream");
  add_stream_opts(kstream, a);
  bind(kstream, [](const Args& a) {
    return nl_kernel_stream(a.stream.c_str(), a.offset, a.count, a.format);
  });

  auto* concat = app.add_subcommand("concat", "digit-concatenation sequences");
  concat->fallthrough();
  add_stream_opts(concat, a);
  auto* cscreen = concat->add_subcommand("screen", "test concatenated terms");
  cscreen->fallthrough();
  cscreen->add_option("--test", a.test, "prime | even-power | perfect-power");
  cscreen->add_option("--rounds", a.rounds);
  bind(cscreen, [](const Args& a) {
    return nl_concat_screen(a.stream.c_str(), a.offset, a.count,
                            a.test.c_str(), a.rounds, a.format);
  });
  auto* cclosure =
      concat->add_subcommand("closure", "membership of terms in the stream");
  cclosure->fallthrough();
  bind(cclosure, [](const Args& a) {
    return nl_concat_closure(a.stream.c_str(), a.offset, a.count, a.format);
  });

  auto* uniform =
      app.add_subcommand("uniform", "multiples built from a digit set");
  uniform->fallthrough();
  add_uniform_opts(uniform, a);
  uniform->add_option("--count", a.ucount, "members to list");
  uniform->add_option("--max-len", a.max_len, "digit-length cutoff");
  auto* usmallest = uniform->add_subcommand("smallest", "least member only");
  usmallest->fallthrough();
  bind(usmallest, [](const Args& a) {
    return nl_uniform_smallest(a.n.c_str(), a.base, a.digits.c_str(),
                               a.complete ? 1 : 0, a.format);
  });
  auto* uempty = uniform->add_subcommand("empty", "is the member set empty");
  uempty->fallthrough();
  bind(uempty, [](const Args& a) {
    return nl_uniform_empty(a.n.c_str(), a.base, a.digits.c_str(),
                            a.complete ? 1 : 0, a.format);
  });

  auto* opseq = app.add_subcommand("opseq", "operator-chain sequences");
  opseq->require_subcommand(1);
  auto* oeval = opseq->add_subcommand("eval", "left-to-right chain value");
  oeval->add_option("--operands", a.operands)->required();
  oeval->add_option("--ops", a.ops)->required();
  oeval->add_option("--digit-cap", a.digit_cap);
  bind(oeval, [](const Args& a) {
    return nl_opseq_eval(a.operands.c_str(), a.ops.c_str(), a.digit_cap,
                         a.format);
  });
  auto* onext = opseq->add_subcommand("next", "least chain value above t");
  onext->add_option("--upto", a.upto)->required();
  onext->add_option("--opset", a.opset)->required();
  onext->add_option("--threshold", a.threshold)->required();
  onext->add_option("--domain", a.domain, "rational | integer");
  onext->add_option("--digit-cap", a.digit_cap);
  bind(onext, [](const Args& a) {
    return nl_opseq_next(a.upto, a.opset.c_str(), a.threshold.c_str(),
                         a.domain.c_str(), a.digit_cap, a.format);
  });
  auto* oseq = opseq->add_subcommand("seq", "iterated least-successor terms");
  oseq->add_option("--opset", a.opset)->required();
  oseq->add_option("--count", a.count);
  oseq->add_option("--domain", a.domain, "rational | integer");
  oseq->add_option("--start", a.start);
  bind(oseq, [](const Args& a) {
    return nl_opseq_seq(a.opset.c_str(), a.count, a.domain.c_str(),
                        a.start.c_str(), a.format);
  });
  auto* orandom = opseq->add_subcommand("random", "seeded random successors");
  orandom->add_option("--opset", a.opset)->required();
  orandom->add_option("--count", a.count);
  bind(orandom, [](const Args& a) {
    return nl_opseq_random(a.opset.c_str(), a.count, a.seed, a.format);
  });

  auto* relations =
      app.add_subcommand("relations", "term-window identities in streams");
  relations->require_subcommand(1);
  auto* rscan = relations->add_subcommand("scan", "p-window equals q-window");
  rscan->add_option("--stream", a.stream);
  rscan->add_option("--offset", a.offset);
  rscan->add_option("--nmax", a.n_max)->required();
  rscan->add_option("--p", a.p)->required();
  rscan->add_option("--q", a.q)->required();
  rscan->add_option("--fold", a.fold, "add | sub | mul");
  bind(rscan, [](const Args& a) {
    return nl_relations_scan(a.stream.c_str(), a.offset, a.n_max, a.p, a.q,
                             a.fold.c_str(), a.format);
  });
  auto* rppa = relations->add_subcommand("ppa", "partition-jump terms");
  rppa->add_option("--count", a.count);
  bind(rppa, [](const Args& a) { return nl_relations_ppa(a.count, a.format); });
  auto* rverify =
      relations->add_subcommand("verify", "block-sum identity check");
  rverify->add_option("--pmax", a.p_max)->required();
  bind(rverify, [](const Args& a) {
    return nl_relations_ppa_verify(a.p_max, a.format);
  });

  auto* digital = app.add_subcommand("digital", "digit-pattern filters");
  digital->require_subcommand(1);
  auto* dfilter =
      digital->add_subcommand("filter", "stream terms using allowed digits");
  dfilter->add_option("--stream", a.stream);
  dfilter->add_option("--offset", a.offset);
  dfilter->add_option("--k", a.k, "terms to inspect")->required();
  dfilter->add_option("--allowed", a.allowed)->required();
  bind(dfilter, [](const Args& a) {
    return nl_digital_filter(a.stream.c_str(), a.offset, a.k,
                             a.allowed.c_str(), a.format);
  });
  auto* dpartial =
      digital->add_subcommand("partial", "digit groups under a predicate");
  dpartial->add_option("--n", a.n)->required();
  dpartial->add_option("--predicate", a.predicate, "square | cube | prime");
  bind(dpartial, [](const Args& a) {
    return nl_digital_partial(a.n.c_str(), a.predicate.c_str(), a.format);
  });
  auto* dsplit = digital->add_subcommand("split", "two-group digit relation");
  dsplit->add_option("--n", a.n)->required();
  dsplit->add_option("--relation", a.relation, "double | lucky");
  bind(dsplit, [](const Args& a) {
    return nl_digital_split(a.n.c_str(), a.relation.c_str(), a.format);
  });
  auto* dtriad = digital->add_subcommand("triad", "x|y|z with x+y=z");
  dtriad->add_option("--n", a.n)->required();
  bind(dtriad, [](const Args& a) {
    return nl_digital_triad(a.n.c_str(), a.format);
  });

  auto* magic = app.add_subcommand("magic", "magic squares and cubes");
  magic->require_subcommand(1);
  auto* mverify = magic->add_subcommand("verify", "common line value");
  mverify->add_option("--grid", a.grid, "JSON array of rows")->required();
  mverify->add_option("--law", a.law, "sum | alternating");
  mverify->add_flag("--diagonals,!--no-diagonals", a.diagonals);
  mverify->add_flag("--distinct,!--no-distinct", a.distinct);
  bind(mverify, [](const Args& a) {
    return nl_magic_verify(a.grid.c_str(), a.law.c_str(), a.diagonals ? 1 : 0,
                           a.distinct ? 1 : 0, a.format);
  });
  auto* msearch = magic->add_subcommand("search", "fill squares from a pool");
  msearch->add_option("--pool", a.pool, "comma-separated values")->required();
  msearch->add_option("--order", a.order)->required();
  msearch->add_option("--law", a.law, "sum | alternating");
  msearch->add_option("--limit", a.limit, "squares to report");
  msearch->add_flag("--diagonals,!--no-diagonals", a.diagonals);
  msearch->add_flag("--distinct,!--no-distinct", a.distinct);
  bind(msearch, [](const Args& a) {
    return nl_magic_search(a.pool.c_str(), a.order, a.law.c_str(),
                           a.diagonals ? 1 : 0, a.distinct ? 1 : 0, a.limit,
                           a.format);
  });
  auto* mcube = magic->add_subcommand("cube", "common axis-line value");
  mcube->add_option("--cells", a.cells, "JSON array of layers")->required();
  mcube->add_option("--law", a.law, "sum | alternating");
  bind(mcube, [](const Args& a) {
    return nl_magic_cube(a.cells.c_str(), a.law.c_str(), a.format);
  });

  auto* conjecture =
      app.add_subcommand("conjecture", "prime-triple and cube-square scans");
  conjecture->require_subcommand(1);
  auto* creps = conjecture->add_subcommand("reps", "p + q*r triples for k");
  creps->add_option("--k", a.k_str)->required();
  creps->add_option("--bound", a.bound)->required();
  bind(creps, [](const Args& a) {
    return nl_conjecture_reps(a.k_str.c_str(), a.bound.c_str(), a.format);
  });
  auto* csweep =
      conjecture->add_subcommand("sweep", "odd k without a representation");
  csweep->add_option("--kmax", a.k_max_str)->required();
  csweep->add_option("--bound", a.bound)->required();
  bind(csweep, [](const Args& a) {
    return nl_conjecture_sweep(a.k_max_str.c_str(), a.bound.c_str(), a.format);
  });
  auto* cwitness =
      conjecture->add_subcommand("witness", "x with |x^3 - y^2| = a");
  cwitness->add_option("--a", a.a)->required();
  cwitness->add_option("--xmax", a.x_max)->required();
  bind(cwitness, [](const Args& a) {
    return nl_conjecture_witness(a.a.c_str(), a.x_max.c_str(), a.format);
  });
  auto* cbad = conjecture->add_subcommand("bad", "a values with no witness");
  cbad->add_option("--amax", a.a_max)->required();
  cbad->add_option("--xmax", a.x_max)->required();
  bind(cbad, [](const Args& a) {
    return nl_conjecture_bad(a.a_max.c_str(), a.x_max.c_str(), a.format);
  });

  auto* divis = app.add_subcommand("divis", "divisibility-chain checks");
  divis->require_subcommand(1);
  auto* vcheck = divis->add_subcommand("check", "chain law over all pairs");
  vcheck->add_option("--fn", a.fn)->required();
  vcheck->add_option("--nmax", a.n)->required();
  vcheck->add_option("--depth", a.depth);
  bind(vcheck, [](const Args& a) {
    return nl_divis_check(a.fn.c_str(), a.n.c_str(), a.depth, a.format);
  });
  auto* von = divis->add_subcommand("on", "chain law over listed indices");
  von->add_option("--fn", a.fn)->required();
  von->add_option("--indices", a.indices)->required();
  von->add_option("--depth", a.depth);
  bind(von, [](const Args& a) {
    return nl_divis_on(a.fn.c_str(), a.indices.c_str(), a.depth, a.format);
  });
  auto* vstrong = divis->add_subcommand("strong", "gcd identity over pairs");
  vstrong->add_option("--fn", a.fn)->required();
  vstrong->add_option("--nmax", a.n)->required();
  bind(vstrong, [](const Args& a) {
    return nl_divis_strong(a.fn.c_str(), a.n.c_str(), a.format);
  });
  auto* vkstrong = divis->add_subcommand("kstrong", "gcd identity over tuples");
  vkstrong->add_option("--fn", a.fn)->required();
  vkstrong->add_option("--arity", a.arity)->required();
  vkstrong->add_option("--nmax", a.n)->required();
  bind(vkstrong, [](const Args& a) {
    return nl_divis_kstrong(a.fn.c_str(), a.arity, a.n.c_str(), a.format);
  });

  auto* geom = app.add_subcommand("geom", "interior distance-sum ratios");
  geom->require_subcommand(1);
  auto* gratio = geom->add_subcommand("ratio", "ratio at one interior point");
  gratio->add_option("--shape", a.shape, "JSON vertex/face lists")->required();
  gratio->add_option("--point", a.point, "comma-separated coordinates")
      ->required();
  gratio->add_flag("--clamped", a.clamped, "project onto faces, not planes");
  bind(gratio, [](const Args& a) {
    return nl_geom_ratio(a.shape.c_str(), a.point.c_str(), a.clamped ? 1 : 0,
                         a.format);
  });
  auto* ginf = geom->add_subcommand("inf", "search for the least ratio");
  ginf->add_option("--shape", a.shape, "JSON vertex/face lists")->required();
  ginf->add_option("--grid", a.grid_density, "seed lattice density");
  ginf->add_option("--refine", a.refine, "descent rounds");
  ginf->add_flag("--clamped", a.clamped, "project onto faces, not planes");
  bind(ginf, [](const Args& a) {
    return nl_geom_inf(a.shape.c_str(), a.grid_density, a.refine,
                       a.clamped ? 1 : 0, a.format);
  });
  auto* gmake = geom->add_subcommand("make", "emit a reference shape");
  gmake->add_option("--kind", a.kind, "polygon | tetrahedron");
  gmake->add_option("--sides", a.sides);
  gmake->add_option("--size", a.size, "circumradius or edge length");
  bind(gmake, [](const Args& a) {
    return nl_geom_make(a.kind.c_str(), a.sides, a.size.c_str(), a.format);
  });

  auto* remainder =
      app.add_subcommand("remainder", "proportional-removal chains");
  remainder->require_subcommand(1);
  auto* rforward = remainder->add_subcommand("forward", "run a chain");
  rforward->add_option("--start", a.start)->required();
  rforward->add_option("--q", a.qdiv, "removal denominator")->required();
  rforward->add_option("--extra", a.extra, "flat removal per step");
  rforward->add_option("--steps", a.steps)->required();
  bind(rforward, [](const Args& a) {
    return nl_remainder_forward(a.start.c_str(), a.qdiv, a.extra.c_str(),
                                a.steps, a.format);
  });
  auto* rbackward =
      remainder->add_subcommand("backward", "reconstruct the start");
  rbackward->add_option("--last", a.last)->required();
  rbackward->add_option("--q", a.qdiv, "removal denominator")->required();
  rbackward->add_option("--extra", a.extra, "flat removal per step");
  rbackward->add_option("--steps", a.steps)->required();
  bind(rbackward, [](const Args& a) {
    return nl_remainder_backward(a.last.c_str(), a.qdiv, a.extra.c_str(),
                                 a.steps, a.format);
  });
  auto* rminimal =
      remainder->add_subcommand("minimal", "least all-integral start");
  rminimal->add_option("--q", a.qdiv, "removal denominator")->required();
  rminimal->add_option("--extra", a.extra_nat, "flat removal per step");
  rminimal->add_option("--steps", a.steps)->required();
  rminimal->add_flag("--allow-zero", a.allow_zero);
  rminimal->add_option("--cap", a.cap, "largest start to try");
  bind(rminimal, [](const Args& a) {
    return nl_remainder_minimal(a.qdiv, a.extra_nat, a.steps,
                                a.allow_zero ? 1 : 0, a.cap, a.format);
  });

  // Global flags are accepted after any subcommand.
  std::function<void(CLI::App*)> allow_globals = [&](CLI::App* cmd) {
    cmd->fallthrough();
    for (CLI::App* sub : cmd->get_subcommands([](CLI::App*) { return true; }))
      allow_globals(sub);
  };
  allow_globals(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  // Flat parents double as their principal verb.
  if (!runner && concat->parsed())
    runner = [](const Args& a) {
      return nl_concat_terms(a.stream.c_str(), a.offset, a.count, a.format);
    };
  if (!runner && uniform->parsed())
    runner = [](const Args& a) {
      return nl_uniform_members(a.n.c_str(), a.base, a.digits.c_str(),
                                a.complete ? 1 : 0, a.ucount, a.max_len,
                                a.format);
    };
  if (!runner) {
    std::fprintf(stderr, "numerolab: no action selected\n");
    return 2;
  }

  nl_set_threads(a.threads);
  auto begin = std::chrono::steady_clock::now();
  nl_result* result = runner(a);
  std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - begin;

  int rc = 2;
  switch (nl_result_status(result)) {
    case NL_OK:
      rc = 0;
      break;
    case NL_EMPTY:
      rc = a.fail_on_empty ? 1 : 0;
      break;
    default:
      std::fprintf(stderr, "numerolab: error: %s\n", nl_result_error(result));
      rc = 2;
      break;
  }
  if (rc != 2) std::fputs(nl_result_output(result), stdout);
  nl_result_free(result);
  std::fprintf(stderr, "numerolab: %.3fs\n", elapsed.count());
  return rc;
}
