// qclab: command-line front end for Brooks quasi-cocycle experiments.
//
// Exit codes: 0 success, 2 usage / parse / precondition error, 1 internal
// invariant violation (for example a defect above the theoretical bound).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qclab/qclab.hpp"

namespace {

using namespace qclab;

struct Options {
  ExperimentConfig config;
  std::string out;
  unsigned threads = 0;
};

struct Output {
  Json body;
  std::string csv;
  bool invariant_failed = false;
  std::string failure{};
};

const std::string& need(const std::optional<std::string>& field, const char* flag) {
  if (!field) throw PreconditionError(std::string("missing required flag --") + flag);
  return *field;
}

template <class T>
T need(const std::optional<T>& field, const char* flag) {
  if (!field) throw PreconditionError(std::string("missing required flag --") + flag);
  return *field;
}

unsigned thread_count(const Options& o) { return o.threads > 0 ? o.threads : default_threads(); }

QuasiCocycleSpec make_spec(const ExperimentConfig& c) {
  Representation rep = parse_representation(need(c.rep, "rep"));
  Vector e = parse_vector(rep, need(c.e, "e"));
  return QuasiCocycleSpec(parse_word(need(c.w, "w")), std::move(e), std::move(rep));
}

Output run_eval(const Options& o) {
  const auto& c = o.config;
  const QuasiCocycleSpec spec = make_spec(c);
  const Vector v = evaluate(spec, parse_word(need(c.g, "g")));
  return {eval_to_json(spec.rep, v), eval_to_csv(v)};
}

Output run_defect(const Options& o) {
  const auto& c = o.config;
  const QuasiCocycleSpec spec = make_spec(c);
  DefectMode mode;
  if (c.radius) {
    mode = DefectMode::exact(*c.radius);
    mode.allow_large = c.allow_large;
  } else {
    mode = DefectMode::sampled(need(c.maxlen, "maxlen"), need(c.count, "count"), need(c.seed, "seed"));
  }
  mode.threads = thread_count(o);
  const DefectReport r = defect(spec, mode);
  Output out{to_json(r), to_csv(r)};
  if (!r.within_bound()) {
    out.invariant_failed = true;
    out.failure = "observed defect exceeds 6|w| ||e||";
  }
  return out;
}

Output run_growth(const Options& o) {
  const auto& c = o.config;
  const std::string family = c.family.value_or("powers");
  const std::size_t n = need(c.n, "N");
  if (family == "harmonic") {
    Representation rep = parse_representation(c.rep.value_or("regular:inf"));
    const Word w = parse_word(need(c.w, "w"));
    const QuasiCocycleSpec spec(w, harmonic_vector(w, n + 1), rep);
    const GrowthSeries s = growth_probe(spec, HarmonicFamily{}, n);
    return {to_json(s), to_csv(s)};
  }
  const QuasiCocycleSpec spec = make_spec(c);
  GrowthSeries s;
  if (family == "powers") {
    s = growth_probe(spec, PowersFamily{parse_word(need(c.g, "g")), c.orbit_sums}, n);
  } else if (family == "family") {
    const BufferedWord bw = make_buffered(spec.w);
    s = growth_probe(spec, FamilyWords{bw, need(c.seed, "seed")}, n);
  } else {
    throw PreconditionError("unknown family '" + family + "' (expected powers, family, harmonic)");
  }
  Output out{to_json(s), to_csv(s)};
  if (s.cyclic && !s.cyclic->exceeded_at.empty()) {
    out.invariant_failed = true;
    out.failure = "growth series exceeds the certified cyclic bound";
  }
  return out;
}

Output run_vanish(const Options& o) {
  const auto& c = o.config;
  const QuasiCocycleSpec spec = make_spec(c);
  const VanishingReport r =
      vanishing_check(spec, parse_word_list(need(c.subgroup, "subgroup")), need(c.samples, "samples"),
                      need(c.maxlen, "maxlen"), need(c.seed, "seed"), thread_count(o));
  return {to_json(r), to_csv(r)};
}

Output run_independence(const Options& o) {
  const auto& c = o.config;
  Representation rep = parse_representation(need(c.rep, "rep"));
  const Vector e = parse_vector(rep, need(c.e, "e"));
  WitnessPolicy policy;
  policy.count = c.n.value_or(8);
  const IndependenceReport r =
      independence_matrix(need(c.m_list, "m-list"), parse_word(c.w_prime.value_or("")), e, rep,
                          policy, need(c.seed, "seed"));
  return {to_json(r), to_csv(r)};
}

ModulusMode modulus_mode(const ExperimentConfig& c) {
  const std::string m = c.modulus.value_or("analytic");
  if (m == "analytic") return ModulusMode::analytic();
  if (m == "sampled") return ModulusMode::sampled(c.trials.value_or(20000), need(c.seed, "seed"));
  throw PreconditionError("unknown modulus mode '" + m + "' (expected analytic or sampled)");
}

Output run_greedy(const Options& o) {
  const auto& c = o.config;
  Representation rep = parse_representation(need(c.rep, "rep"));
  const Vector e = parse_vector(rep, need(c.e, "e"));
  const BufferedWord bw = make_buffered(parse_word(need(c.w, "w")));
  GreedyOptions opt;
  opt.y_ball_radius = c.y_radius.value_or(2);
  if (c.modulus && *c.modulus == "sampled") opt.modulus = modulus_mode(c);
  const GreedyReport r = greedy_search(bw, e, rep, need(c.steps, "steps"), opt);
  Output out{to_json(r), to_csv(r)};
  out.body["buffer_log"] = bw.log;
  if (r.certificate_failures > 0) {
    out.invariant_failed = true;
    out.failure = "a certified greedy step gained less than epsilon";
  }
  return out;
}

Output run_ucheck(const Options& o) {
  const auto& c = o.config;
  const LpSpace space{c.p.value_or(2.0), c.dim.value_or(8)};
  const double R = c.r_bound.value_or(1.0);
  const UCConstants base = uc_constants(space, R, modulus_mode(c));
  const UCConstants used = inflate_mu(base, c.mu_factor.value_or(1.0));
  const UCTestReport r = uc_inequality_test(space, R, used, need(c.trials, "trials"),
                                            need(c.seed, "seed"), thread_count(o));
  Json body;
  body["constants"] = to_json(used);
  body["report"] = to_json(r);
  return {body, to_csv(r, used)};
}

Output run_u2(const Options& o) {
  const auto& c = o.config;
  const MatrixRep rep = random_generic_u2(need(c.seed, "seed"), static_cast<int>(c.max_denominator.value_or(50)));
  Json body = rep_to_json(rep);
  Json gaps;
  for (const char* g : {"a", "b", "ab", "aB"}) gaps[g] = spectral_gap(rep, parse_word(g));
  body["gaps"] = gaps;
  CsvWriter csv("u2", {"generator", "t", "s"});
  csv.row({"a", rep.angles->first.first, rep.angles->first.second});
  csv.row({"b", rep.angles->second.first, rep.angles->second.second});
  return {body, csv.str()};
}

void add_word(CLI::App* app, std::optional<std::string>& field, const char* name, const char* help) {
  app->add_option_function<std::string>(
      name, [&field](const std::string& s) { field = canonical_word(s); }, help);
}

void add_spec_flags(CLI::App* app, ExperimentConfig& c) {
  add_word(app, c.w, "--w", "pattern word w (cyclically reduced)");
  app->add_option("--rep", c.rep, "trivial | regular:P | regular:inf | matrix:FILE | matrix:u2:SEED | rotation:SEED[:GAP]");
  app->add_option("--e", c.e, "vector literal: 3/2 | 1:1;ab:-1 | re[,im];...");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  ExperimentConfig& c = o.config;
  CLI::App app{"Brooks quasi-cocycles on the free group F2 = <a, b>"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  std::string config_path;
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", o.out, "write the report here instead of stdout");
  app.add_option("--threads", o.threads, "worker threads (default: QCLAB_THREADS or all cores)");
  app.add_option("--config", config_path, "read the experiment from a JSON config");

  auto* eval = app.add_subcommand("eval", "H(g)");
  add_spec_flags(eval, c);
  add_word(eval, c.g, "--g", "group element g");

  auto* def = app.add_subcommand("defect", "sup ||H(gg') - H(g) - g.H(g')||");
  add_spec_flags(def, c);
  def->add_option("--exact-radius", c.radius, "all pairs in ball(r)^2");
  def->add_option("--maxlen", c.maxlen, "sampled mode: max word length");
  def->add_option("--count", c.count, "sampled mode: number of pairs");
  def->add_option("--seed", c.seed, "sampled mode: seed");
  def->add_flag("--allow-large", c.allow_large, "permit exact radius > 6");

  auto* growth = app.add_subcommand("growth", "||H(x_n)|| along a family");
  add_spec_flags(growth, c);
  growth->add_option("--family", c.family, "powers | family | harmonic");
  add_word(growth, c.g, "--g", "powers family: g");
  growth->add_option("--N", c.n, "number of points");
  growth->add_option("--seed", c.seed, "family words: seed");
  growth->add_flag("--orbit-sums", c.orbit_sums, "powers family: record ||e + ge + ... + g^{n-1}e||");

  auto* vanish = app.add_subcommand("vanish", "max ||H|| on a subgroup");
  add_spec_flags(vanish, c);
  vanish->add_option_function<std::string>(
      "--subgroup", [&c](const std::string& s) { c.subgroup = canonical_word_list(s); },
      "generators, e.g. \"a^2,b\"");
  vanish->add_option("--samples", c.samples, "random subgroup elements");
  vanish->add_option("--maxlen", c.maxlen, "max F2-length of random elements");
  vanish->add_option("--seed", c.seed, "seed");

  auto* indep = app.add_subcommand("independence", "zero pattern of H_{w_m} on family words");
  indep->add_option("--m-list", c.m_list, "increasing m values with gcd(m, 6) = 1")->delimiter(',');
  add_word(indep, c.w_prime, "--wprime", "prefix w' of w_m (default: identity)");
  indep->add_option("--rep", c.rep, "representation descriptor");
  indep->add_option("--e", c.e, "vector literal");
  indep->add_option("--N", c.n, "witness count (default 8)");
  indep->add_option("--seed", c.seed, "seed");

  auto* greedy = app.add_subcommand("greedy", "greedy growth with uniform convexity certificates");
  add_spec_flags(greedy, c);
  greedy->add_option("--steps", c.steps, "number of steps");
  greedy->add_option("--y-radius", c.y_radius, "y ball radius in a^m, b^m (default 2)");
  greedy->add_option("--modulus", c.modulus, "analytic | sampled");
  greedy->add_option("--trials", c.trials, "sampled modulus: trials");
  greedy->add_option("--seed", c.seed, "sampled modulus: seed");

  auto* uc = app.add_subcommand("ucheck", "property test for ||v + e|| >= ||v|| + epsilon");
  uc->add_option("--p", c.p, "l^p exponent (default 2)");
  uc->add_option("--dim", c.dim, "dimension (default 8)");
  uc->add_option("--R", c.r_bound, "radius bound R (default 1)");
  uc->add_option("--trials", c.trials, "trials");
  uc->add_option("--seed", c.seed, "seed");
  uc->add_option("--mu-factor", c.mu_factor, "multiply mu (negative control)");
  uc->add_option("--modulus", c.modulus, "analytic | sampled");

  auto* u2 = app.add_subcommand("u2", "seeded generic pair in U(2)");
  u2->add_option("--seed", c.seed, "seed");
  u2->add_option("--D", c.max_denominator, "Diophantine denominator bound (default 50)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const qclab::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw ParseError("cannot open config '" + config_path + "'");
      Json j;
      try {
        in >> j;
      } catch (const Json::exception& ex) {
        throw ParseError("config '" + config_path + "': " + ex.what());
      }
      c = config_from_json(j);
    }
    if (c.subcommand.empty()) {
      if (app.get_subcommands().empty()) throw PreconditionError("a subcommand or --config is required");
      c.subcommand = app.get_subcommands().front()->get_name();
    }
    if (c.format != "json" && c.format != "csv") throw PreconditionError("format must be json or csv");

    Output out;
    const std::string& sub = c.subcommand;
    if (sub == "eval") out = run_eval(o);
    else if (sub == "defect") out = run_defect(o);
    else if (sub == "growth") out = run_growth(o);
    else if (sub == "vanish") out = run_vanish(o);
    else if (sub == "independence") out = run_independence(o);
    else if (sub == "greedy") out = run_greedy(o);
    else if (sub == "ucheck") out = run_ucheck(o);
    else if (sub == "u2") out = run_u2(o);
    else throw PreconditionError("unknown subcommand '" + sub + "'");

    std::string text;
    if (c.format == "csv") {
      text = out.csv;
    } else {
      Json doc;
      doc["config"] = to_json(c);
      doc["result"] = std::move(out.body);
      text = doc.dump(2) + "\n";
    }
    if (o.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(o.out);
      if (!f) throw PreconditionError("cannot write '" + o.out + "'");
      f << text;
    }
    if (out.invariant_failed) {
      std::cerr << "invariant violation: " << out.failure << '\n';
      return 1;
    }
    return 0;
  } catch (const qclab::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return 1;
  } catch (const qclab::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
