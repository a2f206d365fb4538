#include "tropid/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "tropid/bounds.hpp"
#include "tropid/digraph.hpp"
#include "tropid/json_io.hpp"
#include "tropid/search.hpp"

namespace tropid::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 12345;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Variable> parse_alphabet(const std::string& text) {
  std::vector<Variable> vars;
  const Word parsed = Word::parse(text);
  for (const Run& r : parsed.runs()) {
    if (r.exp != 1) throw std::invalid_argument("alphabet letters must be distinct");
    vars.push_back(r.var);
  }
  return vars;
}

std::vector<Variable> parse_variable_list(const std::string& text) {
  std::vector<Variable> vars;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const Word w = Word::parse(item);
    if (w.runs().size() != 1 || w.runs().front().exp != 1)
      throw std::invalid_argument("not a single variable: '" + item + "'");
    vars.push_back(w.runs().front().var);
  }
  return vars;
}

MatrixClass class_from_name(const std::string& name) {
  if (name == "full") return MatrixClass::Full;
  if (name == "upper") return MatrixClass::UpperTriangular;
  if (name == "lower") return MatrixClass::LowerTriangular;
  throw std::invalid_argument("unknown matrix class: " + name);
}

FuzzMode mode_from_name(const std::string& name) {
  if (name == "independent") return FuzzMode::Independent;
  if (name == "diag-pair") return FuzzMode::DiagPair;
  if (name == "product-pair") return FuzzMode::ProductPair;
  throw std::invalid_argument("unknown fuzz mode: " + name);
}

IdentityForm form_from_name(const std::string& name) {
  if (name == "general") return IdentityForm::General;
  if (name == "single-letter" || name == "balanced") return IdentityForm::SingleLetter;
  throw std::invalid_argument("unknown identity form: " + name);
}

struct FuzzFlags {
  std::string identity_file;
  std::string cls = "upper";
  int dim = 2;
  long trials = 1000;
  std::uint64_t seed = kDefaultSeed;
  bool seed_given = false;
  std::string mode = "independent";
  long entry_lo = -10;
  long entry_hi = 10;
  std::string bottom_prob = "1/4";
};

SamplerConfig config_from(const FuzzFlags& f, std::ostream& err) {
  SamplerConfig cfg;
  cfg.entry_lo = f.entry_lo;
  cfg.entry_hi = f.entry_hi;
  try {
    cfg.bottom_prob = mpq_class(f.bottom_prob);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bottom-prob must be an integer or p/q rational, got '" +
                                f.bottom_prob + "'");
  }
  cfg.bottom_prob.canonicalize();
  cfg.seed = f.seed;
  cfg.validate();
  if (!f.seed_given) err << "seed " << kDefaultSeed << " (default)\n";
  return cfg;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"semigroup identities of triangular max-plus matrices"};
  app.require_subcommand(1);

  // enumerate
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list W_n[C, P]");
  int enum_n = 2;
  int enum_max_exp = 2;
  std::string enum_alphabet = "xy";
  enumerate_cmd->add_option("--n", enum_n, "word length")->required();
  enumerate_cmd->add_option("--max-exp", enum_max_exp, "run exponent cap (default 2)");
  enumerate_cmd->add_option("--alphabet", enum_alphabet, "ordered alphabet (default xy)");

  // powerword
  auto* powerword_cmd = app.add_subcommand("powerword", "build an n-power word");
  int pw_n = 2;
  bool pw_exact = false, pw_greedy = false;
  powerword_cmd->add_option("--n", pw_n, "word length")->required();
  powerword_cmd->add_flag("--exact", pw_exact, "shortest word via exhaustive search");
  powerword_cmd->add_flag("--greedy", pw_greedy, "greedy overlap construction");

  // identity
  auto* identity_cmd = app.add_subcommand("identity", "construct the identity for a matrix dimension");
  int id_dim = 3;
  std::string id_form = "single-letter";
  identity_cmd->add_option("--dim", id_dim, "matrix dimension (word length is dim-1)")->required();
  identity_cmd->add_option("--form", id_form, "single-letter | general | balanced");

  // refine
  auto* refine_cmd = app.add_subcommand("refine", "2-variable refinement of an identity");
  std::string refine_file, partition;
  refine_cmd->add_option("--identity", refine_file, "identity json file")->required();
  refine_cmd->add_option("--partition", partition, "content split, e.g. \"x,z|y\"")->required();

  // check
  auto* check_cmd = app.add_subcommand("check", "evaluate an identity on explicit matrices");
  std::string check_id_file, check_mat_file;
  check_cmd->add_option("--identity", check_id_file, "identity json file")->required();
  check_cmd->add_option("--matrices", check_mat_file, "assignment json file")->required();

  // fuzz
  auto* fuzz_cmd = app.add_subcommand("fuzz", "randomized counterexample search");
  FuzzFlags ff;
  fuzz_cmd->add_option("--identity", ff.identity_file, "identity json file")->required();
  fuzz_cmd->add_option("--class", ff.cls, "full | upper | lower (default upper)");
  fuzz_cmd->add_option("--dim", ff.dim, "matrix dimension")->required();
  fuzz_cmd->add_option("--trials", ff.trials, "number of trials (default 1000)");
  auto* fuzz_seed = fuzz_cmd->add_option("--seed", ff.seed, "sampler seed");
  fuzz_cmd->add_option("--mode", ff.mode, "independent | diag-pair | product-pair");
  fuzz_cmd->add_option("--entry-lo", ff.entry_lo, "smallest finite entry (default -10)");
  fuzz_cmd->add_option("--entry-hi", ff.entry_hi, "largest finite entry (default 10)");
  fuzz_cmd->add_option("--bottom-prob", ff.bottom_prob, "probability of -inf (default 1/4)");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "cross-check a product against the colored-digraph oracle");
  std::string oracle_file;
  bool oracle_dot = false;
  oracle_cmd->add_option("--matrices", oracle_file, "factor list json file")->required();
  oracle_cmd->add_flag("--dot", oracle_dot, "also print the colored digraph in dot format");

  // bound
  auto* bound_cmd = app.add_subcommand("bound", "class counts and identity-length bounds");
  int bound_n = 8;
  bound_cmd->add_option("--n", bound_n, "largest word length to tabulate")->required();

  // search minimal-word / falsify
  auto* search_cmd = app.add_subcommand("search", "minimality experiments");
  search_cmd->require_subcommand(1);
  auto* minimal_cmd = search_cmd->add_subcommand("minimal-word", "shortest n-power word");
  int min_n = 2;
  bool min_exact = false, min_greedy = false;
  minimal_cmd->add_option("--n", min_n, "word length")->required();
  minimal_cmd->add_flag("--exact", min_exact, "exhaustive search (default, n <= 5)");
  minimal_cmd->add_flag("--greedy", min_greedy, "greedy construction for larger n");
  auto* falsify_cmd = search_cmd->add_subcommand("falsify", "sweep balanced 2-variable candidates");
  int fal_maxlen = 4;
  long fal_trials = 2000;
  std::uint64_t fal_seed = kDefaultSeed;
  falsify_cmd->add_option("--max-len", fal_maxlen, "largest side length")->required();
  falsify_cmd->add_option("--trials", fal_trials, "random trials per candidate (default 2000)");
  auto* fal_seed_opt = falsify_cmd->add_option("--seed", fal_seed, "sampler seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (enumerate_cmd->parsed()) {
      const WordClassSpec spec(parse_alphabet(enum_alphabet), enum_max_exp, enum_n);
      for (const Word& w : enumerate_class(spec)) out << w.str() << "\n";
      return 0;
    }

    if (powerword_cmd->parsed()) {
      if (pw_exact && pw_greedy)
        throw std::invalid_argument("choose at most one of --exact / --greedy");
      const WordClassSpec spec = WordClassSpec::xy(pw_n);
      Word w = pw_exact    ? minimal_power_word(spec)
               : pw_greedy ? minimal_power_word(spec, SearchMode::Greedy)
                           : construct_power_word(spec);
      out << w.str() << "\n";
      return 0;
    }

    if (identity_cmd->parsed()) {
      Identity id = identity_for_dim(id_dim, form_from_name(id_form));
      if (id_form == "balanced") id = balance_substitute(id);
      out << identity_to_json(id) << "\n";
      return 0;
    }

    if (refine_cmd->parsed()) {
      const Identity id = identity_from_json(read_file(refine_file));
      const auto bar = partition.find('|');
      if (bar == std::string::npos)
        throw std::invalid_argument("partition must look like \"x|y\" or \"x,z|y\"");
      const Identity refined =
          refine_two_variable(id, parse_variable_list(partition.substr(0, bar)),
                              parse_variable_list(partition.substr(bar + 1)));
      out << identity_to_json(refined) << "\n";
      return 0;
    }

    if (check_cmd->parsed()) {
      const Identity id = identity_from_json(read_file(check_id_file));
      const Assignment a = assignment_from_json(read_file(check_mat_file));
      const TropMatrix lhs = evaluate(id.lhs(), a);
      const TropMatrix rhs = evaluate(id.rhs(), a);
      if (lhs == rhs) {
        out << "EQUAL\n";
        return 0;
      }
      out << "UNEQUAL lhs=" << matrix_to_json(lhs) << " rhs=" << matrix_to_json(rhs) << "\n";
      return 1;
    }

    if (fuzz_cmd->parsed()) {
      ff.seed_given = fuzz_seed->count() > 0;
      const Identity id = identity_from_json(read_file(ff.identity_file));
      const SamplerConfig cfg = config_from(ff, err);
      const Verdict verdict = fuzz(id, class_from_name(ff.cls), ff.dim, ff.trials, cfg,
                                   mode_from_name(ff.mode));
      if (verdict.passed()) {
        out << "PASS trials=" << verdict.trials << "\n";
        return 0;
      }
      out << "FAIL trial=" << verdict.trial
          << " assignment=" << assignment_to_json(*verdict.counterexample) << "\n";
      return 1;
    }

    if (oracle_cmd->parsed()) {
      const std::vector<TropMatrix> factors = factors_from_json(read_file(oracle_file));
      TropMatrix direct = factors.front();
      for (std::size_t i = 1; i < factors.size(); ++i) direct = mat_mul(direct, factors[i]);
      const ColoredDigraph g = ColoredDigraph::from_product(factors);
      const TropMatrix via_paths = oracle_product(g);
      int status = 0;
      if (direct == via_paths) {
        out << "OK n=" << direct.dim() << " factors=" << factors.size() << "\n";
      } else {
        out << "MISMATCH product=" << matrix_to_json(direct)
            << " oracle=" << matrix_to_json(via_paths) << "\n";
        status = 1;
      }
      if (oracle_dot) write_dot(g, out);
      return status;
    }

    if (bound_cmd->parsed()) {
      if (bound_n < 2 || bound_n > 15)
        throw std::invalid_argument("bound: --n must be within [2, 15]");
      out << "n enumerated claim_2Fn shifted_2Fn+1 general_bound triangular_bound derived_triangular_bound\n";
      for (int n = 2; n <= bound_n; ++n) {
        const ClassCount c = class_count(n);
        const LengthBounds b = length_bounds(n);
        out << n << " " << c.enumerated << " " << c.claim.get_str() << " "
            << c.shifted.get_str() << " " << b.general.get_str() << " "
            << b.triangular.get_str() << " ";
        if (n >= 3)
          out << derived_triangular_bound(n).get_str();
        else
          out << "-";
        out << "\n";
      }
      out << "# enumeration matches the shifted column 2F_{n+1}, not the claimed 2F_n\n";
      return 0;
    }

    if (minimal_cmd->parsed()) {
      if (min_exact && min_greedy)
        throw std::invalid_argument("choose at most one of --exact / --greedy");
      const Word w = minimal_power_word(WordClassSpec::xy(min_n),
                                        min_greedy ? SearchMode::Greedy : SearchMode::Exact);
      out << w.str() << "\n";
      return 0;
    }

    if (falsify_cmd->parsed()) {
      SamplerConfig cfg;
      cfg.seed = fal_seed;
      cfg.validate();
      if (fal_seed_opt->count() == 0) err << "seed " << kDefaultSeed << " (default)\n";
      const FalsifyReport report = falsify_below(fal_maxlen, 2, fal_trials, cfg);
      for (const FalsifyCandidate& c : report.candidates) {
        if (c.falsified) {
          out << "FALSIFIED lhs=" << c.identity.lhs().str()
              << " rhs=" << c.identity.rhs().str() << " trial="
              << (c.trial < 0 ? std::string("exhaustive") : std::to_string(c.trial))
              << " witness=" << assignment_to_json(*c.witness) << "\n";
        } else {
          out << "UNRESOLVED lhs=" << c.identity.lhs().str()
              << " rhs=" << c.identity.rhs().str() << "\n";
        }
      }
      out << "candidates=" << report.candidates.size()
          << " falsified=" << report.falsified_count()
          << " unresolved=" << report.unresolved_count() << "\n";
      out << "# sweep covers balanced 2-variable candidates only; unresolved means "
             "no counterexample found, not verified\n";
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << "usage error: no command given\n";
  return 2;
}

}  // namespace tropid::cli
