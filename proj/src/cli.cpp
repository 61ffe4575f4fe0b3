#include "abhy/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "abhy/moment.hpp"
#include "abhy/serialize.hpp"

namespace abhy {

namespace {

constexpr int kOk = 0, kVerifyFailed = 1, kInvalidInput = 2, kCapExceeded = 3;

int default_cap() {
  if (const char* env = std::getenv("ABHY_CAP")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end && *end == '\0' && cap > 0) return static_cast<int>(cap);
  }
  return kDefaultCap;
}

std::vector<int> parse_word(const std::string& s) {
  std::vector<int> word;
  if (s.empty()) return word;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    int k = std::stoi(tok, &pos);
    if (pos != tok.size() || k < 1)
      throw DocumentError("flag \"--word\" expects comma-separated 1-based directions");
    word.push_back(k - 1);
  }
  return word;
}

std::vector<Rat> parse_rats(const std::string& s, const char* flag) {
  std::vector<Rat> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(rat_from_string(tok));
    } catch (const std::invalid_argument&) {
      throw DocumentError(std::string("flag \"") + flag + "\" holds an unparsable rational");
    }
  }
  return out;
}

ExchangeMatrix read_matrix(const std::string& path, std::istream& in) {
  Json j;
  try {
    if (path.empty() || path == "-") {
      in >> j;
    } else {
      std::ifstream f(path);
      if (!f) throw DocumentError("cannot open input file " + path);
      f >> j;
    }
  } catch (const Json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  return matrix_from_json(j);
}

IntMatrix read_square(const std::string& path, std::istream& in) {
  ExchangeMatrix em = read_matrix(path, in);
  if (em.m != 0) throw DocumentError("this command expects a square matrix (field \"m\" = 0)");
  return em.top();
}

struct Options {
  std::string input;
  std::string word;
  std::string c;
  std::string chat;
  std::string seed_mutations;
  std::string format = "json";
  std::string project;
  int cap = default_cap();
  int precision = 9;
  int index = 0;
  int random_runs = 0;
  unsigned long rng_seed = 0;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("input", opt.input, "matrix document (.cluster.json); '-' or omit for stdin");
  cmd->add_option("--cap", opt.cap, "exploration cap on distinct clusters");
  cmd->add_option("--seed-mutations", opt.seed_mutations,
                  "mutation word applied to the base matrix first (alternate initial seed)");
}

IntMatrix apply_seed_mutations(IntMatrix b, const Options& opt) {
  auto word = parse_word(opt.seed_mutations);
  if (word.empty()) return b;
  ExchangeMatrix em(b.rows, 0, std::move(b));
  return mutate_matrix(em, word).top();
}

std::vector<Rat> slice_constants(const Options& opt, int count) {
  std::vector<Rat> c = parse_rats(opt.c, "--c");
  if (c.empty()) c.assign(count, Rat(1));
  if (static_cast<int>(c.size()) != count)
    throw DocumentError("flag \"--c\" must list " + std::to_string(count) + " constants");
  return c;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::istream& in,
                 std::ostream& out, std::ostream& err) {
  CLI::App app{"exact cluster algebras, universal coefficients and ABHY associahedra"};
  app.require_subcommand(1);
  Options opt;

  auto* mutate_cmd = app.add_subcommand("mutate", "apply a mutation word to an exchange matrix");
  add_common(mutate_cmd, opt);
  mutate_cmd->add_option("--word", opt.word, "comma-separated 1-based directions, applied left to right");

  auto* explore_cmd = app.add_subcommand("explore", "explore the full exchange graph");
  add_common(explore_cmd, opt);

  auto* gvectors_cmd = app.add_subcommand("gvectors", "g-vectors of the principal-coefficient atlas");
  add_common(gvectors_cmd, opt);

  auto* fpolys_cmd = app.add_subcommand("fpolys", "F-polynomials of the principal-coefficient atlas");
  add_common(fpolys_cmd, opt);

  auto* univ_cmd = app.add_subcommand("univ", "universal-coefficient extension of a square matrix");
  add_common(univ_cmd, opt);

  auto* kernel_cmd = app.add_subcommand("kernel", "normalized left-kernel basis of the universal matrix");
  add_common(kernel_cmd, opt);

  auto* slice_cmd = app.add_subcommand("slice", "affine slice equations cutting out U_c");
  add_common(slice_cmd, opt);
  slice_cmd->add_option("--c", opt.c, "positive slice constants (default: all 1)");

  auto* polytope_cmd = app.add_subcommand("polytope", "vertices of U_c (or a projection)");
  add_common(polytope_cmd, opt);
  polytope_cmd->add_option("--c", opt.c, "positive slice constants (default: all 1)");
  polytope_cmd->add_option("--project", opt.project,
                           "1-based coordinates to project onto, or 'initial' for 1..n");
  polytope_cmd->add_option("--format", opt.format, "json or off")
      ->check(CLI::IsMember({"json", "off"}));
  polytope_cmd->add_option("--precision", opt.precision, "decimal digits for OFF output");

  auto* newton_cmd = app.add_subcommand("newton", "Newton polytopes of F-polynomials");
  add_common(newton_cmd, opt);
  newton_cmd->add_option("--index", opt.index,
                         "1-based variable index (default: every non-initial variable)");

  auto* verify_cmd = app.add_subcommand("verify", "run an executable check");
  auto* verify_theorem_cmd = verify_cmd->add_subcommand(
      "theorem", "moment-image slice equals U_c, and the normal fan matches");
  add_common(verify_theorem_cmd, opt);
  verify_theorem_cmd->add_option("--chat", opt.chat,
                                 "reduction level: n free entries then v-n positive ones");
  verify_theorem_cmd->add_option("--random", opt.random_runs, "number of random levels to test");
  verify_theorem_cmd->add_option("--rng-seed", opt.rng_seed, "seed for --random (default 0)");
  auto* verify_univ_cmd = verify_cmd->add_subcommand(
      "univ", "mutation compatibility of universal coefficients");
  add_common(verify_univ_cmd, opt);
  verify_univ_cmd->add_option("--word", opt.word, "mutation word to check (default: empty)");

  try {
    std::vector<std::string> argv(args.rbegin(), args.rend());
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (mutate_cmd->parsed()) {
      ExchangeMatrix em = read_matrix(opt.input, in);
      em = mutate_matrix(em, parse_word(opt.word));
      out << dump(matrix_to_json(em));
      return kOk;
    }
    if (explore_cmd->parsed()) {
      ExchangeMatrix em = read_matrix(opt.input, in);
      out << dump(atlas_to_json(explore(em, opt.cap)));
      return kOk;
    }
    if (gvectors_cmd->parsed() || fpolys_cmd->parsed()) {
      IntMatrix b = apply_seed_mutations(read_square(opt.input, in), opt);
      Atlas atlas = explore(principal_extension(b), opt.cap);
      Json j;
      j["n"] = atlas.n();
      j["variableCount"] = atlas.variable_count();
      if (gvectors_cmd->parsed()) {
        Json g = Json::array();
        for (int i = 0; i < atlas.variable_count(); ++i) {
          Json row = Json::array();
          for (const Int& x : g_vector(atlas, i)) row.push_back(x.get_si());
          g.push_back(std::move(row));
        }
        j["gvectors"] = std::move(g);
      } else {
        Json f = Json::array();
        std::vector<std::string> ynames(atlas.var_names.begin() + atlas.n(),
                                        atlas.var_names.end());
        for (int i = 0; i < atlas.variable_count(); ++i)
          f.push_back(f_polynomial(atlas, i).to_string(ynames));
        j["fpolynomials"] = std::move(f);
      }
      out << dump(j);
      return kOk;
    }
    if (univ_cmd->parsed()) {
      IntMatrix b = apply_seed_mutations(read_square(opt.input, in), opt);
      out << dump(matrix_to_json(universal_extension(b, opt.cap).full));
      return kOk;
    }
    if (kernel_cmd->parsed()) {
      IntMatrix b = apply_seed_mutations(read_square(opt.input, in), opt);
      KernelBasis kb = kernel_matrix(universal_extension(b, opt.cap));
      Json j;
      j["n"] = kb.n;
      j["v"] = kb.v;
      Json rows = Json::array();
      for (int i = 0; i < kb.k.rows; ++i) {
        Json r = Json::array();
        for (int c = 0; c < kb.k.cols; ++c) r.push_back(kb.k.at(i, c).get_si());
        rows.push_back(std::move(r));
      }
      j["rows"] = std::move(rows);
      out << dump(j);
      return kOk;
    }
    if (slice_cmd->parsed()) {
      IntMatrix b = apply_seed_mutations(read_square(opt.input, in), opt);
      UniversalMatrix u = universal_extension(b, opt.cap);
      SliceSpec spec = build_slice(b, slice_constants(opt, u.v() - u.n()), opt.cap);
      Json j;
      j["n"] = spec.n();
      j["v"] = spec.v();
      Json cs = Json::array();
      for (const Rat& q : spec.c) cs.push_back(rat_to_string(q));
      j["c"] = std::move(cs);
      Json eqs = Json::array();
      for (size_t r = 0; r < spec.slice.equations.size(); ++r) {
        Json e;
        e["index"] = spec.relations[r].index + 1;
        Json coeffs = Json::array();
        for (const Rat& q : spec.slice.equations[r].first)
          coeffs.push_back(rat_to_string(q));
        e["coeffs"] = std::move(coeffs);
        e["rhs"] = rat_to_string(spec.slice.equations[r].second);
        eqs.push_back(std::move(e));
      }
      j["equations"] = std::move(eqs);
      j["rendered"] = render_slice_equations(spec, /*numeric_rhs=*/false);
      out << dump(j);
      return kOk;
    }
    if (polytope_cmd->parsed()) {
      IntMatrix b = apply_seed_mutations(read_square(opt.input, in), opt);
      UniversalMatrix u = universal_extension(b, opt.cap);
      SliceSpec spec = build_slice(b, slice_constants(opt, u.v() - u.n()), opt.cap);
      SliceVertices sv = vertices_of_slice(spec.slice);
      if (sv.status == SliceStatus::empty) throw DocumentError("slice polytope is empty");
      if (sv.status == SliceStatus::unbounded)
        throw DocumentError("slice polytope is unbounded");
      VPolytope poly = sv.polytope;
      const std::vector<std::vector<int>>* labels = &sv.zero_sets;
      VPolytope projected;
      if (!opt.project.empty()) {
        std::vector<int> coords;
        if (opt.project == "initial") {
          for (int i = 0; i < spec.n(); ++i) coords.push_back(i);
        } else {
          for (const Rat& q : parse_rats(opt.project, "--project"))
            coords.push_back(static_cast<int>(to_int_exact(q).get_si()) - 1);
        }
        projected = project(poly, coords);
        poly = projected;
        labels = nullptr;
      }
      if (opt.format == "off")
        out << polytope_to_off(poly, opt.precision);
      else
        out << dump(polytope_to_json(poly, labels));
      return kOk;
    }
    if (newton_cmd->parsed()) {
      IntMatrix b = apply_seed_mutations(read_square(opt.input, in), opt);
      Atlas atlas = explore(principal_extension(b), opt.cap);
      std::vector<int> indices;
      if (opt.index > 0) {
        if (opt.index > atlas.variable_count())
          throw DocumentError("flag \"--index\" is out of range");
        indices.push_back(opt.index - 1);
      } else {
        for (int i = atlas.n(); i < atlas.variable_count(); ++i) indices.push_back(i);
      }
      Json arr = Json::array();
      for (int i : indices) {
        Json e;
        e["index"] = i + 1;
        e["polytope"] = polytope_to_json(newton_polytope(f_polynomial(atlas, i)));
        arr.push_back(std::move(e));
      }
      Json j;
      j["newton"] = std::move(arr);
      out << dump(j);
      return kOk;
    }
    if (verify_theorem_cmd->parsed()) {
      IntMatrix b = apply_seed_mutations(read_square(opt.input, in), opt);
      UniversalMatrix u = universal_extension(b, opt.cap);
      const int n = u.n(), v = u.v();
      std::vector<ReductionLevel> levels;
      if (opt.random_runs > 0) {
        std::mt19937_64 rng(opt.rng_seed);
        for (int r = 0; r < opt.random_runs; ++r)
          levels.push_back(random_reduction_level(n, v, rng));
      } else if (!opt.chat.empty()) {
        levels.emplace_back(parse_rats(opt.chat, "--chat"), n);
      } else {
        levels.push_back(ReductionLevel::defaults(n, v));
      }
      bool all_ok = true;
      for (const auto& level : levels) {
        TheoremReport rep = verify_theorem(b, level, opt.cap);
        all_ok = all_ok && rep.pass();
        out << "vertices match: " << (rep.vertices_equal ? std::to_string(rep.vertex_count)
                                                         : "no")
            << "\n";
        out << "normal fan matches g-vector fan: " << (rep.fans_match ? "yes" : "no") << "\n";
        if (!rep.detail.empty()) out << rep.detail << "\n";
      }
      return all_ok ? kOk : kVerifyFailed;
    }
    if (verify_univ_cmd->parsed()) {
      IntMatrix b = apply_seed_mutations(read_square(opt.input, in), opt);
      UnivCompatReport rep = check_univ_compatibility(b, parse_word(opt.word), opt.cap);
      out << "coefficient rows match under tracking: "
          << (rep.rows_match_under_bijection ? "yes" : "no") << "\n";
      out << "coefficient rows match as a multiset: "
          << (rep.rows_match_as_multiset ? "yes" : "no") << "\n";
      if (!rep.detail.empty()) out << rep.detail << "\n";
      return rep.pass ? kOk : kVerifyFailed;
    }
    err << "no subcommand given\n";
    return kInvalidInput;
  } catch (const CapExceeded& e) {
    err << e.what() << "\n";
    return kCapExceeded;
  } catch (const DocumentError& e) {
    err << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace abhy
