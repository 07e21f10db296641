#include "qatlas/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qatlas/geometry.hpp"
#include "qatlas/ideal_file.hpp"
#include "qatlas/ideal_ops.hpp"

namespace qatlas {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

const char* boolstr(bool b) { return b ? "true" : "false"; }

std::uint64_t parse_seed(const std::string& text, const std::string& source) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    if (text.empty() || text[0] == '-') throw std::invalid_argument("negative");
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw InputError(source + ": seed must be a non-negative integer, got '" + text + "'");
  }
  if (used != text.size()) throw InputError(source + ": seed must be a non-negative integer, got '" + text + "'");
  return v;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string recipe_text_from_flags(const std::string& kind, int rank, int n, const std::string& partition, int cuts,
                                   int s, std::string base, const std::string& form, const std::string& spelling) {
  if (!base.empty() && base.find('(') == std::string::npos) base += "()";
  std::ostringstream os;
  if (kind == "linked") {
    os << "linked(rank=" << rank << ", n=" << n << ", spelling=" << spelling << ")";
  } else if (kind == "grassmannian14") {
    os << "grassmannian14()";
  } else if (kind == "rnc") {
    os << "rnc()";
  } else if (kind == "scroll") {
    if (partition.empty()) throw InputError("scroll needs --partition");
    os << "scroll(partition=[" << partition << "])";
  } else if (kind == "hypersurface") {
    os << "hypersurface(n=" << n << ", form=" << form << ")";
  } else if (kind == "section") {
    if (base.empty()) throw InputError("section needs --base");
    os << "section(base=" << base << ", cuts=" << cuts << ")";
  } else if (kind == "cone") {
    if (base.empty()) throw InputError("cone needs --base");
    os << "cone(base=" << base << ", s=" << s << ")";
  } else {
    throw InputError("unknown kind '" + kind + "'");
  }
  return os.str();
}

struct LinkInput {
  std::string path;
  std::string by = "x0,x1";
};

template <class F>
IdealFile run_link(const Ideal<F>& ci, const std::string& by, LinkageReport& report) {
  if (ci.size() != 2 || !ci.is_homogeneous()) {
    throw InputError("link expects a file with exactly two homogeneous generators, a quadric and a cubic");
  }
  Polynomial<F> q = ci.generators()[0];
  Polynomial<F> v3 = ci.generators()[1];
  if (q.total_degree() == 3 && v3.total_degree() == 2) std::swap(q, v3);
  if (q.total_degree() != 2 || v3.total_degree() != 3) {
    throw InputError("link expects a quadric and a cubic");
  }
  std::vector<Polynomial<F>> pgens;
  for (const auto& piece : split_commas(by)) pgens.push_back(parse_polynomial(piece, ci.ring_ptr()));
  Ideal<F> p(ci.ring_ptr(), std::move(pgens));
  Ideal<F> x = saturate(ci, p).ideal;
  report = verify_linkage(x, p, q, v3);
  std::vector<std::string> comments = {"# linked: (" + to_string(q) + ", " + to_string(v3) + ") : (" + by + ")^inf",
                                       "# linkage: " + report.to_string()};
  return ideal_file_from(Ideal<F>::from_groebner(x.groebner()), std::move(comments));
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

}  // namespace

void RunConfig::validate() const {
  if (max_degree_budget < 1) throw InputError("budget must be positive");
  if (slice_retries < 1) throw InputError("retries must be positive");
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, const char* env_value) {
  if (flag) return *flag;
  if (env_value && *env_value) return parse_seed(env_value, kSeedEnvironmentVariable);
  return 1;
}

std::string invariants_report(const VarietyInvariants& inv, OutputFormat format) {
  std::ostringstream os;
  os << inv.summary() << "\n";
  if (format == OutputFormat::kMachine) {
    os << "seed=" << inv.seed << "\n";
    os << "invariants " << inv.summary() << " codim=" << inv.codim << " nondegenerate=" << boolstr(inv.nondegenerate)
       << "\n";
    os << "h0_I";
    for (const auto& [m, v] : inv.h0_I) os << " m" << m << "=" << v;
    os << "\n";
    os << "hf";
    for (std::size_t t = 0; t < inv.hf.size(); ++t) os << " t" << t << "=" << inv.hf[t];
    os << "\n";
    os << "hilbert_polynomial=" << quoted(inv.hilbert_polynomial) << "\n";
    for (std::size_t k = 0; k < inv.section_hf.size(); ++k) {
      os << "section k=" << k + 1 << " hf=";
      for (std::size_t t = 0; t < inv.section_hf[k].size(); ++t) os << (t ? "," : "") << inv.section_hf[k][t];
      os << "\n";
    }
    os << "slice_attempts=";
    for (std::size_t k = 0; k < inv.slice_attempts.size(); ++k) os << (k ? "," : "") << inv.slice_attempts[k];
    os << "\n";
    os << "input_saturated=" << boolstr(inv.input_saturated) << "\n";
    for (const auto& w : inv.warnings) os << "warning text=" << quoted(w) << "\n";
    return os.str();
  }
  os << "codim:      " << inv.codim << (inv.nondegenerate ? " (nondegenerate)" : " (degenerate)") << "\n";
  os << "HP(t):      " << inv.hilbert_polynomial << "\n";
  os << "HF(0..3):   ";
  for (std::size_t t = 0; t < inv.hf.size(); ++t) os << (t ? ", " : "") << inv.hf[t];
  os << "\n";
  os << "dim I_m:    ";
  for (const auto& [m, v] : inv.h0_I) os << "m=" << m << ": " << v << "  ";
  os << "\n";
  for (std::size_t k = 0; k < inv.section_hf.size(); ++k) {
    os << "X_" << k + 1 << " HF:    ";
    for (std::size_t t = 0; t < inv.section_hf[k].size(); ++t) os << (t ? ", " : "") << inv.section_hf[k][t];
    os << "\n";
  }
  os << "seed:       " << inv.seed << "\n";
  for (const auto& w : inv.warnings) os << "warning: " << w << "\n";
  return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"quintic_atlas: invariants and classification of degree 5 projective varieties"};
  app.require_subcommand(1);
  app.fallthrough();  // inherited by subcommands, so global flags may follow the command name

  std::optional<std::uint64_t> seed_flag;
  RunConfig config;
  std::string format = "text";
  app.add_option("--seed", seed_flag, "random seed (default: $QUINTIC_ATLAS_SEED, then 1)");
  app.add_option("--budget", config.max_degree_budget, "degree budget for Hilbert function stabilization");
  app.add_option("--retries", config.slice_retries, "attempts per generic hyperplane slice");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "machine"}));

  // construct
  auto* construct = app.add_subcommand("construct", "write the ideal of a known construction");
  std::string kind = "linked", recipe_text, partition, base, form = "random", spelling = "normal", field_text, out_path;
  int rank = 4, n = 2, cuts = 1, s = 1;
  construct->add_option("--kind", kind, "linked|grassmannian14|scroll|rnc|hypersurface|section|cone|recipe");
  construct->add_option("--recipe", recipe_text, "full recipe text, e.g. 'linked(rank=4, n=3)'");
  construct->add_option("--rank", rank, "rank of the quadric (linked)");
  construct->add_option("--n", n, "dimension (linked, hypersurface)");
  construct->add_option("--partition", partition, "scroll partition, e.g. 1,1,3");
  construct->add_option("--cuts", cuts, "number of hyperplane cuts (section)");
  construct->add_option("--s", s, "number of vertex variables (cone)");
  construct->add_option("--base", base, "base recipe (section, cone)");
  construct->add_option("--form", form, "hypersurface form")->check(CLI::IsMember({"random", "fermat"}));
  construct->add_option("--spelling", spelling, "linked spelling")->check(CLI::IsMember({"normal", "example"}));
  construct->add_option("--field", field_text, "gf32003, GF(p) or q (default gf32003)");
  construct->add_option("--out", out_path, "output path (default stdout)");

  std::string in_path;
  auto* invariants = app.add_subcommand("invariants", "compute (n, N, d, delta, g) and the Hilbert data");
  invariants->add_option("file", in_path, "ideal file")->required();
  auto* classify_cmd = app.add_subcommand("classify", "place the variety in the classification");
  classify_cmd->add_option("file", in_path, "ideal file")->required();
  auto* smooth = app.add_subcommand("smooth", "Jacobian criterion");
  smooth->add_option("file", in_path, "ideal file")->required();
  auto* link = app.add_subcommand("link", "residual of (Q, V3) with respect to a linear space");
  LinkInput link_in;
  link->add_option("file", link_in.path, "ideal file holding Q and V3")->required();
  link->add_option("--by", link_in.by, "comma separated generators of the linear space");
  link->add_option("--out", out_path, "output path (default stdout)");
  auto* corpus_cmd = app.add_subcommand("corpus", "classify every corpus entry and compare");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code::kInput;
  }

  try {
    config.seed = resolve_seed(seed_flag, std::getenv(kSeedEnvironmentVariable));
    config.output = format == "machine" ? OutputFormat::kMachine : OutputFormat::kText;
    config.validate();

    if (*construct) {
      ConstructionRecipe recipe;
      if (kind == "recipe" || !recipe_text.empty()) {
        if (recipe_text.empty()) throw InputError("--kind recipe needs --recipe");
        recipe = ConstructionRecipe::parse(recipe_text);
        FieldSpec f = field_text.empty() ? recipe.field : FieldSpec::parse(field_text);
        bool seed_given = seed_flag || std::getenv(kSeedEnvironmentVariable);
        recipe = recipe.with(f, seed_given ? config.seed : recipe.seed);
      } else {
        recipe = ConstructionRecipe::parse(
            recipe_text_from_flags(kind, rank, n, partition, cuts, s, base, form, spelling));
        FieldSpec f = field_text.empty() ? FieldSpec::prime(kDefaultPrime) : FieldSpec::parse(field_text);
        recipe = recipe.with(f, config.seed);
      }
      AnyIdeal ideal = build(recipe);
      IdealFile file = ideal_file_from(ideal, {"# recipe: " + recipe.to_string(),
                                               "# seed: " + std::to_string(recipe.seed)});
      emit(format_ideal_file(file), out_path, out);
      return exit_code::kOk;
    }
    if (*invariants) {
      AnyIdeal ideal = to_ideal(read_ideal_file(in_path));
      VarietyInvariants inv =
          std::visit([&](const auto& i) { return compute_invariants(i, config.invariant_options()); }, ideal);
      out << invariants_report(inv, config.output);
      return exit_code::kOk;
    }
    if (*classify_cmd) {
      ClassificationReport rep = classify(to_ideal(read_ideal_file(in_path)), config.classify_options());
      out << (config.output == OutputFormat::kMachine ? rep.to_machine() : rep.to_text());
      return exit_code::kOk;
    }
    if (*smooth) {
      AnyIdeal ideal = to_ideal(read_ideal_file(in_path));
      bool ok = std::visit([](const auto& i) { return is_smooth(i); }, ideal);
      out << "smooth=" << boolstr(ok) << "\n";
      if (config.output == OutputFormat::kMachine) out << "seed=" << config.seed << "\n";
      return exit_code::kOk;
    }
    if (*link) {
      AnyIdeal ci = to_ideal(read_ideal_file(link_in.path));
      LinkageReport report;
      IdealFile file = std::visit([&](const auto& i) { return run_link(i, link_in.by, report); }, ci);
      emit(format_ideal_file(file), out_path, out);
      if (!out_path.empty()) out << "linkage " << report.to_string() << "\n";
      return report.passed() ? exit_code::kOk : exit_code::kFailure;
    }
    if (*corpus_cmd) {
      CrossCheckSummary summary = cross_check_theorem(corpus(), config.classify_options());
      if (config.output == OutputFormat::kMachine) {
        for (const auto& r : summary.rows) {
          out << "entry name=" << quoted(r.name) << " expected=" << quoted(r.expected.to_string())
              << " got=" << quoted(r.got.to_string()) << " invariants=" << quoted(r.got_invariants.to_string())
              << " ok=" << boolstr(r.ok()) << "\n";
        }
        out << "agreement=" << summary.agreements() << "/" << summary.rows.size() << "\n";
      } else {
        out << summary.table();
      }
      return summary.all_agree() ? exit_code::kOk : exit_code::kFailure;
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (raise --budget)\n";
    return exit_code::kBudget;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kInput;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kInput;
  } catch (const RingMismatch& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kInput;
  } catch (const GenericityFailure& e) {
    err << "error: " << e.what() << " (try another --seed)\n";
    return exit_code::kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kFailure;
  }
  return exit_code::kFailure;
}

}  // namespace qatlas
