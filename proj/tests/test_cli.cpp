#include <doctest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qatlas/cli.hpp"
#include "qatlas/ideal_file.hpp"
#include "support/test_util.hpp"

using namespace qatlas;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(f);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path golden(const std::string& name) { return fs::path(QATLAS_GOLDEN_DIR) / name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("qatlas_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

int shell(const std::string& cmd) {
  int status = std::system((cmd + " >/dev/null 2>&1").c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("ideal file parse and format") {
  const std::string text =
      "# hello\n"
      "field: GF(101)\n"
      "vars: a b c\n"
      "a*b - c^2\n"
      "a^3 + 2*b^3\n";
  auto file = parse_ideal_file(text);
  CHECK(file.comments == std::vector<std::string>{"# hello"});
  CHECK(file.field == FieldSpec::prime(101));
  CHECK(file.vars == std::vector<std::string>{"a", "b", "c"});
  CHECK(file.generators.size() == 2);
  CHECK(format_ideal_file(file) == text);
  CHECK(parse_ideal_file(format_ideal_file(file)) == file);

  auto ideal = to_ideal(file);
  REQUIRE(std::holds_alternative<Ideal<PrimeField>>(ideal));
  CHECK(std::get<Ideal<PrimeField>>(ideal).ring().names() == file.vars);
}

TEST_CASE("ideal file blank lines are skipped") {
  auto file = parse_ideal_file("\nfield: Q\n\nvars: x y\n\nx^2 + 1/2*y^2\n");
  CHECK(file.field == FieldSpec::rationals());
  CHECK(file.generators == std::vector<std::string>{"x^2 + 1/2*y^2"});
}

TEST_CASE("ideal file errors name the line") {
  auto message = [](const std::string& text) {
    try {
      parse_ideal_file(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("field: Q\nvars: x y\nx^2 +\n").find("line 3") != std::string::npos);
  CHECK(message("x^2\nfield: Q\nvars: x\n").find("line 1") != std::string::npos);
  CHECK(message("field: Q\nfield: Q\nvars: x\n").find("line 2") != std::string::npos);
  CHECK(message("field: Q\nvars: x\nz^2\n").find("line 3") != std::string::npos);
  CHECK_FALSE(message("vars: x\n").empty());
  CHECK_FALSE(message("field: GF(4)\nvars: x\n").empty());
}

TEST_CASE("golden ideal files round trip byte for byte") {
  for (const char* name : {"linked_4_3.ideal", "g14.ideal", "scroll_2_3.ideal", "linked_3_2_q.ideal"}) {
    CAPTURE(name);
    const std::string text = slurp(golden(name));
    CHECK(format_ideal_file(parse_ideal_file(text)) == text);
    auto file = parse_ideal_file(text);
    CHECK(format_ideal_file(ideal_file_from(to_ideal(file), file.comments)) == text);
  }
}

TEST_CASE("construct reproduces the golden ideal files") {
  CHECK(run({"construct", "--kind", "linked", "--rank", "4", "--n", "3"}).out == slurp(golden("linked_4_3.ideal")));
  CHECK(run({"construct", "--kind", "grassmannian14"}).out == slurp(golden("g14.ideal")));
  CHECK(run({"construct", "--kind", "scroll", "--partition", "2,3"}).out == slurp(golden("scroll_2_3.ideal")));
  CHECK(run({"construct", "--kind", "linked", "--rank", "3", "--n", "2", "--spelling", "example", "--field", "q",
             "--seed", "7"})
            .out == slurp(golden("linked_3_2_q.ideal")));
}

TEST_CASE("machine reports match the golden files") {
  auto g = [](const std::string& n) { return golden(n).string(); };
  CHECK(run({"classify", g("linked_4_3.ideal"), "--format", "machine"}).out == slurp(golden("linked_4_3.classify.txt")));
  CHECK(run({"classify", g("g14.ideal"), "--format", "machine"}).out == slurp(golden("g14.classify.txt")));
  CHECK(run({"classify", g("linked_3_2_q.ideal"), "--format", "machine"}).out ==
        slurp(golden("linked_3_2_q.classify.txt")));
  CHECK(run({"invariants", g("scroll_2_3.ideal"), "--format", "machine"}).out ==
        slurp(golden("scroll_2_3.invariants.txt")));
}

TEST_CASE("construct kinds") {
  TempDir dir;
  auto scroll = dir.file("s113.ideal");
  REQUIRE(run({"construct", "--kind", "scroll", "--partition", "1,1,3", "--out", scroll}).code == exit_code::kOk);
  CHECK(read_ideal_file(scroll).vars.size() == 8);

  auto g = parse_ideal_file(run({"construct", "--kind", "grassmannian14"}).out);
  CHECK(g.generators.size() == 5);
  CHECK(g.comments.front() == "# recipe: grassmannian14(field=gf32003, seed=1)");

  auto sec = run({"construct", "--kind", "section", "--base", "grassmannian14", "--cuts", "4"});
  REQUIRE(sec.code == exit_code::kOk);
  CHECK(parse_ideal_file(sec.out).vars.size() == 6);

  auto cone = run({"construct", "--kind", "cone", "--base", "rnc", "--s", "1"});
  REQUIRE(cone.code == exit_code::kOk);
  CHECK(parse_ideal_file(cone.out).vars.size() == 7);

  auto rec = run({"construct", "--recipe", "hypersurface(n=2, form=fermat)"});
  REQUIRE(rec.code == exit_code::kOk);
  CHECK(parse_ideal_file(rec.out).generators.size() == 1);

  CHECK(run({"construct", "--kind", "torus"}).code == exit_code::kInput);
  CHECK(run({"construct", "--kind", "scroll", "--partition", "1,1,2"}).code == exit_code::kInput);
}

TEST_CASE("classify and invariants headlines") {
  TempDir dir;
  auto write = [&](const std::string& name, std::vector<std::string> args) {
    auto path = dir.file(name);
    args.insert(args.begin(), "construct");
    args.push_back("--out");
    args.push_back(path);
    REQUIRE(run(args).code == exit_code::kOk);
    return path;
  };
  auto l43 = write("l43.ideal", {"--kind", "linked", "--rank", "4", "--n", "3"});
  auto c = run({"classify", l43});
  CHECK(c.code == exit_code::kOk);
  CHECK(c.out.rfind("case=LinkedQuintic rank=4 smooth=true\n", 0) == 0);

  auto pq = write("pq.ideal", {"--kind", "hypersurface", "--n", "1"});
  CHECK(run({"classify", pq}).out.rfind("case=Hypersurface delta=3\n", 0) == 0);

  auto g14 = write("g14.ideal", {"--kind", "grassmannian14"});
  CHECK(run({"invariants", g14}).out.rfind("n=6 N=9 d=5 delta=1 g=1\n", 0) == 0);
  CHECK(run({"smooth", g14}).out == "smooth=true\n");
  CHECK(run({"smooth", g14, "--format", "machine", "--seed", "4"}).out == "smooth=true\nseed=4\n");

  auto l44 = write("l44.ideal", {"--kind", "linked", "--rank", "4", "--n", "4"});
  CHECK(run({"smooth", l44}).out == "smooth=false\n");
}

TEST_CASE("global flags may follow the subcommand") {
  TempDir dir;
  auto path = dir.file("g.ideal");
  REQUIRE(run({"construct", "--kind", "grassmannian14", "--out", path}).code == exit_code::kOk);
  auto a = run({"--seed", "5", "--format", "machine", "invariants", path});
  auto b = run({"invariants", path, "--format", "machine", "--seed", "5"});
  CHECK(a.code == exit_code::kOk);
  CHECK(a.out == b.out);
  CHECK(a.out.find("seed=5\n") != std::string::npos);
}

TEST_CASE("seed resolution") {
  CHECK(resolve_seed(std::nullopt, nullptr) == 1);
  CHECK(resolve_seed(std::nullopt, "9") == 9);
  CHECK(resolve_seed(3, "9") == 3);
  CHECK_THROWS_AS(resolve_seed(std::nullopt, "nine"), InputError);

  ::setenv(kSeedEnvironmentVariable, "9", 1);
  auto out = run({"construct", "--kind", "linked", "--rank", "4", "--n", "2"}).out;
  ::unsetenv(kSeedEnvironmentVariable);
  CHECK(out.find("# seed: 9\n") != std::string::npos);
  CHECK(out == run({"construct", "--kind", "linked", "--rank", "4", "--n", "2", "--seed", "9"}).out);
}

TEST_CASE("run config validation") {
  RunConfig c;
  CHECK_NOTHROW(c.validate());
  c.max_degree_budget = 0;
  CHECK_THROWS_AS(c.validate(), InputError);
  c = RunConfig{};
  c.slice_retries = 0;
  CHECK_THROWS_AS(c.validate(), InputError);
  CHECK(run({"--retries", "0", "corpus"}).code == exit_code::kInput);
}

TEST_CASE("link recovers the linked quintic") {
  TempDir dir;
  auto link = build_linked(ConstructionRecipe::linked(4, 3), testutil::gf());
  Ideal<PrimeField> ci(link.x.ring_ptr(), {link.q, link.v3});
  auto in = dir.file("ci.ideal");
  write_ideal_file(in, ideal_file_from(ci));

  auto r = run({"link", in});
  CHECK(r.code == exit_code::kOk);
  auto file = parse_ideal_file(r.out);
  CHECK(file.comments.size() == 2);
  CHECK(file.comments[1].find("# linkage: ") == 0);
  auto x = std::get<Ideal<PrimeField>>(to_ideal(file));
  CHECK(x.equals(link.x));

  auto out = dir.file("x.ideal");
  auto r2 = run({"link", in, "--by", "x0,x1", "--out", out});
  CHECK(r2.code == exit_code::kOk);
  CHECK(r2.out.rfind("linkage ", 0) == 0);
  CHECK(slurp(out) == r.out);

  auto bad = dir.file("bad.ideal");
  write_ideal_file(bad, ideal_file_from(Ideal<PrimeField>(link.x.ring_ptr(), {link.q})));
  CHECK(run({"link", bad}).code == exit_code::kInput);

  // (x2, x3) does not lie in the cubic, so the residual is not a quintic
  CHECK(run({"link", in, "--by", "x2,x3"}).code == exit_code::kFailure);
}

TEST_CASE("corpus command") {
  auto r = run({"corpus", "--format", "machine"});
  CHECK(r.code == exit_code::kOk);
  const auto n = corpus().size();
  CHECK(r.out.find("agreement=" + std::to_string(n) + "/" + std::to_string(n) + "\n") != std::string::npos);
  CHECK(r.out.find("ok=false") == std::string::npos);
}

TEST_CASE("error exit codes in process") {
  TempDir dir;
  auto broken = dir.file("broken.ideal");
  std::ofstream(broken) << "field: Q\nvars: x y z\nx^2 + * y\n";
  auto r = run({"classify", broken});
  CHECK(r.code == exit_code::kInput);
  CHECK(r.err.find("line 3") != std::string::npos);

  CHECK(run({"classify", dir.file("missing.ideal")}).code == exit_code::kInput);
  CHECK(run({"--format", "xml", "corpus"}).code == exit_code::kInput);
  CHECK(run({}).code == exit_code::kInput);

  auto cubic = dir.file("rnc3.ideal");
  std::ofstream(cubic) << "field: GF(32003)\nvars: x0 x1 x2 x3\nx0*x2 - x1^2\nx0*x3 - x1*x2\nx1*x3 - x2^2\n";
  CHECK(run({"classify", cubic}).code == exit_code::kInput);

  auto l = dir.file("l.ideal");
  REQUIRE(run({"construct", "--kind", "linked", "--rank", "4", "--n", "3", "--out", l}).code == exit_code::kOk);
  auto b = run({"--budget", "1", "invariants", l});
  CHECK(b.code == exit_code::kBudget);
  CHECK_FALSE(b.err.empty());
}

TEST_CASE("the installed binary reports exit codes") {
  const std::string bin = QATLAS_CLI_PATH;
  TempDir dir;
  auto l = dir.file("l.ideal");
  CHECK(shell(bin + " construct --kind linked --rank 4 --n 2 --out " + l) == 0);
  CHECK(shell(bin + " classify " + l) == 0);
  CHECK(shell(bin + " --budget 1 invariants " + l) == 3);
  CHECK(shell(bin + " classify " + dir.file("nope.ideal")) == 2);
  CHECK(shell(bin + " frobnicate") == 2);
  CHECK(shell("QUINTIC_ATLAS_SEED=9 " + bin + " construct --kind linked --rank 4 --n 2 --out " + dir.file("s9.ideal")) ==
        0);
  CHECK(slurp(dir.file("s9.ideal")).find("# seed: 9\n") != std::string::npos);
}
