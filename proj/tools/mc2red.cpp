// mc2red: reduce integer linear systems to 2-commodity Laplacian systems.
//
// Exit codes: 0 pass, 1 I/O or internal error, 2 parse error, 3 validation
// error, 4 verification failure.

#include "mc2red/errors.hpp"
#include "mc2red/oracle.hpp"
#include "mc2red/random_instances.hpp"
#include "mc2red/reductions.hpp"
#include "mc2red/text_format.hpp"
#include "mc2red/validate.hpp"
#include "mc2red/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

namespace fs = std::filesystem;
using namespace mc2red;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitMismatch = 4;

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Level { G = 0, Gz = 1, Gz2 = 2, MC2 = 3 };

MatrixClass level_class(Level l) {
  switch (l) {
    case Level::G: return MatrixClass::G;
    case Level::Gz: return MatrixClass::Gz;
    case Level::Gz2: return MatrixClass::Gz2;
    case Level::MC2: return MatrixClass::MC2;
  }
  return MatrixClass::Unchecked;
}

/// Reads a system and checks it against its declared class and `required`.
SparseIntSystem load(const std::string& path, std::optional<MatrixClass> required) {
  if (!fs::exists(path)) throw IoError("no such file: " + path);
  auto sys = read_system_file(path);
  require_class(sys, sys.class_tag());
  if (required) require_class(sys, *required);
  return sys;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

struct ReduceOptions {
  std::string input;
  std::string output;
  Level from = Level::G;
  Level to = Level::MC2;
};

int cmd_reduce(const ReduceOptions& opt) {
  if (static_cast<int>(opt.from) >= static_cast<int>(opt.to)) {
    throw ParseError("--from must precede --to in the pipeline g -> gz -> gz2 -> mc2");
  }
  SparseIntSystem sys = load(opt.input, level_class(opt.from));
  std::vector<StageCert> certs;
  std::optional<ReductionTrace> trace;
  for (int l = static_cast<int>(opt.from); l < static_cast<int>(opt.to); ++l) {
    switch (static_cast<Level>(l)) {
      case Level::G: {
        auto r = reduce_g_to_gz(sys);
        sys = std::move(r.system);
        certs.push_back(r.cert);
        break;
      }
      case Level::Gz: {
        auto r = reduce_gz_to_gz2(sys);
        sys = std::move(r.system);
        certs.push_back(r.cert);
        break;
      }
      case Level::Gz2: {
        auto r = reduce_gz2_to_mc2(sys);
        sys = std::move(r.system);
        trace = std::move(r.trace);
        break;
      }
      case Level::MC2: break;
    }
  }

  fs::path out_path = opt.output;
  if (out_path.empty()) {
    static const char* names[] = {"g", "gz", "gz2", "mc2"};
    fs::path in(opt.input);
    out_path = in.parent_path() / (in.stem().string() + "." + names[static_cast<int>(opt.to)] + ".mat");
  }
  {
    auto out = open_out(out_path);
    write_system(out, sys);
    for (const auto& c : certs) write_cert(out, c);
  }
  std::cout << "wrote " << out_path.string() << " (" << sys.rows() << " x " << sys.cols() << ", "
            << to_string(sys.class_tag()) << ")\n";
  if (trace) {
    const fs::path trace_path = out_path.string() + ".trace";
    auto out = open_out(trace_path);
    write_trace(out, *trace);
    std::cout << "wrote " << trace_path.string() << " (" << trace->gadgets.size() << " gadgets)\n";
  }
  return kExitOk;
}

int cmd_entry(const std::string& input, std::size_t i, std::size_t j) {
  const OracleContext ctx(load(input, MatrixClass::Gz2));
  std::cout << to_string(ctx.entry(i, j)) << '\n';
  return kExitOk;
}

int cmd_dims(const std::string& input) {
  const OracleContext ctx(load(input, MatrixClass::Gz2));
  std::cout << "m'=" << ctx.m_final() << " n'=" << ctx.n_final() << '\n';
  return kExitOk;
}

int cmd_stats(const std::string& input) {
  const OracleContext ctx(load(input, MatrixClass::Gz2));
  const auto& sys = ctx.input();
  for (std::size_t i = 1; i <= sys.rows(); ++i) {
    for (Sign s : kSigns) {
      const auto& side = ctx.stats(i)[s];
      std::cout << "row " << i << " sign " << sign_char(s) << "  Len=" << side.len << "  SumNumG=" << side.sum_num_g
                << '\n';
      std::cout << "  k        ";
      for (std::size_t k = 1; k <= side.len; ++k) std::cout << ' ' << k;
      std::cout << "\n  CountBit ";
      for (std::size_t k = 1; k <= side.len; ++k) std::cout << ' ' << side.count_bit_at(k);
      std::cout << "\n  NumGadget";
      for (std::size_t k = 1; k <= side.len; ++k) std::cout << ' ' << side.num_gadget_at(k);
      std::cout << '\n';
    }
  }
  std::cout << "m'=" << ctx.m_final() << " n'=" << ctx.n_final() << '\n';
  return kExitOk;
}

int report(const std::vector<CheckResult>& results) {
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    all = all && r.passed;
  }
  std::cout << (all ? "all checks passed" : "verification failed") << '\n';
  return all ? kExitOk : kExitMismatch;
}

int cmd_verify(const std::string& input, const std::string& reduced, std::uint64_t seed) {
  SparseIntSystem sys = load(input, MatrixClass::G);
  // Lift to Gz2 from the most specific class the input satisfies.
  SparseIntSystem gz2 = sys;
  if (!validate_class(sys, MatrixClass::Gz2)) {
    SparseIntSystem gz = validate_class(sys, MatrixClass::Gz) ? sys : reduce_g_to_gz(sys).system;
    gz2 = reduce_gz_to_gz2(gz).system;
  }

  std::vector<CheckResult> results;
  const auto eq = oracle_equivalence_check(gz2, 0);
  results.push_back({"oracle equals builder", eq.ok,
                     eq.message + " (" + std::to_string(eq.m_final) + " x " + std::to_string(eq.n_final) + ", " +
                         std::to_string(eq.gadgets) + " gadgets)"});

  Rng rng(seed);
  const auto rt = pipeline_roundtrip(sys, random_rational_vector(rng, sys.cols(), 20, 6));
  results.push_back({"planted round-trip", rt.ok, rt.message});

  const auto chain = solvability_chain(sys);
  results.push_back({"solvability preserved for the file's rhs", chain.consistent,
                     chain.status[0] == SolveStatus::Solvable ? "solvable at every stage" : "unsolvable"});
  if (!chain.consistent) results.back().detail = "stages disagree";

  const auto pipe = run_pipeline(sys);
  const auto mc2_valid = validate_class(pipe.mc2.system, MatrixClass::MC2);
  results.push_back({"MC2 output valid", mc2_valid.ok, mc2_valid.ok ? "ok" : mc2_valid.message});

  if (!reduced.empty()) {
    if (!fs::exists(reduced)) throw IoError("no such file: " + reduced);
    const auto given = read_system_file(reduced);
    const auto expected = materialize(OracleContext(gz2), 0);
    const auto mm = first_mismatch(expected, given);
    results.push_back({"reduced file matches oracle", !mm.has_value(), mm ? mm->describe() : "ok"});
  }
  return report(results);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduce integer linear systems to 2-commodity Laplacian systems"};
  app.require_subcommand(1);

  const std::map<std::string, Level> from_levels{{"g", Level::G}, {"gz", Level::Gz}, {"gz2", Level::Gz2}};
  const std::map<std::string, Level> to_levels{{"gz", Level::Gz}, {"gz2", Level::Gz2}, {"mc2", Level::MC2}};

  ReduceOptions reduce_opt;
  auto* reduce = app.add_subcommand("reduce", "Run pipeline stages and write the reduced system");
  reduce->add_option("input", reduce_opt.input, "Input matrix file")->required();
  reduce->add_option("--from", reduce_opt.from, "Input class: g, gz, gz2")
      ->transform(CLI::CheckedTransformer(from_levels, CLI::ignore_case));
  reduce->add_option("--to", reduce_opt.to, "Output class: gz, gz2, mc2")
      ->transform(CLI::CheckedTransformer(to_levels, CLI::ignore_case));
  reduce->add_option("-o,--output", reduce_opt.output, "Output file (default <input stem>.<to>.mat)");

  std::string input;
  std::size_t row = 0;
  std::size_t col = 0;
  auto* entry = app.add_subcommand("entry", "Print one entry of the reduced MC2 matrix of a Gz2 input");
  entry->add_option("input", input, "Gz2 matrix file")->required();
  entry->add_option("i", row, "Row (1-based)")->required();
  entry->add_option("j", col, "Column (1-based)")->required();

  auto* dims = app.add_subcommand("dims", "Print the reduced MC2 dimensions of a Gz2 input");
  dims->add_option("input", input, "Gz2 matrix file")->required();

  auto* stats = app.add_subcommand("stats", "Print per-row bit counts and gadget counts of a Gz2 input");
  stats->add_option("input", input, "Gz2 matrix file")->required();

  std::string reduced;
  std::uint64_t seed = 7;
  std::size_t count = 100;
  auto* verify = app.add_subcommand("verify", "Check a system end to end with exact arithmetic");
  verify->add_option("input", input, "Matrix file (class G, Gz or Gz2)")->required();
  verify->add_option("--reduced", reduced, "MC2 file to compare against the entry oracle");
  verify->add_option("--seed", seed, "Seed for the planted solution");

  auto* self = app.add_subcommand("selftest", "Run golden checks and seeded randomized suites");
  self->add_option("--seed", seed, "Random seed");
  self->add_option("--count", count, "Instances per randomized suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*reduce) return cmd_reduce(reduce_opt);
    if (*entry) return cmd_entry(input, row, col);
    if (*dims) return cmd_dims(input);
    if (*stats) return cmd_stats(input);
    if (*verify) return cmd_verify(input, reduced, seed);
    if (*self) return report(selftest(seed, count));
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitIo;
}
