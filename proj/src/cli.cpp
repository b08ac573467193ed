#include <chrono>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gp/geometry.hpp"
#include "gp/harness.hpp"

namespace gp::harness {

namespace {

constexpr int kExitRealizable = 0;
constexpr int kExitUnrealizable = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

int run_decide_like(const std::vector<std::string>& triple_arg, const std::string& tagged_arg,
                    const std::string& tokens_arg, bool print_record) {
  decide::Verdict verdict;
  core::Triple base;
  if (!tagged_arg.empty()) {
    core::TaggedPattern p = core::parse_tagged(tagged_arg);
    for (int l = 0; l < 3; ++l) base.perms[l] = p.lines[l].perm;
    auto t0 = std::chrono::steady_clock::now();
    verdict = decide::decide_tagged(p);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (print_record && base.size() <= 10)
      std::cout << record_to_json(make_record(base, verdict, ms)) << "\n";
    else
      std::cout << (verdict.realizable() ? "realizable" : "unrealizable") << "\n";
    return verdict.realizable() ? kExitRealizable : kExitUnrealizable;
  }
  std::string text = !triple_arg.empty() ? join(triple_arg) : tokens_arg;
  base = core::parse_triple(text);
  auto t0 = std::chrono::steady_clock::now();
  verdict = decide::decide_full(base);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  if (print_record && base.size() <= 10)
    std::cout << record_to_json(make_record(base, verdict, ms)) << "\n";
  else
    std::cout << (verdict.realizable() ? "realizable" : "unrealizable") << "\n";
  return verdict.realizable() ? kExitRealizable : kExitUnrealizable;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"exact decision tool for geometric permutation triples"};
  app.require_subcommand(1);

  std::vector<std::string> triple_arg;
  std::string tagged_arg, tokens_arg, input_arg, out_arg;
  int size_arg = 0, max_size_arg = 2, threads_arg = 0;
  bool no_short_circuit = false, long_run = false;
  std::uint64_t start_index = 0;

  auto add_instance_options = [&](CLI::App* cmd) {
    cmd->add_option("--triple", triple_arg, "three digit words (n <= 10)")->expected(1, 3);
    cmd->add_option("--tagged", tagged_arg, "token grammar with z/o tags");
    cmd->add_option("--tokens", tokens_arg, "token grammar without tags");
  };

  auto* decide_cmd = app.add_subcommand("decide", "decide realizability");
  add_instance_options(decide_cmd);
  auto* realize_cmd = app.add_subcommand("realize", "decide and print a certificate record");
  add_instance_options(realize_cmd);
  auto* verify_cmd = app.add_subcommand("verify", "re-verify certificates in a record file");
  verify_cmd->add_option("--input", input_arg, "record file")->required();
  auto* enum_cmd = app.add_subcommand("enumerate", "decide all normalized triples of a size");
  enum_cmd->add_option("--size", size_arg, "permutation size")->required();
  enum_cmd->add_option("--out", out_arg, "output record file")->required();
  enum_cmd->add_flag("--no-short-circuit", no_short_circuit, "exhaust every instance");
  enum_cmd->add_option("--threads", threads_arg, "worker count (default GP_THREADS)");
  enum_cmd->add_option("--start-index", start_index, "resume after this many triples");
  auto* mine_cmd = app.add_subcommand("mine", "minimal forbidden tagged patterns");
  mine_cmd->add_option("--max-size", max_size_arg, "largest size to mine")->required();
  mine_cmd->add_flag("--long", long_run, "allow the week-scale sizes (5+)");
  mine_cmd->add_option("--threads", threads_arg, "worker count (default GP_THREADS)");
  auto* norm_cmd = app.add_subcommand("normalize", "normal form of a triple");
  norm_cmd->add_option("--triple", triple_arg, "three digit words")->expected(1, 3);
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force cell oracle (n <= 3)");
  oracle_cmd->add_option("--tagged", tagged_arg, "token grammar with z/o tags")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (decide_cmd->parsed() || realize_cmd->parsed()) {
      int sources = (!triple_arg.empty()) + (!tagged_arg.empty()) + (!tokens_arg.empty());
      if (sources != 1) {
        std::cerr << "exactly one of --triple, --tagged, --tokens is required\n";
        return kExitUsage;
      }
      return run_decide_like(triple_arg, tagged_arg, tokens_arg, realize_cmd->parsed());
    }
    if (verify_cmd->parsed()) {
      auto records = load_records(input_arg);
      std::size_t bad = 0;
      for (std::size_t i = 0; i < records.size(); ++i) {
        if (!reverify_record(records[i])) {
          ++bad;
          std::cout << "record " << i << ": FAIL\n";
        }
      }
      std::cout << records.size() - bad << "/" << records.size() << " records verified\n";
      return bad == 0 ? kExitRealizable : kExitUnrealizable;
    }
    if (enum_cmd->parsed()) {
      RunOptions opts;
      opts.threads = threads_arg;
      opts.short_circuit = !no_short_circuit;
      opts.start_index = start_index;
      auto summary = run_enumeration(size_arg, out_arg, opts);
      std::cout << "size " << summary.n << ": " << summary.total << " normalized triples, "
                << summary.realizable << " realizable, " << summary.unrealizable
                << " unrealizable (" << summary.tagged_instances << " tagged instances)\n";
      return kExitRealizable;
    }
    if (mine_cmd->parsed()) {
      auto classes = mine_minimal_forbidden(max_size_arg, long_run, threads_arg);
      for (const auto& p : classes) std::cout << core::format_pattern(p) << "\n";
      std::cerr << classes.size() << " minimal forbidden classes up to size " << max_size_arg
                << "\n";
      return kExitRealizable;
    }
    if (norm_cmd->parsed()) {
      core::Triple t = core::parse_triple(join(triple_arg));
      std::cout << core::format_triple(core::normalize_triple(t)) << "\n";
      return kExitRealizable;
    }
    if (oracle_cmd->parsed()) {
      core::TaggedPattern p = core::parse_tagged(tagged_arg);
      auto cfg = geom::oracle_decide_tagged(p);
      std::cout << (cfg ? "realizable" : "unrealizable") << "\n";
      return cfg ? kExitRealizable : kExitUnrealizable;
    }
  } catch (const core::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const decide::lemma7_violation& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gp::harness
