// Copyright 2026 The snakebox Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "snakebox/assembler.hpp"
#include "snakebox/extended.hpp"
#include "snakebox/merge_tree.hpp"
#include "snakebox/snake_file.hpp"
#include "snakebox/verifier.hpp"

namespace {

using namespace snakebox;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadArguments = 2;
constexpr int kUnresolved = 3;

// CyclicSequence works on ranks up to length 11.
constexpr int kMaxN = 5;

struct GenerateArgs {
  int n = 0;
  std::string construction = "he";
  std::string out;
  bool fallback_he = false;
  std::string dump_tree;
  std::string dump_graph;
  int budget_minutes = 25;
};

struct VerifyArgs {
  std::string in;
  std::string mode;
};

double SecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename Write>
void Dump(const std::string& path, Write write) {
  if (path.empty()) return;
  std::ofstream os(path);
  if (!os) throw SnakeFileError("cannot write " + path);
  write(os);
}

int Generate(const GenerateArgs& args) {
  const int min_n = args.construction == "extended" ? 3 : 2;
  if (args.n < min_n || args.n > kMaxN) {
    std::cerr << "--n must be in " << min_n << ".." << kMaxN << " for " << args.construction << '\n';
    return kBadArguments;
  }
  const auto start = std::chrono::steady_clock::now();
  Dump(args.dump_tree, [&](std::ostream& os) { WriteTree(os, BuildMergeTree(args.n)); });
  Dump(args.dump_graph, [&](std::ostream& os) {
    const ChainSet chains = BuildAllChains(args.n);
    WriteGraph(os, BuildChainGraph(chains), chains);
  });

  Snake snake;
  if (args.construction == "he") {
    snake = AssembleHeSnake(args.n);
  } else {
    ExtendedOptions options;
    options.budget = std::chrono::minutes(args.budget_minutes);
    ExtendedReport report;
    auto assembly = TryAssembleExtended(args.n, options, report);
    if (assembly) {
      snake = std::move(assembly->snake);
    } else if (args.fallback_he) {
      std::cerr << report.ToText() << "falling back to he\n";
      snake = AssembleHeSnake(args.n);
    } else {
      std::cerr << report.ToText();
      return kUnresolved;
    }
  }
  if (!args.out.empty()) SaveSnakeFile(args.out, snake);
  std::cout << "size " << snake.size() << '\n'
            << "construction " << snake.construction << '\n'
            << "seconds " << SecondsSince(start) << '\n';
  return kOk;
}

int Verify(const VerifyArgs& args) {
  const SnakeFile file = LoadSnakeFile(args.in);
  VerifyMode mode = file.snake.length <= 7 ? VerifyMode::kFullDistance : VerifyMode::kStructural;
  if (args.mode == "full") mode = VerifyMode::kFullDistance;
  if (args.mode == "structural") mode = VerifyMode::kStructural;
  const auto report = VerifySnake(file.snake, mode, file.declared_size);
  const auto bounds = CheckUpperBounds(file.snake);
  WriteReport(std::cout, report);
  WriteReport(std::cout, bounds);
  return report.passed() && bounds.passed() ? kOk : kFailed;
}

int Stats(const std::string& in) {
  const SnakeFile file = LoadSnakeFile(in);
  const Snake& snake = file.snake;
  std::map<int, std::size_t> histogram;
  for (Transition t : snake.transitions) ++histogram[t.index];
  std::cout << "n " << snake.length << '\n'
            << "construction " << snake.construction << '\n'
            << "size " << snake.size() << '\n';
  for (const auto& [index, count] : histogram) std::cout << "t_" << index << ' ' << count << '\n';
  const auto missing = MissingCodewords(snake);
  std::cout << "missing " << missing.size() << '\n';
  if (snake.length <= 7) {
    for (const Permutation& p : missing) std::cout << "  " << p << '\n';
  }
  return kOk;
}

int Chains(int n) {
  if (n < 2 || n > kMaxN) {
    std::cerr << "--n must be in 2.." << kMaxN << '\n';
    return kBadArguments;
  }
  const ChainSet chains = BuildAllChains(n);
  for (int id = 0; id < chains.size(); ++id) {
    const Chain& c = chains.chain(id);
    std::cout << 'c' << id + 1 << ' ' << FormatSequence(c.name.StartingFrom(4)) << "-[1,2] "
              << c.size() << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kendall-metric snakes over alternating groups"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "build a snake and write it to a file");
  generate->add_option("--n", gen.n, "parameter n; permutations have length 2n+1")->required();
  generate->add_option("--construction", gen.construction)->check(CLI::IsMember({"he", "extended"}));
  generate->add_option("--out", gen.out, "snake file to write");
  generate->add_flag("--fallback-he", gen.fallback_he, "emit the he snake if extended is unresolved");
  generate->add_option("--dump-tree", gen.dump_tree, "write the merge tree edges");
  generate->add_option("--dump-graph", gen.dump_graph, "write the chain graph (n >= 3)");
  generate->add_option("--budget-minutes", gen.budget_minutes, "extended search budget")
      ->check(CLI::PositiveNumber);

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "check a snake file");
  verify->add_option("in", ver.in)->required();
  verify->add_option("--mode", ver.mode, "structural or full; full is the default up to length 7")
      ->check(CLI::IsMember({"structural", "full"}));

  std::string stats_in;
  auto* stats = app.add_subcommand("stats", "size, transition histogram and missing codewords");
  stats->add_option("in", stats_in)->required();

  int chains_n = 0;
  auto* chains = app.add_subcommand("chains", "list chain names, written from 4");
  chains->add_option("--n", chains_n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadArguments;
  }

  try {
    if (*generate) return Generate(gen);
    if (*verify) return Verify(ver);
    if (*stats) return Stats(stats_in);
    if (*chains) return Chains(chains_n);
  } catch (const SnakeFileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadArguments;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kBadArguments;
}
