// Copyright 2026 The Sentagg Authors.
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

#include "sentagg/cli.h"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sentagg/aggregate.h"
#include "sentagg/config.h"
#include "sentagg/error.h"
#include "sentagg/fd.h"
#include "sentagg/jsonl.h"
#include "sentagg/oracle.h"
#include "sentagg/plan_json.h"
#include "sentagg/realize.h"

namespace sentagg {
namespace {

using nlohmann::json;

std::string Dump(const json &doc) {
  return doc.dump(2, ' ', false, json::error_handler_t::replace) + "\n";
}

bool ReadAll(const std::string &path, std::istream &in, std::string *text) {
  if (path == "-") {
    text->assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) return false;
  text->assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  return true;
}

// Loads --config, or the built-in domain when the path is empty.
bool LoadRunConfig(const std::string &path, RunConfig *config, std::ostream &err) {
  if (path.empty()) {
    *config = DefaultConfig();
    return true;
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    err << "sentagg: cannot read config " << path << "\n";
    return false;
  }
  json doc = json::parse(file, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    err << "sentagg: config " << path << " is not valid JSON\n";
    return false;
  }
  try {
    *config = LoadConfig(doc);
  } catch (const Error &e) {
    err << "sentagg: config " << path << ": " << e.what() << "\n";
    return false;
  }
  return true;
}

int Emit(const std::string &payload, const std::string &out_path, std::ostream &out,
         std::ostream &err) {
  if (out_path.empty() || out_path == "-") {
    out << payload;
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file || !(file << payload)) {
    err << "sentagg: cannot write " << out_path << "\n";
    return kExitInputError;
  }
  return kExitOk;
}

struct RunFlags {
  std::string input = "-";
  std::string format = "jsonl";
  std::string config;
  std::string emit = "text";
  std::string out;
  std::vector<std::string> disable;
  std::size_t max_clauses = 0;
};

struct GenFlags {
  std::uint64_t seed = 0;
  std::size_t messages = 8;
  std::size_t pool = 3;
  std::string config;
  std::string out;
};

int DoRun(const RunFlags &flags, std::istream &in, std::ostream &out, std::ostream &err) {
  RunConfig config;
  if (!LoadRunConfig(flags.config, &config, err)) return kExitConfigError;
  for (const auto &name : flags.disable) config.aggregate.disabled_steps.insert(*ParseStep(name));
  if (flags.max_clauses > 0) config.aggregate.max_clauses = flags.max_clauses;

  std::string text;
  if (!ReadAll(flags.input, in, &text)) {
    err << "sentagg: cannot read input " << flags.input << "\n";
    return kExitInputError;
  }
  try {
    const std::vector<Message> msgs =
        flags.format == "fd" ? ParseFdStream(text, config.schema, &config.lexicon.casing)
                             : ParseJsonl(text, config.schema, &config.lexicon.casing);
    const DocumentPlan plan = Aggregate(msgs, config.schema, config.aggregate);

    std::string payload;
    if (flags.emit == "text") {
      payload = RealizeDocument(plan, config.lexicon, config.realize);
      if (!payload.empty()) payload += "\n";
    } else if (flags.emit == "plan") {
      payload = Dump(PlanToJson(plan));
    } else {
      const ConcisenessReport report =
          ConcisenessStats(msgs, plan, config.schema, config.lexicon, config.realize);
      if (flags.emit == "stats") {
        payload = Dump(ReportToJson(report));
      } else {
        payload = Dump({{"text", RealizeDocument(plan, config.lexicon, config.realize)},
                        {"plan", PlanToJson(plan)},
                        {"stats", ReportToJson(report)}});
      }
    }
    return Emit(payload, flags.out, out, err);
  } catch (const Error &e) {
    err << "sentagg: " << (flags.input == "-" ? "<stdin>" : flags.input) << ": " << e.what()
        << "\n";
    return e.IsInputError() ? kExitInputError : kExitConfigError;
  }
}

int DoGen(const GenFlags &flags, std::ostream &out, std::ostream &err) {
  RunConfig config;
  if (!LoadRunConfig(flags.config, &config, err)) return kExitConfigError;

  GenParams params;
  params.schema = config.schema;
  params.n_messages = flags.messages;
  for (const auto &decl : config.schema.attributes) {
    params.pool_sizes[decl.name] = flags.pool;
    // Verbs and canonical spellings double as value vocabularies, so generated
    // corpora realize without further configuration.
    std::vector<AtomicValue> pool;
    if (decl.name == config.lexicon.verb_attribute) {
      for (const auto &[action, verb] : config.lexicon.verbs) pool.push_back(Symbol{action});
    } else if (decl.type == ValueType::kSymbol) {
      auto rule = config.lexicon.casing.rules().find(decl.name);
      if (rule != config.lexicon.casing.rules().end()) {
        for (const auto &[lowered, spelling] : rule->second.table) {
          if (pool.size() < flags.pool) pool.push_back(Symbol{spelling});
        }
      }
    }
    if (!pool.empty()) params.pools[decl.name] = std::move(pool);
  }
  err << "sentagg: generator " << kGeneratorName << " seed " << flags.seed << "\n";
  return Emit(SerializeJsonl(GenRandomInstance(flags.seed, params)), flags.out, out, err);
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Aggregates structured report messages into coordinated English sentences.",
               "sentagg"};
  app.require_subcommand(1, 1);

  RunFlags run;
  CLI::App *run_cmd = app.add_subcommand("run", "Aggregate and realize messages (default).");
  run_cmd->add_option("--input", run.input, "Input file, or - for stdin");
  run_cmd->add_option("--format", run.format, "Input format")
      ->check(CLI::IsMember({"fd", "jsonl"}));
  run_cmd->add_option("--config", run.config, "JSON config (schema, lexicon, options)");
  run_cmd->add_option("--emit", run.emit, "What to write")
      ->check(CLI::IsMember({"text", "plan", "stats", "all"}));
  run_cmd->add_option("--out", run.out, "Output file (default stdout)");
  run_cmd->add_option("--disable", run.disable, "Disable a pipeline step (repeatable)")
      ->check(CLI::IsMember({"sort", "merge", "delete", "break"}));
  run_cmd->add_option("--max-clauses", run.max_clauses, "Maximum clauses per sentence")
      ->check(CLI::PositiveNumber);

  GenFlags gen;
  CLI::App *gen_cmd = app.add_subcommand("gen", "Write a random JSONL corpus.");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--messages", gen.messages, "Number of messages");
  gen_cmd->add_option("--pool", gen.pool, "Values per attribute")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--config", gen.config, "JSON config supplying the schema");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  std::vector<std::string> argv = args;
  const bool explicit_command =
      !argv.empty() && (argv[0] == "run" || argv[0] == "gen" || argv[0] == "-h" ||
                        argv[0] == "--help");
  if (!explicit_command) argv.insert(argv.begin(), "run");
  std::reverse(argv.begin(), argv.end());  // CLI11 consumes from the back.
  try {
    app.parse(argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }
  if (gen_cmd->parsed()) return DoGen(gen, out, err);
  return DoRun(run, in, out, err);
}

}  // namespace sentagg
