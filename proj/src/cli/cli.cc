//
// Copyright 2026 The Stratintent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "stratintent/cli/cli.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "stratintent/agent/encoders.h"
#include "stratintent/cli/simulate.h"
#include "stratintent/cli/state_io.h"
#include "stratintent/corpus/augment.h"
#include "stratintent/corpus/generate.h"
#include "stratintent/corpus/templates.h"
#include "stratintent/extract/train.h"

namespace stratintent::cli {

namespace {

using corpus::CorpusExample;

// Shortest decimal that reads back to the same double.
std::string number(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fixed(double v, int digits) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << v;
  return s.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()))) {
    throw Error("cannot write " + path);
  }
}

std::vector<CorpusExample> load_corpus(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot read " + path);
  return corpus::read_corpus(f);
}

void save_corpus(const std::vector<CorpusExample>& examples, const std::string& path,
                 std::ostream& out) {
  if (path.empty() || path == "-") {
    corpus::write_corpus(examples, out);
    return;
  }
  std::ostringstream buffer;
  corpus::write_corpus(examples, buffer);
  write_file(path, buffer.str());
}

corpus::TemplateBank templates_from(const std::string& path) {
  return path.empty() ? corpus::builtin_templates() : corpus::load_templates(path);
}

// --- gen-corpus ----------------------------------------------------------

struct GenArgs {
  int n = 0;
  uint64_t seed = 0;
  std::vector<int> maps;
  std::string templates;
  std::string out;
};

int gen_corpus(const GenArgs& a, std::ostream& out, std::ostream& err) {
  for (int id : a.maps) {
    if (!risk::find_initialization(risk::builtin_initializations(), id)) {
      throw Error("unknown map id " + std::to_string(id));
    }
  }
  corpus::GenerateOptions options;
  options.count = a.n;
  options.seed = a.seed;
  options.map_ids = a.maps;
  const auto examples = corpus::generate_corpus(options, templates_from(a.templates));
  save_corpus(examples, a.out, out);

  std::map<size_t, int> per_count;
  std::array<int, intent::kNumConstraintClasses> per_class{};
  for (const auto& ex : examples) {
    const auto active = ex.intent.active_constraints();
    ++per_count[active.size()];
    for (const auto& c : active) ++per_class[static_cast<int>(c.cls) - 1];
  }
  std::ostream& log = (a.out.empty() || a.out == "-") ? err : out;
  log << "examples: " << examples.size() << "\n";
  log << "constraints per example:";
  for (const auto& [k, n] : per_count) log << " " << k << ":" << n;
  log << "\nconstraint classes:";
  for (int c = 0; c < intent::kNumConstraintClasses; ++c) {
    log << " C" << (c + 1) << ":" << per_class[c];
  }
  log << "\n";
  return kExitSuccess;
}

// --- augment -------------------------------------------------------------

struct AugmentArgs {
  std::string corpus;
  std::string out;
  uint64_t seed = 0;
  int candidates = 4;
  double min_edit_ratio = 0.15;
};

int augment_cmd(const AugmentArgs& a, std::ostream& out, std::ostream& err) {
  const auto input = load_corpus(a.corpus);
  corpus::FilterParams params;
  params.min_edit_distance_ratio = a.min_edit_ratio;
  const corpus::RuleParaphraser paraphraser(a.candidates);
  const auto results = corpus::augment_corpus(input, paraphraser, params, a.seed);
  std::vector<CorpusExample> examples;
  long sentences = 0, replaced = 0, keyword = 0, similar = 0;
  for (const auto& r : results) {
    examples.push_back(r.example);
    for (const auto& t : r.trace) {
      ++sentences;
      replaced += t.replacement.has_value();
      keyword += t.rejected_keywords;
      similar += t.rejected_similar;
    }
  }
  save_corpus(examples, a.out, out);
  std::ostream& log = (a.out.empty() || a.out == "-") ? err : out;
  log << "examples: " << examples.size() << "\nsentences: " << sentences
      << "\nreplaced: " << replaced << "\nrejected (keywords): " << keyword
      << "\nrejected (too similar): " << similar << "\n";
  return kExitSuccess;
}

// --- training flags shared by train and eval ------------------------------

struct TrainArgs {
  std::string corpus;
  std::string pretrain;
  std::string task = "both";
  extract::TrainConfig config;
  std::optional<int> epochs;
  std::optional<int> batch;
  std::optional<double> lr;
};

void add_train_flags(CLI::App* app, TrainArgs& a) {
  app->add_option("--task", a.task, "goals, constraints or both")
      ->check(CLI::IsMember({"goals", "constraints", "both"}))
      ->capture_default_str();
  app->add_option("--pretrain", a.pretrain, "Corpus to train on before --corpus");
  app->add_option("--alpha", a.config.alpha, "Goal loss CE weight")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app->add_option("--epochs", a.epochs, "Epochs for every trained head group");
  app->add_option("--batch", a.batch, "Batch size for every trained head group");
  app->add_option("--lr", a.lr, "Learning rate for every trained head group");
  app->add_option("--goal-epochs", a.config.goal_epochs)->capture_default_str();
  app->add_option("--goal-batch", a.config.goal_batch)->capture_default_str();
  app->add_option("--goal-lr", a.config.goal_lr)->capture_default_str();
  app->add_option("--constraint-epochs", a.config.constraint_epochs)->capture_default_str();
  app->add_option("--constraint-batch", a.config.constraint_batch)->capture_default_str();
  app->add_option("--constraint-lr", a.config.constraint_lr)->capture_default_str();
  app->add_option("--momentum", a.config.momentum)->capture_default_str();
  app->add_option("--anneal-k", a.config.anneal_k, "Temperature schedule steepness")
      ->capture_default_str();
  app->add_option("--anneal-mid", a.config.anneal_mid, "Temperature schedule midpoint")
      ->capture_default_str();
  app->add_option("--init-scale", a.config.init_scale)->capture_default_str();
  app->add_option("--text-dim", a.config.features.text_dim, "Hashed text buckets")
      ->capture_default_str();
  app->add_option("--seed", a.config.seed)->capture_default_str();
}

// Resolves the shorthand flags; returns a usage message or "".
std::string finish_train_args(TrainArgs& a) {
  a.config.task = *extract::parse_task(a.task);
  if (a.epochs) a.config.goal_epochs = a.config.constraint_epochs = *a.epochs;
  if (a.batch) a.config.goal_batch = a.config.constraint_batch = *a.batch;
  if (a.lr) a.config.goal_lr = a.config.constraint_lr = *a.lr;
  return extract::find_config_violation(a.config);
}

std::string format_table(const extract::KFoldReport* kfold, const extract::Metrics& pooled) {
  std::ostringstream s;
  s << "| Model | Goals correct (of 6) | Constraints correct (of 8) |\n"
    << "|---|---|---|\n";
  auto cell = [&](const std::vector<double>& xs) {
    double m = 0;
    for (double x : xs) m += x;
    m /= static_cast<double>(xs.size());
    double v = 0;
    for (double x : xs) v += (x - m) * (x - m);
    const double sd = xs.size() > 1 ? std::sqrt(v / static_cast<double>(xs.size() - 1)) : 0.0;
    return fixed(m, 2) + " +/- " + fixed(sd, 2);
  };
  if (kfold != nullptr) {
    std::vector<double> g, c, b;
    for (const auto& m : kfold->per_fold) {
      g.push_back(m.mean_goals_correct());
      c.push_back(m.mean_constraints_correct());
      b.push_back(static_cast<double>(m.null_baseline_correct) / m.examples);
    }
    s << "| hashed n-gram linear | " << cell(g) << " | " << cell(c) << " |\n"
      << "| all-Null baseline | n/a | " << cell(b) << " |\n";
  } else {
    s << "| hashed n-gram linear | " << fixed(pooled.mean_goals_correct(), 2) << " | "
      << fixed(pooled.mean_constraints_correct(), 2) << " |\n"
      << "| all-Null baseline | n/a | "
      << fixed(static_cast<double>(pooled.null_baseline_correct) / pooled.examples, 2)
      << " |\n";
  }
  return s.str();
}

// --- train ---------------------------------------------------------------

struct TrainCmdArgs {
  TrainArgs train;
  std::string out;
  std::string log;
};

int train_cmd(const TrainCmdArgs& a, std::ostream& out) {
  const auto data = load_corpus(a.train.corpus);
  std::vector<CorpusExample> pre;
  if (!a.train.pretrain.empty()) pre = load_corpus(a.train.pretrain);
  const extract::TrainResult r =
      extract::train(data, a.train.config, a.train.pretrain.empty() ? nullptr : &pre);
  extract::save_model(r.model, a.out);
  const std::string log = extract::log_json(r.log);
  if (!a.log.empty()) write_file(a.log, log);
  for (const auto& e : r.log) {
    out << e.stage << " " << (e.kind == extract::HeadKind::kGoal ? "goals" : "constraints")
        << " epoch " << e.epoch << " loss " << fixed(e.mean_loss, 6);
    if (e.kind == extract::HeadKind::kConstraint) out << " T " << fixed(e.temperature, 4);
    out << "\n";
  }
  out << "model written to " << a.out << "\n";
  return kExitSuccess;
}

// --- eval ----------------------------------------------------------------

struct EvalArgs {
  TrainArgs train;
  std::string model;
  std::string out;
};

int eval_cmd(const EvalArgs& a, std::ostream& out) {
  const auto data = load_corpus(a.train.corpus);
  std::string report;
  if (!a.model.empty()) {
    const extract::Metrics m = extract::evaluate(extract::load_model(a.model), data);
    report = extract::report_json(m);
    out << format_table(nullptr, m);
  } else {
    const extract::KFoldReport k = extract::kfold_evaluate(data, a.train.config);
    report = extract::report_json(k);
    out << format_table(&k, k.pooled);
  }
  if (a.out.empty() || a.out == "-") {
    out << report;
  } else {
    write_file(a.out, report);
  }
  return kExitSuccess;
}

// --- predict -------------------------------------------------------------

struct PredictArgs {
  std::string model;
  std::string corpus;
  std::string out;
};

int predict_cmd(const PredictArgs& a, std::ostream& out) {
  const extract::ExtractionModel model = extract::load_model(a.model);
  std::vector<CorpusExample> examples = load_corpus(a.corpus);
  for (auto& ex : examples) {
    ex.intent = extract::predict(model, extract::featurize(ex, model.features));
  }
  save_corpus(examples, a.out, out);
  return kExitSuccess;
}

// --- check ---------------------------------------------------------------

int check_cmd(const std::string& path, std::ostream& out) {
  const auto examples = load_corpus(path);
  const auto& map = risk::canonical_map();
  int dirty = 0;
  for (size_t i = 0; i < examples.size(); ++i) {
    const auto& ex = examples[i];
    std::vector<intent::Conflict> conflicts = intent::check_consistency(ex.intent).conflicts;
    for (auto& c : intent::check_against_selections(map, ex.intent,
                                                    corpus::selections_state(ex), risk::kEgo)
                       .conflicts) {
      conflicts.push_back(std::move(c));
    }
    const std::string tag = "example " + std::to_string(i + 1) + ": ";
    if (conflicts.empty()) {
      out << tag << "clean\n";
      continue;
    }
    ++dirty;
    for (const auto& c : conflicts) {
      out << tag << "[" << c.rule << "] slot " << c.slot_a + 1;
      if (c.slot_b >= 0) out << " and " << c.slot_b + 1;
      out << ": " << c.message << "\n";
    }
  }
  out << examples.size() << " examples, " << dirty << " with conflicts\n";
  return dirty == 0 ? kExitSuccess : kExitFailure;
}

// --- simulate ------------------------------------------------------------

struct SimulateArgs {
  SimulationOptions options;
  std::string policy = "random";
  std::string reward = "sparse";
  std::string states_out;
  int state_stride = 10;
};

int simulate_cmd(SimulateArgs a, std::ostream& out) {
  a.options.policy = *parse_policy(a.policy);
  a.options.reward = *agent::parse_reward(a.reward);
  const auto& map = risk::canonical_map();
  std::ostringstream states;
  long seen = 0;
  StateVisitor visit;
  if (!a.states_out.empty()) {
    visit = [&](int, const risk::GameState& s) {
      if (seen++ % a.state_stride == 0) states << state_to_json_line(map, s) << "\n";
    };
  }
  const SimulationStats st =
      simulate(map, risk::builtin_initializations(), a.options, visit);
  if (!a.states_out.empty()) write_file(a.states_out, states.str());
  out << "episodes: " << st.episodes << "\nwins: " << st.wins << "\nlosses: " << st.losses
      << "\ndraws: " << st.draws << "\nmean reward: " << number(st.mean_reward())
      << "\nmean turns: " << number(st.mean_turns()) << "\nmax turns: " << st.max_turns
      << "\ninvariant violations: " << st.invariant_violations << "\n";
  return st.invariant_violations == 0 ? kExitSuccess : kExitFailure;
}

// --- encode --------------------------------------------------------------

int encode_cmd(const std::string& path, agent::EncoderId id, std::ostream& out) {
  std::ifstream f(path);
  if (!f) throw Error("cannot read " + path);
  const auto& map = risk::canonical_map();
  for (const auto& s : read_states(map, f)) {
    const auto enc = agent::encode(map, s, id);
    for (size_t k = 0; k < enc.values.size(); ++k) {
      if (k) out << ",";
      out << number(enc.values[k]);
    }
    out << "\n";
  }
  return kExitSuccess;
}

std::string encoder_list() {
  std::string s;
  for (auto id : agent::kAllEncoders) {
    if (!s.empty()) s += ", ";
    s += agent::encoder_name(id);
  }
  return s;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Commander's intent extraction for a three-player Risk variant", "stratintent"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-corpus", "Generate a synthetic corpus");
  gen_cmd->add_option("--n", gen.n, "Number of examples")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen.seed)->capture_default_str();
  gen_cmd->add_option("--maps", gen.maps, "Map ids, comma separated (default: all)")
      ->delimiter(',');
  gen_cmd->add_option("--templates", gen.templates, "Template file (default: built in)");
  gen_cmd->add_option("--out", gen.out, "Output corpus, - for stdout")->required();

  AugmentArgs aug;
  auto* aug_cmd = app.add_subcommand("augment", "Paraphrase a corpus through the filter");
  aug_cmd->add_option("--corpus", aug.corpus)->required();
  aug_cmd->add_option("--out", aug.out)->required();
  aug_cmd->add_option("--seed", aug.seed)->capture_default_str();
  aug_cmd->add_option("--candidates", aug.candidates, "Paraphrases tried per sentence")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  aug_cmd->add_option("--min-edit-ratio", aug.min_edit_ratio)
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();

  TrainCmdArgs tr;
  auto* train_sub = app.add_subcommand("train", "Train an extraction model");
  train_sub->add_option("--corpus", tr.train.corpus)->required();
  add_train_flags(train_sub, tr.train);
  train_sub->add_option("--out", tr.out, "Model file")->required();
  train_sub->add_option("--log", tr.log, "Training log (JSON)");

  EvalArgs ev;
  auto* eval_sub = app.add_subcommand(
      "eval", "Evaluate by k-fold cross-validation, or a saved model on a corpus");
  eval_sub->add_option("--corpus", ev.train.corpus)->required();
  eval_sub->add_option("--model", ev.model, "Score this model instead of cross-validating");
  eval_sub->add_option("--folds", ev.train.config.folds)->capture_default_str();
  add_train_flags(eval_sub, ev.train);
  eval_sub->add_option("--out", ev.out, "Report file (JSON), - for stdout");

  PredictArgs pr;
  auto* predict_sub = app.add_subcommand("predict", "Label a corpus with a saved model");
  predict_sub->add_option("--model", pr.model)->required();
  predict_sub->add_option("--corpus", pr.corpus)->required();
  predict_sub->add_option("--out", pr.out, "Output corpus, - for stdout");

  std::string check_file;
  auto* check_sub = app.add_subcommand("check", "Report constraint conflicts");
  check_sub->add_option("--example-file", check_file)->required();

  SimulateArgs sim;
  auto* sim_sub = app.add_subcommand("simulate", "Play scripted games from an initialization");
  sim_sub->add_option("--init-id", sim.options.init_id)->capture_default_str();
  sim_sub->add_option("--episodes", sim.options.episodes)
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sim_sub->add_option("--policy", sim.policy)
      ->check(CLI::IsMember({"random", "heuristic"}))
      ->capture_default_str();
  sim_sub->add_option("--reward", sim.reward)
      ->check(CLI::IsMember({"sparse", "turn-count", "survival", "rules-based"}))
      ->capture_default_str();
  sim_sub->add_option("--seed", sim.options.seed)->capture_default_str();
  sim_sub->add_option("--states-out", sim.states_out, "Write ego-to-move states here");
  sim_sub->add_option("--state-stride", sim.state_stride, "Keep every Nth state")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string state_file, encoder;
  auto* enc_sub = app.add_subcommand("encode", "Encode states as feature vectors");
  enc_sub->add_option("--state-file", state_file)->required();
  enc_sub->add_option("--encoder", encoder, "One of: " + encoder_list())->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help("", CLI::AppFormatMode::Normal);
    return kExitSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto usage = [&](const std::string& message) {
    err << "error: " << message << "\n";
    return kExitUsage;
  };
  try {
    if (*gen_cmd) return gen_corpus(gen, out, err);
    if (*aug_cmd) return augment_cmd(aug, out, err);
    if (*train_sub) {
      if (auto why = finish_train_args(tr.train); !why.empty()) return usage(why);
      return train_cmd(tr, out);
    }
    if (*eval_sub) {
      if (auto why = finish_train_args(ev.train); !why.empty()) return usage(why);
      return eval_cmd(ev, out);
    }
    if (*predict_sub) return predict_cmd(pr, out);
    if (*check_sub) return check_cmd(check_file, out);
    if (*sim_sub) return simulate_cmd(sim, out);
    if (*enc_sub) {
      const auto id = agent::parse_encoder(encoder);
      if (!id) return usage("unknown encoder '" + encoder + "'; valid ids: " + encoder_list());
      return encode_cmd(state_file, *id, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return usage("no subcommand");
}

}  // namespace stratintent::cli
