// Copyright 2026 The allseason authors.
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

#include "allseason/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "allseason/feature_table.hpp"
#include "allseason/idx.hpp"
#include "allseason/pca.hpp"

namespace allseason {

namespace {

const std::set<std::string> kKnownAlgorithms = {
    "random",        "lints",           "sw-lints",
    "d-lints",       "all-season-sw",   "all-season-disc"};
const std::set<std::string> kReservedAlgorithms = {"bob", "denband"};

PruneMetric prune_metric_from_string(const std::string& name) {
  if (name == "kl") return PruneMetric::SymmetricKl;
  if (name == "mean") return PruneMetric::MeanDistance;
  throw std::invalid_argument("config: unknown prune metric '" + name + "'");
}

PruneVictim prune_victim_from_string(const std::string& name) {
  if (name == "less-certain") return PruneVictim::LessCertain;
  if (name == "more-certain") return PruneVictim::MoreCertain;
  throw std::invalid_argument("config: unknown prune victim rule '" + name +
                              "'");
}

std::string sanitize(const std::string& text) {
  std::string out;
  for (char c : text) {
    out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
            c == '.')
               ? c
               : '-';
  }
  return out.empty() ? std::string("x") : out;
}

}  // namespace

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("config: cannot open " + path);
  }
  nlohmann::json doc;
  in >> doc;

  ExperimentConfig config;
  config.name = doc.value("name", config.name);
  config.horizon = doc.value("horizon", config.horizon);
  config.batch_size = doc.value("batch_size", config.batch_size);
  config.output_dir = doc.value("output_dir", config.output_dir);
  if (doc.contains("seeds")) {
    config.seeds = doc.at("seeds").get<std::vector<std::uint64_t>>();
  }

  if (doc.contains("environment")) {
    const auto& env = doc.at("environment");
    EnvironmentSpec& spec = config.environment;
    spec.type = env.value("type", spec.type);
    spec.arms = env.value("arms", spec.arms);
    spec.dimension = env.value("dimension", spec.dimension);
    spec.noise_variance = env.value("noise_variance", spec.noise_variance);
    spec.task = env.value("task", spec.task);
    spec.env_seed = env.value("env_seed", spec.env_seed);
    spec.task_table_file = env.value("task_table_file", spec.task_table_file);
    spec.normalize_contexts =
        env.value("normalize_contexts", spec.normalize_contexts);
    if (env.contains("permutations")) {
      spec.permutations =
          env.at("permutations").get<std::vector<std::vector<int>>>();
    }
    if (env.contains("dataset")) {
      const auto& ds = env.at("dataset");
      spec.dataset.kind = ds.value("kind", spec.dataset.kind);
      spec.dataset.images = ds.value("images", spec.dataset.images);
      spec.dataset.labels = ds.value("labels", spec.dataset.labels);
      spec.dataset.path = ds.value("path", spec.dataset.path);
      spec.dataset.classes = ds.value("classes", spec.dataset.classes);
      spec.dataset.dimension = ds.value("dimension", spec.dataset.dimension);
      spec.dataset.rows = ds.value("rows", spec.dataset.rows);
      spec.dataset.separation =
          ds.value("separation", spec.dataset.separation);
      spec.dataset.subspace = ds.value("subspace", spec.dataset.subspace);
    }
    if (env.contains("pca")) {
      const auto& pca = env.at("pca");
      spec.pca.enabled = true;
      spec.pca.components = pca.value("components", spec.pca.components);
      spec.pca.variance_fraction =
          pca.value("variance_fraction", spec.pca.variance_fraction);
    }
    if (env.contains("schedule")) {
      const auto& sched = env.at("schedule");
      spec.schedule.file = sched.value("file", spec.schedule.file);
      spec.schedule.pattern = sched.value("pattern", spec.schedule.pattern);
      spec.schedule.num_params =
          sched.value("num_params", spec.schedule.num_params);
      spec.schedule.min_segment =
          sched.value("min_segment", spec.schedule.min_segment);
      spec.schedule.label = sched.value("label", spec.schedule.label);
    }
  }

  if (doc.contains("policy")) {
    const auto& pol = doc.at("policy");
    PolicySpec& spec = config.policy;
    spec.algorithm = pol.value("algorithm", spec.algorithm);
    spec.lambda = pol.value("lambda", spec.lambda);
    spec.noise_variance = pol.value("noise_variance", spec.noise_variance);
    spec.window = pol.value("window", spec.window);
    if (pol.contains("kappa")) {
      spec.discount = 1.0 - std::pow(10.0, -pol.at("kappa").get<double>());
    }
    spec.discount = pol.value("discount", spec.discount);
    spec.n_max = pol.value("n_max", spec.n_max);
    if (pol.contains("prune_metric")) {
      spec.prune_metric =
          prune_metric_from_string(pol.at("prune_metric").get<std::string>());
    }
    if (pol.contains("prune_victim")) {
      spec.prune_victim =
          prune_victim_from_string(pol.at("prune_victim").get<std::string>());
    }
    spec.shadow_enabled = pol.value("shadow_enabled", spec.shadow_enabled);
  }

  validate(config);
  return config;
}

void validate(const ExperimentConfig& config) {
  if (config.horizon < 1) {
    throw std::invalid_argument("config: horizon must be >= 1");
  }
  if (config.batch_size < 1) {
    throw std::invalid_argument("config: batch size must be >= 1");
  }
  if (config.seeds.empty()) {
    throw std::invalid_argument("config: seeds must be non-empty");
  }
  const std::string& algo = config.policy.algorithm;
  if (kReservedAlgorithms.count(algo)) {
    throw std::invalid_argument(
        "config: algorithm '" + algo +
        "' is a reserved extension slot with no built-in implementation");
  }
  if (!kKnownAlgorithms.count(algo)) {
    throw std::invalid_argument("config: unknown algorithm '" + algo + "'");
  }
  const std::string& type = config.environment.type;
  if (type != "synthetic" && type != "classification") {
    throw std::invalid_argument("config: unknown environment type '" + type +
                                "'");
  }
  const auto require_file = [](const std::string& path, const char* what) {
    if (!path.empty() && !std::filesystem::exists(path)) {
      throw std::invalid_argument(std::string("config: ") + what + " '" +
                                  path + "' does not exist");
    }
  };
  if (type == "classification") {
    const std::string& kind = config.environment.dataset.kind;
    if (kind != "idx" && kind != "feature-table" &&
        kind != "gaussian-clusters") {
      throw std::invalid_argument("config: unknown dataset kind '" + kind +
                                  "'");
    }
    const std::string& task = config.environment.task;
    if (task != "two-arm-digits" && task != "two-arm-groups" &&
        task != "arm-shift") {
      throw std::invalid_argument("config: unknown task '" + task + "'");
    }
    if (kind == "idx") {
      require_file(config.environment.dataset.images, "image file");
      require_file(config.environment.dataset.labels, "label file");
    }
    if (kind == "feature-table") {
      require_file(config.environment.dataset.path, "feature table");
    }
    require_file(config.environment.task_table_file, "task table file");
  }
  if (config.environment.schedule.file.empty() &&
      config.environment.schedule.pattern.empty()) {
    throw std::invalid_argument(
        "config: schedule needs either a file or a pattern");
  }
  require_file(config.environment.schedule.file, "schedule file");
}

double RewardLog::mean_reward() const {
  if (rows.empty()) return 0.0;
  double total = 0.0;
  for (const Row& row : rows) total += row.reward;
  return total / static_cast<double>(rows.size());
}

namespace {

std::map<int, std::vector<int>> load_group_tables(const std::string& path,
                                                  int num_labels) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("task table: cannot open " + path);
  }
  nlohmann::json doc;
  in >> doc;
  std::map<int, std::vector<int>> tables;
  for (const auto& task : doc.at("tasks")) {
    const int id = task.at("id").get<int>();
    const std::vector<int> arm0 =
        task.at("arm0_labels").get<std::vector<int>>();
    tables.emplace(id, group_task_table(arm0, num_labels));
  }
  return tables;
}

ChangeSchedule resolve_schedule(const ScheduleSpec& spec, long horizon,
                                const std::vector<int>& param_ids,
                                std::uint64_t env_seed) {
  if (!spec.file.empty()) return load_schedule(spec.file);
  Rng rng = derive_stream(env_seed, 11);
  return make_schedule(schedule_pattern_from_string(spec.pattern), horizon,
                       param_ids, rng, spec.min_segment);
}

}  // namespace

PreparedEnvironment prepare_environment(const EnvironmentSpec& spec,
                                        long horizon) {
  PreparedEnvironment prepared;
  if (spec.type == "synthetic") {
    ChangeSchedule schedule = [&] {
      if (!spec.schedule.file.empty()) return load_schedule(spec.schedule.file);
      // Pattern-generated synthetic schedule: unit-norm Gaussian parameters
      // drawn once from the environment seed.
      const int k = spec.schedule.num_params > 0 ? spec.schedule.num_params : 4;
      Rng rng = derive_stream(spec.env_seed, 12);
      std::map<int, Eigen::VectorXd> parameters;
      for (int id = 1; id <= k; ++id) {
        Eigen::VectorXd theta = standard_normal_vector(rng, spec.dimension);
        parameters.emplace(id, theta / theta.norm());
      }
      Rng layout_rng = derive_stream(spec.env_seed, 11);
      return make_schedule(schedule_pattern_from_string(spec.schedule.pattern),
                           horizon, parameters, layout_rng,
                           spec.schedule.min_segment);
    }();
    if (schedule.horizon() < horizon) {
      throw std::invalid_argument(
          "config: schedule horizon is shorter than the experiment horizon");
    }
    prepared.pattern = !spec.schedule.label.empty() ? spec.schedule.label
                       : !spec.schedule.pattern.empty()
                           ? spec.schedule.pattern
                           : "seasonal";
    prepared.action_dimension = spec.dimension;
    prepared.horizon = horizon;
    prepared.env.emplace<SyntheticLinearEnv>(std::move(schedule), spec.arms,
                                             spec.dimension,
                                             spec.noise_variance);
    return prepared;
  }

  // classification
  Dataset data;
  if (spec.dataset.kind == "idx") {
    const RawDataset raw = load_idx(spec.dataset.images, spec.dataset.labels);
    data.features = raw.images_as_double();
    data.labels = raw.labels;
  } else if (spec.dataset.kind == "feature-table") {
    data = load_feature_table(spec.dataset.path);
  } else if (spec.dataset.kind == "gaussian-clusters") {
    Rng rng = derive_stream(spec.env_seed, 13);
    data = gaussian_cluster_dataset(spec.dataset.classes,
                                    spec.dataset.dimension, spec.dataset.rows,
                                    spec.dataset.separation, rng,
                                    spec.dataset.subspace);
  } else {
    throw std::invalid_argument("config: unknown dataset kind");
  }

  // The run replays rows 1..horizon in order; fit PCA on exactly that
  // prefix so no unseen rows leak into the features.
  const long used_rows =
      std::min<long>(horizon, static_cast<long>(data.features.rows()));
  if (spec.pca.enabled) {
    const PcaTarget target =
        spec.pca.components > 0
            ? PcaTarget::component_count(spec.pca.components)
            : PcaTarget::variance_fraction(spec.pca.variance_fraction);
    const PcaModel model = pca_fit(data.features.topRows(used_rows), target);
    data.features = pca_transform(model, data.features);
  }
  if (spec.normalize_contexts) {
    for (Eigen::Index r = 0; r < data.features.rows(); ++r) {
      const double norm = data.features.row(r).norm();
      if (norm > 0.0) data.features.row(r) /= norm;
    }
  }

  int num_labels = 0;
  for (int label : data.labels) num_labels = std::max(num_labels, label + 1);

  std::map<int, std::vector<int>> tables;
  int num_arms = 0;
  TaskMode mode;
  if (spec.task == "two-arm-digits") {
    mode = TaskMode::TwoArm;
    num_arms = 2;
    tables.emplace(1, digit_task_table(DigitTask::Parity));
    tables.emplace(2, digit_task_table(DigitTask::DivisibleByThree));
    tables.emplace(3, digit_task_table(DigitTask::Primality));
  } else if (spec.task == "two-arm-groups") {
    mode = TaskMode::TwoArm;
    num_arms = 2;
    if (spec.task_table_file.empty()) {
      throw std::invalid_argument(
          "config: two-arm-groups requires task_table_file");
    }
    tables = load_group_tables(spec.task_table_file, num_labels);
  } else if (spec.task == "arm-shift") {
    mode = TaskMode::ArmShift;
    num_arms = num_labels;
    if (!spec.permutations.empty()) {
      int id = 1;
      for (const auto& perm : spec.permutations) {
        tables.emplace(id++, shift_task_table(perm));
      }
    } else {
      const int k = spec.schedule.num_params > 0 ? spec.schedule.num_params : 4;
      Rng rng = derive_stream(spec.env_seed, 14);
      for (int id = 1; id <= k; ++id) {
        tables.emplace(id, random_permutation(num_labels, rng));
      }
    }
  } else {
    throw std::invalid_argument("config: unknown task '" + spec.task + "'");
  }

  std::vector<int> param_ids;
  for (const auto& [id, table] : tables) param_ids.push_back(id);
  ChangeSchedule schedule =
      resolve_schedule(spec.schedule, horizon, param_ids, spec.env_seed);
  if (schedule.horizon() < horizon) {
    throw std::invalid_argument(
        "config: schedule horizon is shorter than the experiment horizon");
  }

  prepared.pattern = !spec.schedule.label.empty() ? spec.schedule.label
                     : !spec.schedule.pattern.empty() ? spec.schedule.pattern
                                                      : "custom";
  prepared.horizon = horizon;
  ClassificationEnv env(std::move(data.features), std::move(data.labels),
                        std::move(schedule), mode, std::move(tables),
                        num_arms);
  prepared.action_dimension = env.action_dimension();
  prepared.env.emplace<ClassificationEnv>(std::move(env));
  return prepared;
}

namespace {

struct Agent {
  std::optional<BanditPolicy> policy;
  std::optional<BanditPool> pool;
};

Agent make_agent(const PolicySpec& spec, int dimension) {
  Agent agent;
  if (spec.algorithm == "random") {
    agent.policy = BanditPolicy::uniform_random(dimension, 1);
  } else if (spec.algorithm == "lints") {
    agent.policy =
        BanditPolicy::lin_ts(dimension, spec.lambda, spec.noise_variance, 1);
  } else if (spec.algorithm == "sw-lints") {
    agent.policy = BanditPolicy::sw_lin_ts(dimension, spec.lambda,
                                           spec.noise_variance, spec.window, 1);
  } else if (spec.algorithm == "d-lints") {
    agent.policy = BanditPolicy::d_lin_ts(dimension, spec.lambda,
                                          spec.noise_variance, spec.discount, 1);
  } else if (spec.algorithm == "all-season-sw" ||
             spec.algorithm == "all-season-disc") {
    PoolConfig config;
    config.dimension = dimension;
    config.lambda = spec.lambda;
    config.noise_variance = spec.noise_variance;
    config.n_max = spec.n_max;
    config.shadow_kind = spec.algorithm == "all-season-sw"
                             ? ShadowKind::SlidingWindow
                             : ShadowKind::Discounted;
    config.window = spec.window;
    config.discount = spec.discount;
    config.prune_metric = spec.prune_metric;
    config.prune_victim = spec.prune_victim;
    config.shadow_enabled = spec.shadow_enabled;
    agent.pool.emplace(config);
  } else if (kReservedAlgorithms.count(spec.algorithm)) {
    throw std::invalid_argument(
        "algorithm '" + spec.algorithm +
        "' is a reserved extension slot with no built-in implementation");
  } else {
    throw std::invalid_argument("unknown algorithm '" + spec.algorithm + "'");
  }
  return agent;
}

}  // namespace

RewardLog run_experiment(const ExperimentConfig& config,
                         const PreparedEnvironment& prepared,
                         std::uint64_t seed) {
  validate(config);
  RngStreams rngs = RngStreams::from_seed(seed);
  Agent agent = make_agent(config.policy, prepared.action_dimension);

  RewardLog log;
  log.seed = seed;
  log.algorithm = config.policy.algorithm;
  log.pattern = prepared.pattern;
  log.rows.reserve(static_cast<std::size_t>(config.horizon));

  const long T = config.horizon;
  const int batch_size = config.batch_size;
  long t = 0;
  long batch_index = 0;
  while (t < T) {
    ++batch_index;
    const long steps = std::min<long>(batch_size, T - t);
    std::vector<ActionSet> action_sets;
    action_sets.reserve(static_cast<std::size_t>(steps));
    for (long i = 1; i <= steps; ++i) {
      if (const auto* env = std::get_if<SyntheticLinearEnv>(&prepared.env)) {
        action_sets.push_back(env->action_set(t + i, rngs.action_gen));
      } else {
        action_sets.push_back(
            std::get<ClassificationEnv>(prepared.env).action_set(t + i));
      }
    }

    const auto reward_of = [&](long step, std::size_t arm,
                               const ActionSet& actions) {
      if (const auto* env = std::get_if<SyntheticLinearEnv>(&prepared.env)) {
        return env->reward(step, actions.actions[arm], rngs.env_noise);
      }
      return std::get<ClassificationEnv>(prepared.env).reward(step, arm);
    };

    double batch_total = 0.0;
    if (agent.pool) {
      const std::vector<StepOutcome> outcomes =
          agent.pool->run_batch(action_sets, reward_of, rngs);
      for (const StepOutcome& o : outcomes) {
        log.rows.push_back(
            {batch_index, o.t, o.arm, o.reward, o.bandit_id, o.pool_size});
        batch_total += o.reward;
      }
    } else {
      std::vector<Observation> batch;
      batch.reserve(static_cast<std::size_t>(steps));
      for (long i = 0; i < steps; ++i) {
        const long step = t + i + 1;
        const std::size_t arm = agent.policy->play(
            action_sets[static_cast<std::size_t>(i)], rngs.policy,
            rngs.tie_break);
        const double reward =
            reward_of(step, arm, action_sets[static_cast<std::size_t>(i)]);
        batch.push_back(
            {action_sets[static_cast<std::size_t>(i)].actions[arm], reward});
        log.rows.push_back({batch_index, step, arm, reward,
                            agent.policy->id(), 1});
        batch_total += reward;
      }
      agent.policy->update(batch);
    }
    log.batch_average.push_back(batch_total / static_cast<double>(steps));
    t += steps;
  }
  return log;
}

RewardLog run_experiment(const ExperimentConfig& config, std::uint64_t seed) {
  const PreparedEnvironment prepared =
      prepare_environment(config.environment, config.horizon);
  return run_experiment(config, prepared, seed);
}

void write_log_csv(const RewardLog& log, std::ostream& out) {
  out << "seed,batch,t,algorithm,arm,reward,bandit_id,pool_size\n";
  char buf[40];
  for (const RewardLog::Row& row : log.rows) {
    std::snprintf(buf, sizeof(buf), "%.17g", row.reward);
    out << log.seed << ',' << row.batch << ',' << row.t << ','
        << log.algorithm << ',' << row.arm << ',' << buf << ','
        << row.bandit_id << ',' << row.pool_size << '\n';
  }
}

std::string log_filename(const RewardLog& log) {
  return sanitize(log.algorithm) + "__" + sanitize(log.pattern) + "__seed" +
         std::to_string(log.seed) + ".csv";
}

}  // namespace allseason
