// vasekit - batch front end for caption rewards, rollout advantages,
// dataset filtering replay, deterministic splits and run evaluation.
//
// Exit codes: 0 success, 1 data errors (reported per record, processing
// continues), 2 usage or config errors.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vasekit/config.hpp"
#include "vasekit/dataset.hpp"
#include "vasekit/dimensions.hpp"
#include "vasekit/errors.hpp"
#include "vasekit/filter.hpp"
#include "vasekit/io.hpp"
#include "vasekit/metrics.hpp"
#include "vasekit/reward.hpp"
#include "vasekit/scorer_client.hpp"
#include "vasekit/similarity.hpp"
#include "vasekit/version.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsage = 2;

struct CommonFlags {
    std::string config_path;
    bool print_config = false;
    std::optional<std::string> provider;
    std::optional<std::size_t> dimension;
    std::optional<std::string> scorer_url;
    std::optional<std::string> lexicon_path;
    std::optional<double> tau;
    std::optional<double> beta;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "JSON config file; flags override its values");
    cmd->add_flag("--print-config", flags.print_config, "Print the fully resolved config and exit");
    cmd->add_option("--provider", flags.provider, "Similarity provider: hashed-bow or remote");
    cmd->add_option("--dimension", flags.dimension, "Embedding dimension for the built-in provider");
    cmd->add_option("--scorer-url", flags.scorer_url, "Base URL of the remote scorer");
    cmd->add_option("--lexicon", flags.lexicon_path, "Lexicon JSON overriding the built-in vocabulary");
    cmd->add_option("--tau", flags.tau, "Similarity threshold in [0, 1]");
    cmd->add_option("--beta", flags.beta, "Bonus scale");
}

vasekit::EngineConfig resolve_config(const CommonFlags& flags) {
    vasekit::EngineConfig cfg;
    if (!flags.config_path.empty()) {
        if (!fs::exists(flags.config_path)) {
            throw vasekit::UsageError("config file not found: " + flags.config_path);
        }
        cfg = vasekit::load_engine_config(flags.config_path, cfg);
    }
    if (const char* env_url = std::getenv("VASEKIT_SCORER_URL")) {
        if (*env_url) cfg.scorer.base_url = env_url;
    }
    if (flags.provider) cfg.provider = *flags.provider;
    if (flags.dimension) cfg.embedding_dimension = *flags.dimension;
    if (flags.scorer_url) cfg.scorer.base_url = *flags.scorer_url;
    if (flags.lexicon_path) cfg.lexicon_path = *flags.lexicon_path;
    if (flags.tau) cfg.reward.tau = *flags.tau;
    if (flags.beta) cfg.reward.beta = *flags.beta;
    try {
        cfg.validate();
    } catch (const vasekit::InvalidConfig& e) {
        throw vasekit::UsageError(e.what());
    }
    return cfg;
}

// --print-config short-circuits before inputs are touched.
bool maybe_print_config(const CommonFlags& flags, const vasekit::EngineConfig& cfg) {
    if (!flags.print_config) return false;
    std::cout << vasekit::engine_config_to_json_text(cfg) << "\n";
    return true;
}

std::unique_ptr<vasekit::SimilarityProvider> make_provider(const vasekit::EngineConfig& cfg) {
    if (cfg.provider == "remote") {
        auto client = std::make_shared<vasekit::ScorerClient>(cfg.scorer);
        return std::make_unique<vasekit::RemoteProvider>(std::move(client));
    }
    return std::make_unique<vasekit::HashedBowProvider>(cfg.embedding_dimension);
}

vasekit::Lexicon load_lexicon(const vasekit::EngineConfig& cfg) {
    if (cfg.lexicon_path.empty()) return vasekit::Lexicon::defaults();
    if (!fs::exists(cfg.lexicon_path)) {
        throw vasekit::UsageError("lexicon file not found: " + cfg.lexicon_path);
    }
    return vasekit::Lexicon::load(cfg.lexicon_path);
}

void require_input(const std::string& path, const std::string& flag) {
    if (path.empty()) throw vasekit::UsageError("missing required option " + flag);
    if (!fs::exists(path)) throw vasekit::UsageError("input file not found: " + path);
}

void require_distinct_output(const std::string& out, std::initializer_list<std::string> inputs) {
    if (out.empty()) throw vasekit::UsageError("missing required option --out");
    for (const auto& input : inputs) {
        if (!input.empty() && fs::weakly_canonical(out) == fs::weakly_canonical(input)) {
            throw vasekit::UsageError("output path must differ from input: " + out);
        }
    }
}

// ---------------------------------------------------------------------------
// reward

struct RewardArgs {
    CommonFlags common;
    std::string rollouts_path;
    std::string targets_path;
    std::string out_path;
    int jobs = 1;
};

int run_reward(const RewardArgs& args) {
    const vasekit::EngineConfig cfg = resolve_config(args.common);
    if (maybe_print_config(args.common, cfg)) return kExitOk;
    require_input(args.rollouts_path, "--rollouts");
    require_input(args.targets_path, "--targets");
    require_distinct_output(args.out_path, {args.rollouts_path, args.targets_path});
    if (args.jobs < 1) throw vasekit::UsageError("--jobs must be >= 1");

    const auto provider = make_provider(cfg);
    const vasekit::Lexicon lexicon = load_lexicon(cfg);
    const vasekit::DatasetManifest manifest = vasekit::load_manifest(args.targets_path);
    const std::vector<vasekit::RolloutRecord> rollouts = vasekit::load_rollouts(args.rollouts_path);

    std::unordered_map<std::string_view, const vasekit::VaseEntry*> index;
    for (const auto& entry : manifest.entries) index.emplace(entry.vase_id, &entry);

    std::vector<std::optional<std::string>> lines(rollouts.size());
    std::vector<std::string> errors(rollouts.size());

    auto score_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto& rollout = rollouts[i];
            try {
                const auto it = index.find(rollout.vase_id);
                if (it == index.end()) {
                    throw vasekit::UnknownVaseId("rollout references unknown vase_id '" + rollout.vase_id + "'");
                }
                const vasekit::DimensionSlots targets = vasekit::target_slots_from_qa(*it->second);
                const vasekit::RewardResult result = vasekit::compute_reward(
                    rollout.generated, targets, it->second->caption, cfg.reward, *provider, lexicon);
                lines[i] = vasekit::reward_line_json(rollout, result);
            } catch (const vasekit::Error& e) {
                errors[i] = e.what();
            }
        }
    };

    const auto jobs = std::min<std::size_t>(static_cast<std::size_t>(args.jobs), std::max<std::size_t>(rollouts.size(), 1));
    if (jobs <= 1) {
        score_range(0, rollouts.size());
    } else {
        // Contiguous index chunks; output order stays the input order.
        std::vector<std::thread> workers;
        const std::size_t chunk = (rollouts.size() + jobs - 1) / jobs;
        for (std::size_t w = 0; w < jobs; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(begin + chunk, rollouts.size());
            if (begin >= end) break;
            workers.emplace_back(score_range, begin, end);
        }
        for (auto& worker : workers) worker.join();
    }

    std::string out;
    std::size_t failed = 0;
    for (std::size_t i = 0; i < rollouts.size(); ++i) {
        if (lines[i]) {
            out += *lines[i];
            out += '\n';
        } else {
            ++failed;
            std::cerr << "record " << (i + 1) << ": " << errors[i] << "\n";
        }
    }
    vasekit::atomic_write_file(args.out_path, out);
    std::cerr << "scored " << (rollouts.size() - failed) << "/" << rollouts.size() << " rollouts -> "
              << args.out_path << "\n";
    return failed == 0 ? kExitOk : kExitDataError;
}

// ---------------------------------------------------------------------------
// advantage

struct AdvantageArgs {
    CommonFlags common;
    std::string rewards_path;
    std::string out_path;
    double epsilon = 1e-8;
};

int run_advantage(const AdvantageArgs& args) {
    const vasekit::EngineConfig cfg = resolve_config(args.common);
    if (maybe_print_config(args.common, cfg)) return kExitOk;
    require_input(args.rewards_path, "--rewards");
    require_distinct_output(args.out_path, {args.rewards_path});
    if (args.epsilon <= 0.0) throw vasekit::UsageError("--eps must be > 0");

    const std::vector<vasekit::RewardLine> lines = vasekit::load_reward_lines(args.rewards_path);

    std::map<std::string, std::vector<double>> groups;
    for (const auto& line : lines) groups[line.group_id].push_back(line.reward);

    std::map<std::string, vasekit::AdvantageResult> results;
    for (const auto& [group_id, rewards] : groups) {
        results.emplace(group_id, vasekit::group_advantages(rewards, args.epsilon));
    }

    std::map<std::string, std::size_t> cursor;
    std::string out;
    for (const auto& line : lines) {
        const vasekit::AdvantageResult& result = results.at(line.group_id);
        ordered_json obj = ordered_json::parse(line.raw_json);
        const std::size_t position = cursor[line.group_id]++;
        obj["advantage"] = result.advantages[position];
        obj["group_mean"] = result.mean;
        obj["group_std"] = result.stddev;
        out += obj.dump();
        out += '\n';
    }
    vasekit::atomic_write_file(args.out_path, out);
    std::cerr << "normalized " << lines.size() << " rewards across " << groups.size() << " groups -> "
              << args.out_path << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// evaluate

struct EvaluateArgs {
    CommonFlags common;
    std::string predictions_path;
    std::string manifest_path;
    std::string out_path;
    std::string external_scores_path;
};

int run_evaluate(const EvaluateArgs& args) {
    const vasekit::EngineConfig cfg = resolve_config(args.common);
    if (maybe_print_config(args.common, cfg)) return kExitOk;
    require_input(args.predictions_path, "--predictions");
    require_input(args.manifest_path, "--manifest");
    require_distinct_output(args.out_path, {args.predictions_path, args.manifest_path});

    const auto provider = make_provider(cfg);
    const vasekit::DatasetManifest manifest = vasekit::load_manifest(args.manifest_path);
    const std::vector<vasekit::Prediction> predictions = vasekit::load_predictions(args.predictions_path);

    vasekit::EvalReport report = vasekit::evaluate_run(predictions, manifest, *provider);

    // FID / CLIP-score style metrics come only from externally supplied files.
    if (!args.external_scores_path.empty()) {
        require_input(args.external_scores_path, "--external-scores");
        std::ifstream in(args.external_scores_path);
        nlohmann::json external = nlohmann::json::parse(in, nullptr, true);
        if (external.contains("fid") && !external["fid"].is_null()) report.fid = external["fid"].get<double>();
        if (external.contains("clip_score") && !external["clip_score"].is_null()) {
            report.clip_score = external["clip_score"].get<double>();
        }
    }

    vasekit::atomic_write_file(args.out_path,
                               vasekit::eval_report_json(report, vasekit::kVersion, vasekit::engine_config_hash(cfg)) +
                                   "\n");
    std::cerr << "evaluated " << report.n_items << " predictions -> " << args.out_path << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// filter

struct FilterArgs {
    CommonFlags common;
    std::string scores_path;
    std::string stages = "quality,fragment,view";
    std::string success_list_path;
    std::optional<double> quality_threshold;
    std::optional<double> fragment_margin;
    std::string out_path;
    std::string survivors_path;
};

int run_filter(const FilterArgs& args) {
    vasekit::EngineConfig cfg = resolve_config(args.common);
    if (args.quality_threshold) cfg.filter.quality_threshold = *args.quality_threshold;
    if (args.fragment_margin) cfg.filter.fragment_margin = *args.fragment_margin;
    if (cfg.filter.quality_threshold < 0.0 || cfg.filter.quality_threshold > 1.0) {
        throw vasekit::UsageError("--quality-threshold must be in [0, 1]");
    }
    if (maybe_print_config(args.common, cfg)) return kExitOk;
    require_input(args.scores_path, "--scores");

    std::vector<std::string> stage_names;
    std::stringstream ss(args.stages);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (!token.empty()) stage_names.push_back(token);
    }
    const std::vector<std::string> canonical = {"quality", "fragment", "view", "generation"};
    std::size_t canonical_pos = 0;
    for (const auto& name : stage_names) {
        const auto it = std::find(canonical.begin() + static_cast<std::ptrdiff_t>(canonical_pos),
                                  canonical.end(), name);
        if (it == canonical.end()) {
            throw vasekit::UsageError("unknown or out-of-order stage '" + name +
                                      "' (expected a subset of quality,fragment,view,generation in order)");
        }
        canonical_pos = static_cast<std::size_t>(it - canonical.begin()) + 1;
    }
    if (stage_names.empty()) throw vasekit::UsageError("--stages needs at least one stage");

    std::vector<vasekit::ScoreRecord> current = vasekit::load_score_records(args.scores_path);

    std::vector<vasekit::FilterStage> stages;
    for (const auto& name : stage_names) {
        vasekit::FilterStage stage;
        stage.input = current;
        if (name == "quality") {
            stage.name = "Quality Filtering";
            stage.kept = vasekit::quality_gate(current, cfg.filter.quality_threshold).kept;
        } else if (name == "fragment") {
            stage.name = "Fragment Filtering";
            stage.kept = vasekit::fragment_filter(current, cfg.filter.fragment_margin).kept;
            stage.score_defined = true;
        } else if (name == "view") {
            stage.name = "View Selection";
            stage.kept = vasekit::view_selection(current).kept;
            stage.score_defined = true;
        } else {
            require_input(args.success_list_path, "--success-list");
            const std::vector<std::string> ids = vasekit::load_id_list(args.success_list_path);
            stage.name = "3D Generation";
            stage.kept =
                vasekit::generation_gate(current, {ids.begin(), ids.end()}).kept;
        }
        current = stage.kept;
        stages.push_back(std::move(stage));
    }

    const vasekit::RetentionTable table = vasekit::pipeline_stats(stages);
    std::cout << vasekit::render_retention_table(table);

    if (!args.out_path.empty()) {
        require_distinct_output(args.out_path, {args.scores_path});
        vasekit::atomic_write_file(args.out_path, vasekit::retention_table_json(table) + "\n");
    }
    if (!args.survivors_path.empty()) {
        require_distinct_output(args.survivors_path, {args.scores_path});
        vasekit::save_score_records(current, args.survivors_path);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// split

struct SplitArgs {
    CommonFlags common;
    std::string manifest_path;
    std::string ratios;
    std::optional<std::uint64_t> seed;
    std::string out_path;
};

int run_split(const SplitArgs& args) {
    vasekit::EngineConfig cfg = resolve_config(args.common);
    if (!args.ratios.empty()) {
        std::stringstream ss(args.ratios);
        std::string token;
        std::vector<double> values;
        while (std::getline(ss, token, ',')) {
            try {
                values.push_back(std::stod(token));
            } catch (const std::exception&) {
                throw vasekit::UsageError("--ratios has a non-numeric value '" + token + "'");
            }
        }
        if (values.size() != 3) throw vasekit::UsageError("--ratios must be train,val,test");
        cfg.split.ratios = {values[0], values[1], values[2]};
    }
    if (args.seed) cfg.split.seed = *args.seed;
    if (maybe_print_config(args.common, cfg)) return kExitOk;
    require_input(args.manifest_path, "--manifest");
    require_distinct_output(args.out_path, {args.manifest_path});

    const vasekit::DatasetManifest manifest = vasekit::load_manifest(args.manifest_path);
    vasekit::SplitAssignment assignment;
    try {
        assignment = vasekit::split_dataset(manifest, cfg.split.ratios, cfg.split.seed);
    } catch (const vasekit::InvalidRatios& e) {
        throw vasekit::UsageError(e.what());
    }

    ordered_json map_obj;
    for (const auto& [vase_id, split] : assignment.assignment) {
        map_obj[vase_id] = std::string(to_string(split));
    }
    vasekit::atomic_write_file(args.out_path, map_obj.dump(2) + "\n");

    ordered_json summary;
    summary["train"] = assignment.count(vasekit::Split::Train);
    summary["val"] = assignment.count(vasekit::Split::Val);
    summary["test"] = assignment.count(vasekit::Split::Test);
    summary["seed"] = assignment.seed;
    fs::path sidecar = fs::path(args.out_path);
    sidecar.replace_extension(".summary.json");
    vasekit::atomic_write_file(sidecar, summary.dump(2) + "\n");

    std::cout << summary.dump() << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// validate

struct ValidateArgs {
    CommonFlags common;
    std::string manifest_path;
    std::string out_path;
};

int run_validate(const ValidateArgs& args) {
    const vasekit::EngineConfig cfg = resolve_config(args.common);
    if (maybe_print_config(args.common, cfg)) return kExitOk;
    require_input(args.manifest_path, "--manifest");

    const vasekit::DatasetManifest manifest = vasekit::load_manifest(args.manifest_path);
    const vasekit::ValidationReport report = vasekit::validate_manifest(manifest);

    std::cout << "entries: " << manifest.entries.size() << "\n";
    std::cout << "qa_pairs: " << manifest.total_qa_pairs() << "\n";
    for (const auto& [type, count] : manifest.qa_type_counts()) {
        std::cout << "  " << to_string(type) << ": " << count << "\n";
    }
    for (const auto& finding : report.findings) {
        std::cout << to_string(finding.kind) << " [" << finding.vase_id << "] " << finding.detail << "\n";
    }
    std::cout << (report.clean() ? "clean" : "problems: " + std::to_string(report.findings.size())) << "\n";

    if (!args.out_path.empty()) {
        require_distinct_output(args.out_path, {args.manifest_path});
        ordered_json obj;
        obj["entries"] = manifest.entries.size();
        obj["qa_pairs"] = manifest.total_qa_pairs();
        obj["findings"] = ordered_json::array();
        for (const auto& finding : report.findings) {
            obj["findings"].push_back({{"kind", std::string(to_string(finding.kind))},
                                       {"vase_id", finding.vase_id},
                                       {"detail", finding.detail}});
        }
        vasekit::atomic_write_file(args.out_path, obj.dump(2) + "\n");
    }
    return report.clean() ? kExitOk : kExitDataError;
}

// ---------------------------------------------------------------------------
// human-eval

struct HumanEvalArgs {
    CommonFlags common;
    std::string csv_path;
    std::string out_path;
};

int run_human_eval(const HumanEvalArgs& args) {
    const vasekit::EngineConfig cfg = resolve_config(args.common);
    if (maybe_print_config(args.common, cfg)) return kExitOk;
    require_input(args.csv_path, "--csv");

    std::ifstream in(args.csv_path);
    std::string line;
    if (!std::getline(in, line)) throw vasekit::SchemaError("human-eval CSV is empty");

    struct Row {
        std::string method;
        double mean;
    };
    std::vector<Row> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() < 2) throw vasekit::ParseError(line_no, "expected method plus at least one score");
        double sum = 0.0;
        for (std::size_t i = 1; i < cells.size(); ++i) {
            try {
                sum += std::stod(cells[i]);
            } catch (const std::exception&) {
                throw vasekit::ParseError(line_no, "non-numeric score '" + cells[i] + "'");
            }
        }
        rows.push_back({cells[0], sum / static_cast<double>(cells.size() - 1)});
    }
    if (rows.empty()) throw vasekit::SchemaError("human-eval CSV has no data rows");

    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return rows[a].mean > rows[b].mean; });

    std::vector<std::size_t> rank(rows.size());
    for (std::size_t position = 0; position < order.size(); ++position) rank[order[position]] = position + 1;

    ordered_json obj;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        char mean_text[32];
        std::snprintf(mean_text, sizeof(mean_text), "%.2f", rows[i].mean);
        std::printf("%-32s %8s %6zu\n", rows[i].method.c_str(), mean_text, rank[i]);
        obj[rows[i].method] = {{"mean", rows[i].mean}, {"rank", rank[i]}};
    }
    if (!args.out_path.empty()) {
        require_distinct_output(args.out_path, {args.csv_path});
        vasekit::atomic_write_file(args.out_path, obj.dump(2) + "\n");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verifiable caption rewards, rollout advantages, dataset filtering replay and run evaluation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(vasekit::kVersion));

    RewardArgs reward_args;
    auto* reward_cmd = app.add_subcommand("reward", "Score rollout captions against manifest targets");
    add_common_flags(reward_cmd, reward_args.common);
    reward_cmd->add_option("--rollouts", reward_args.rollouts_path, "Rollout JSONL input");
    reward_cmd->add_option("--targets", reward_args.targets_path, "Manifest JSONL with ground truth");
    reward_cmd->add_option("--out", reward_args.out_path, "Reward JSONL output");
    reward_cmd->add_option("--jobs", reward_args.jobs, "Concurrent scoring threads");

    AdvantageArgs advantage_args;
    auto* advantage_cmd = app.add_subcommand("advantage", "Group-normalize rewards into advantages");
    add_common_flags(advantage_cmd, advantage_args.common);
    advantage_cmd->add_option("--rewards", advantage_args.rewards_path, "Reward JSONL input");
    advantage_cmd->add_option("--out", advantage_args.out_path, "Advantage JSONL output");
    advantage_cmd->add_option("--eps", advantage_args.epsilon, "Normalization epsilon");

    EvaluateArgs evaluate_args;
    auto* evaluate_cmd = app.add_subcommand("evaluate", "Compute retrieval, lexical and QA-accuracy metrics");
    add_common_flags(evaluate_cmd, evaluate_args.common);
    evaluate_cmd->add_option("--predictions", evaluate_args.predictions_path, "Predictions JSONL input");
    evaluate_cmd->add_option("--manifest", evaluate_args.manifest_path, "Manifest JSONL with references");
    evaluate_cmd->add_option("--out", evaluate_args.out_path, "Report JSON output");
    evaluate_cmd->add_option("--external-scores", evaluate_args.external_scores_path,
                             "JSON with externally computed fid / clip_score");

    FilterArgs filter_args;
    auto* filter_cmd = app.add_subcommand("filter", "Replay filtering stages over a scores file");
    add_common_flags(filter_cmd, filter_args.common);
    filter_cmd->add_option("--scores", filter_args.scores_path, "Score records JSONL input");
    filter_cmd->add_option("--stages", filter_args.stages, "Comma list from quality,fragment,view,generation");
    filter_cmd->add_option("--success-list", filter_args.success_list_path,
                           "Image ids that survived 3D generation");
    filter_cmd->add_option("--quality-threshold", filter_args.quality_threshold, "Quality gate threshold");
    filter_cmd->add_option("--fragment-margin", filter_args.fragment_margin, "Fragment filter margin");
    filter_cmd->add_option("--out", filter_args.out_path, "Retention report JSON output");
    filter_cmd->add_option("--survivors-out", filter_args.survivors_path, "Surviving records JSONL output");

    SplitArgs split_args;
    auto* split_cmd = app.add_subcommand("split", "Deterministic train/val/test assignment");
    add_common_flags(split_cmd, split_args.common);
    split_cmd->add_option("--manifest", split_args.manifest_path, "Manifest JSONL input");
    split_cmd->add_option("--ratios", split_args.ratios, "train,val,test fractions summing to 1.0");
    split_cmd->add_option("--seed", split_args.seed, "Shuffle seed");
    split_cmd->add_option("--out", split_args.out_path, "Assignment JSON output");

    ValidateArgs validate_args;
    auto* validate_cmd = app.add_subcommand("validate", "Check a manifest and report findings");
    add_common_flags(validate_cmd, validate_args.common);
    validate_cmd->add_option("--manifest", validate_args.manifest_path, "Manifest JSONL input");
    validate_cmd->add_option("--out", validate_args.out_path, "Validation report JSON output");

    HumanEvalArgs human_args;
    auto* human_cmd = app.add_subcommand("human-eval", "Average an expert-score CSV and rank methods");
    add_common_flags(human_cmd, human_args.common);
    human_cmd->add_option("--csv", human_args.csv_path, "CSV with method,score... rows");
    human_cmd->add_option("--out", human_args.out_path, "Means and ranks JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (reward_cmd->parsed()) return run_reward(reward_args);
        if (advantage_cmd->parsed()) return run_advantage(advantage_args);
        if (evaluate_cmd->parsed()) return run_evaluate(evaluate_args);
        if (filter_cmd->parsed()) return run_filter(filter_args);
        if (split_cmd->parsed()) return run_split(split_args);
        if (validate_cmd->parsed()) return run_validate(validate_args);
        if (human_cmd->parsed()) return run_human_eval(human_args);
    } catch (const vasekit::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const vasekit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    }
    return kExitUsage;
}
