#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vasekit/dataset.hpp"
#include "vasekit/dimensions.hpp"
#include "vasekit/errors.hpp"
#include "vasekit/filter.hpp"
#include "vasekit/metrics.hpp"
#include "vasekit/reward.hpp"
#include "vasekit/similarity.hpp"
#include "vasekit/text.hpp"
#include "vasekit/version.hpp"

namespace py = pybind11;

namespace {

std::map<std::string, std::string> slots_to_dict(const vasekit::DimensionSlots& slots) {
    std::map<std::string, std::string> out;
    for (vasekit::Dimension dim : vasekit::kAllDimensions) {
        if (slots.has(dim)) out[std::string(vasekit::to_string(dim))] = *slots.get(dim);
    }
    return out;
}

vasekit::DimensionSlots slots_from_dict(const std::map<std::string, std::string>& dict) {
    vasekit::DimensionSlots slots;
    for (const auto& [name, content] : dict) {
        const auto dim = vasekit::dimension_from_string(name);
        if (!dim) throw vasekit::InvalidConfig("unknown dimension '" + name + "'");
        slots.set(*dim, content);
    }
    return slots;
}

vasekit::SimilarityMatrix matrix_from_rows(const std::vector<std::vector<double>>& rows) {
    vasekit::SimilarityMatrix matrix;
    matrix.values = rows;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        matrix.row_ids.push_back(std::to_string(i));
        matrix.col_ids.push_back(std::to_string(i));
    }
    return matrix;
}

py::dict reward_result_to_dict(const vasekit::RewardResult& result) {
    py::dict sims;
    py::dict rewards;
    for (vasekit::Dimension dim : vasekit::kAllDimensions) {
        const auto i = static_cast<std::size_t>(dim);
        const std::string name(vasekit::to_string(dim));
        sims[name.c_str()] = result.sims[i];
        rewards[name.c_str()] = result.rewards[i];
    }
    py::dict penalty;
    penalty["length"] = result.penalty.length;
    penalty["repetition"] = result.penalty.repetition;
    penalty["irrelevant"] = result.penalty.irrelevant;
    penalty["total"] = result.penalty.total;
    py::dict out;
    out["sims"] = sims;
    out["rewards"] = rewards;
    out["penalty"] = penalty;
    out["bonus"] = result.bonus;
    out["r_raw"] = result.raw;
    out["r"] = result.value;
    return out;
}

}  // namespace

PYBIND11_MODULE(_vasekit, m) {
    m.doc() = "Caption reward engine, rollout advantages, filtering replay and eval metrics";
    m.attr("__version__") = std::string(vasekit::kVersion);

    py::register_exception<vasekit::Error>(m, "VasekitError");

    // text
    m.def("normalize_text", [](const std::string& s) { return vasekit::normalize_text(s); });
    m.def("tokenize", [](const std::string& s) { return vasekit::tokenize(s); });

    // similarity
    m.def(
        "embed_hashed_bow",
        [](const std::string& text, std::size_t dimension) {
            return vasekit::embed_hashed_bow(text, dimension).values;
        },
        py::arg("text"), py::arg("dimension") = vasekit::kDefaultEmbeddingDimension);
    m.def(
        "cosine",
        [](const std::vector<double>& u, const std::vector<double>& v) {
            return vasekit::cosine({u, "py"}, {v, "py"});
        },
        py::arg("u"), py::arg("v"));
    m.def(
        "sequence_match_ratio",
        [](const std::string& a, const std::string& b) { return vasekit::sequence_match_ratio(a, b); },
        py::arg("a"), py::arg("b"));

    // dimensions
    py::class_<vasekit::Lexicon>(m, "Lexicon")
        .def_static("defaults", [] { return vasekit::Lexicon::defaults(); })
        .def_static("load", &vasekit::Lexicon::load, py::arg("path"))
        .def_property_readonly("version", &vasekit::Lexicon::version);
    m.def(
        "extract_slots",
        [](const std::string& text, const std::optional<vasekit::Lexicon>& lexicon) {
            return slots_to_dict(vasekit::extract_slots(text, lexicon ? *lexicon : vasekit::Lexicon::defaults()));
        },
        py::arg("text"), py::arg("lexicon") = std::nullopt);

    // reward
    py::class_<vasekit::RewardWeights>(m, "RewardWeights")
        .def(py::init<>())
        .def_readwrite("fabric", &vasekit::RewardWeights::fabric)
        .def_readwrite("technique", &vasekit::RewardWeights::technique)
        .def_readwrite("shape", &vasekit::RewardWeights::shape)
        .def_readwrite("dating", &vasekit::RewardWeights::dating)
        .def_readwrite("decoration", &vasekit::RewardWeights::decoration)
        .def_readwrite("attribution", &vasekit::RewardWeights::attribution)
        .def("sum", &vasekit::RewardWeights::sum);
    py::class_<vasekit::RewardConfig>(m, "RewardConfig")
        .def(py::init<>())
        .def_readwrite("weights", &vasekit::RewardConfig::weights)
        .def_readwrite("tau", &vasekit::RewardConfig::tau)
        .def_readwrite("alpha_length", &vasekit::RewardConfig::alpha_length)
        .def_readwrite("alpha_repetition", &vasekit::RewardConfig::alpha_repetition)
        .def_readwrite("alpha_irrelevant", &vasekit::RewardConfig::alpha_irrelevant)
        .def_readwrite("beta", &vasekit::RewardConfig::beta)
        .def_readwrite("length_min", &vasekit::RewardConfig::length_min)
        .def_readwrite("length_max", &vasekit::RewardConfig::length_max)
        .def_readwrite("tau_irrelevant", &vasekit::RewardConfig::tau_irrelevant)
        .def("validate", &vasekit::RewardConfig::validate);

    m.def("dimensional_reward", &vasekit::dimensional_reward, py::arg("sim"), py::arg("tau"));
    m.def(
        "compute_reward",
        [](const std::string& generated, const std::map<std::string, std::string>& target_slots,
           const std::string& target_caption, const vasekit::RewardConfig& cfg, std::size_t dimension) {
            const vasekit::HashedBowProvider provider(dimension);
            return reward_result_to_dict(vasekit::compute_reward(generated, slots_from_dict(target_slots),
                                                                 target_caption, cfg, provider));
        },
        py::arg("generated"), py::arg("target_slots"), py::arg("target_caption"),
        py::arg("config") = vasekit::RewardConfig{}, py::arg("dimension") = vasekit::kDefaultEmbeddingDimension);
    m.def(
        "compute_penalty",
        [](const std::string& caption, const std::map<std::string, std::string>& target_slots,
           const vasekit::RewardConfig& cfg, std::size_t dimension) {
            const vasekit::HashedBowProvider provider(dimension);
            const auto penalty = vasekit::compute_penalty(caption, slots_from_dict(target_slots), cfg, provider);
            py::dict out;
            out["length"] = penalty.length;
            out["repetition"] = penalty.repetition;
            out["irrelevant"] = penalty.irrelevant;
            out["total"] = penalty.total;
            return out;
        },
        py::arg("caption"), py::arg("target_slots"), py::arg("config") = vasekit::RewardConfig{},
        py::arg("dimension") = vasekit::kDefaultEmbeddingDimension);
    m.def(
        "group_advantages",
        [](const std::vector<double>& rewards, double epsilon) {
            const auto result = vasekit::group_advantages(rewards, epsilon);
            py::dict out;
            out["mean"] = result.mean;
            out["std"] = result.stddev;
            out["advantages"] = result.advantages;
            return out;
        },
        py::arg("rewards"), py::arg("epsilon") = 1e-8);

    // metrics
    m.def(
        "recall_at_k",
        [](const std::vector<std::vector<double>>& matrix, std::size_t k) {
            return vasekit::recall_at_k(matrix_from_rows(matrix), k);
        },
        py::arg("matrix"), py::arg("k"));
    m.def(
        "rouge_l",
        [](const std::string& candidate, const std::string& reference) {
            return vasekit::rouge_l(candidate, reference);
        },
        py::arg("candidate"), py::arg("reference"));
    m.def(
        "evaluate_run",
        [](const std::vector<py::dict>& predictions, const vasekit::DatasetManifest& manifest,
           std::size_t dimension) {
            std::vector<vasekit::Prediction> converted;
            converted.reserve(predictions.size());
            for (const auto& entry : predictions) {
                vasekit::Prediction pred;
                pred.vase_id = entry["vase_id"].cast<std::string>();
                pred.caption = entry["caption"].cast<std::string>();
                if (entry.contains("answers")) {
                    for (const auto& [key, value] : entry["answers"].cast<py::dict>()) {
                        const auto type = vasekit::question_type_from_string(key.cast<std::string>());
                        if (!type) {
                            throw vasekit::InvalidConfig("unknown question type '" +
                                                         key.cast<std::string>() + "'");
                        }
                        pred.answers[*type] = value.cast<std::string>();
                    }
                }
                converted.push_back(std::move(pred));
            }
            const vasekit::HashedBowProvider provider(dimension);
            const vasekit::EvalReport report = vasekit::evaluate_run(converted, manifest, provider);
            py::dict out;
            py::dict recall;
            for (const auto& [k, value] : report.recall_at) recall[py::int_(k)] = value;
            out["recall_at"] = recall;
            out["lexical_similarity"] = report.lexical_similarity;
            py::dict accuracy;
            for (const auto& [type, value] : report.per_dimension_accuracy) {
                accuracy[std::string(to_string(type)).c_str()] = value;
            }
            out["per_dimension_accuracy"] = accuracy;
            out["n_items"] = report.n_items;
            return out;
        },
        py::arg("predictions"), py::arg("manifest"),
        py::arg("dimension") = vasekit::kDefaultEmbeddingDimension);

    // filter
    py::class_<vasekit::ScoreRecord>(m, "ScoreRecord")
        .def(py::init([](std::string image_id, std::string vase_id, double quality_prob, double sim_complete,
                         double sim_fragment, double sim_descriptive) {
                 return vasekit::ScoreRecord{std::move(image_id), std::move(vase_id), quality_prob,
                                             sim_complete,       sim_fragment,       sim_descriptive};
             }),
             py::arg("image_id"), py::arg("vase_id"), py::arg("quality_prob") = 0.0,
             py::arg("sim_complete") = 0.0, py::arg("sim_fragment") = 0.0, py::arg("sim_descriptive") = 0.0)
        .def_readwrite("image_id", &vasekit::ScoreRecord::image_id)
        .def_readwrite("vase_id", &vasekit::ScoreRecord::vase_id)
        .def_readwrite("quality_prob", &vasekit::ScoreRecord::quality_prob)
        .def_readwrite("sim_complete", &vasekit::ScoreRecord::sim_complete)
        .def_readwrite("sim_fragment", &vasekit::ScoreRecord::sim_fragment)
        .def_readwrite("sim_descriptive", &vasekit::ScoreRecord::sim_descriptive);

    auto partition_to_tuple = [](const vasekit::FilterPartition& partition) {
        return py::make_tuple(partition.kept, partition.rejected);
    };
    m.def(
        "quality_gate",
        [partition_to_tuple](const std::vector<vasekit::ScoreRecord>& records, double threshold) {
            return partition_to_tuple(vasekit::quality_gate(records, threshold));
        },
        py::arg("records"), py::arg("threshold") = vasekit::kDefaultQualityThreshold);
    m.def(
        "fragment_filter",
        [partition_to_tuple](const std::vector<vasekit::ScoreRecord>& records, double margin) {
            return partition_to_tuple(vasekit::fragment_filter(records, margin));
        },
        py::arg("records"), py::arg("margin") = vasekit::kDefaultFragmentMargin);
    m.def(
        "select_best_view",
        [](const std::vector<vasekit::ScoreRecord>& group) { return vasekit::select_best_view(group); },
        py::arg("group"));
    m.def(
        "view_selection",
        [partition_to_tuple](const std::vector<vasekit::ScoreRecord>& records) {
            return partition_to_tuple(vasekit::view_selection(records));
        },
        py::arg("records"));

    // dataset
    py::class_<vasekit::DatasetManifest>(m, "DatasetManifest")
        .def_property_readonly("n_entries",
                               [](const vasekit::DatasetManifest& manifest) { return manifest.entries.size(); })
        .def_property_readonly("total_qa_pairs", &vasekit::DatasetManifest::total_qa_pairs)
        .def_property_readonly("avg_qa_per_entry", &vasekit::DatasetManifest::avg_qa_per_entry)
        .def("qa_type_counts", [](const vasekit::DatasetManifest& manifest) {
            std::map<std::string, std::size_t> out;
            for (const auto& [type, count] : manifest.qa_type_counts()) {
                out[std::string(to_string(type))] = count;
            }
            return out;
        });
    m.def("load_manifest", &vasekit::load_manifest, py::arg("path"));
    m.def(
        "split_dataset",
        [](const vasekit::DatasetManifest& manifest, double train, double val, double test,
           std::uint64_t seed) {
            const auto result = vasekit::split_dataset(manifest, {train, val, test}, seed);
            std::map<std::string, std::string> assignment;
            for (const auto& [vase_id, split] : result.assignment) {
                assignment[vase_id] = std::string(to_string(split));
            }
            return assignment;
        },
        py::arg("manifest"), py::arg("train") = 0.70, py::arg("val") = 0.15, py::arg("test") = 0.15,
        py::arg("seed") = 42);
    m.def(
        "validate_manifest",
        [](const vasekit::DatasetManifest& manifest) {
            std::vector<std::map<std::string, std::string>> findings;
            for (const auto& finding : vasekit::validate_manifest(manifest).findings) {
                findings.push_back({{"kind", std::string(to_string(finding.kind))},
                                    {"vase_id", finding.vase_id},
                                    {"detail", finding.detail}});
            }
            return findings;
        },
        py::arg("manifest"));
}
