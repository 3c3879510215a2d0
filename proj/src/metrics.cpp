#include "vasekit/metrics.hpp"

#include <algorithm>
#include <unordered_map>

#include "vasekit/errors.hpp"
#include "vasekit/text.hpp"

namespace vasekit {

double recall_at_k(const SimilarityMatrix& matrix, std::size_t k) {
    if (!matrix.square()) {
        throw NonSquareMatrix("retrieval expects a square matrix, got " + std::to_string(matrix.rows()) + "x" +
                              std::to_string(matrix.cols()));
    }
    if (k == 0) throw InvalidConfig("k must be positive");
    const std::size_t n = matrix.rows();
    if (n == 0) throw InvalidConfig("retrieval needs at least one row");
    const std::size_t k_eff = std::min(k, n);

    std::size_t hits = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = matrix.values[i];
        const double truth = row[i];
        // Rank of the true reference: columns scoring strictly higher, plus
        // equal-scoring columns at a lower index.
        std::size_t rank = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (row[j] > truth || (row[j] == truth && j < i)) ++rank;
        }
        if (rank < k_eff) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(n);
}

double rouge_l(std::string_view candidate, std::string_view reference) {
    const std::vector<std::string> cand = tokenize(candidate);
    const std::vector<std::string> ref = tokenize(reference);
    if (cand.empty() || ref.empty()) return 0.0;

    // Two-row LCS table.
    std::vector<std::size_t> prev(ref.size() + 1, 0);
    std::vector<std::size_t> curr(ref.size() + 1, 0);
    for (std::size_t i = 1; i <= cand.size(); ++i) {
        for (std::size_t j = 1; j <= ref.size(); ++j) {
            if (cand[i - 1] == ref[j - 1]) {
                curr[j] = prev[j - 1] + 1;
            } else {
                curr[j] = std::max(prev[j], curr[j - 1]);
            }
        }
        std::swap(prev, curr);
    }
    const std::size_t lcs = prev[ref.size()];
    if (lcs == 0) return 0.0;

    const double precision = static_cast<double>(lcs) / static_cast<double>(cand.size());
    const double recall = static_cast<double>(lcs) / static_cast<double>(ref.size());
    return 2.0 * precision * recall / (precision + recall);
}

SimilarityMatrix caption_similarity_matrix(std::span<const Prediction> predictions,
                                           const DatasetManifest& manifest,
                                           const SimilarityProvider& provider) {
    std::vector<std::string> generated;
    std::vector<std::string> references;
    SimilarityMatrix matrix;
    for (const auto& pred : predictions) {
        const VaseEntry* entry = manifest.find(pred.vase_id);
        if (!entry) throw UnknownVaseId("prediction references unknown vase_id '" + pred.vase_id + "'");
        generated.push_back(pred.caption);
        references.push_back(entry->caption);
        matrix.row_ids.push_back(pred.vase_id);
        matrix.col_ids.push_back(pred.vase_id);
    }

    const std::vector<EmbeddingVector> gen_vecs = provider.embed_batch(generated);
    const std::vector<EmbeddingVector> ref_vecs = provider.embed_batch(references);

    matrix.values.resize(predictions.size());
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        matrix.values[i].resize(predictions.size());
        for (std::size_t j = 0; j < predictions.size(); ++j) {
            matrix.values[i][j] = cosine(gen_vecs[i], ref_vecs[j]);
        }
    }
    return matrix;
}

EvalReport evaluate_run(std::span<const Prediction> predictions, const DatasetManifest& manifest,
                        const SimilarityProvider& provider) {
    if (predictions.empty()) throw EmptyRun("evaluation needs at least one prediction");

    std::unordered_map<std::string_view, const VaseEntry*> index;
    index.reserve(manifest.entries.size());
    for (const auto& entry : manifest.entries) index.emplace(entry.vase_id, &entry);

    for (const auto& pred : predictions) {
        if (!index.count(pred.vase_id)) {
            throw UnknownVaseId("prediction references unknown vase_id '" + pred.vase_id + "'");
        }
    }

    EvalReport report;
    report.n_items = predictions.size();

    const SimilarityMatrix matrix = caption_similarity_matrix(predictions, manifest, provider);
    for (std::size_t k : {std::size_t{1}, std::size_t{5}, std::size_t{10}}) {
        report.recall_at[k] = recall_at_k(matrix, k);
    }

    double rouge_sum = 0.0;
    std::map<QuestionType, std::size_t> correct;
    std::map<QuestionType, std::size_t> asked;
    for (const auto& pred : predictions) {
        const VaseEntry* entry = index.at(pred.vase_id);
        rouge_sum += rouge_l(pred.caption, entry->caption);
        for (const auto& qa : entry->qa_pairs) {
            ++asked[qa.question_type];
            const auto it = pred.answers.find(qa.question_type);
            if (it == pred.answers.end()) continue;
            if (normalize_text(it->second) == normalize_text(qa.answer) && !normalize_text(qa.answer).empty()) {
                ++correct[qa.question_type];
            }
        }
    }
    report.lexical_similarity = rouge_sum / static_cast<double>(predictions.size());
    for (const auto& [type, total] : asked) {
        report.per_dimension_accuracy[type] =
            static_cast<double>(correct[type]) / static_cast<double>(total);
    }
    return report;
}

}  // namespace vasekit
