#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vasekit/dataset.hpp"
#include "vasekit/similarity.hpp"

namespace vasekit {

struct SimilarityMatrix {
    std::vector<std::string> row_ids;  // generated items
    std::vector<std::string> col_ids;  // reference items
    std::vector<std::vector<double>> values;

    std::size_t rows() const { return values.size(); }
    std::size_t cols() const { return values.empty() ? 0 : values.front().size(); }
    bool square() const { return rows() == cols(); }
};

// Fraction of rows whose true reference (same index) ranks inside the top-k
// column similarities. Ties rank the lower column index first; k > n is
// treated as k = n. Throws NonSquareMatrix.
double recall_at_k(const SimilarityMatrix& matrix, std::size_t k);

// Token-level ROUGE-L F1: precision = LCS/|candidate|, recall = LCS/|reference|,
// 0 when either side is empty or the LCS is empty.
double rouge_l(std::string_view candidate, std::string_view reference);

struct Prediction {
    std::string vase_id;
    std::string caption;
    std::map<QuestionType, std::string> answers;
};

struct EvalReport {
    std::map<std::size_t, double> recall_at;
    double lexical_similarity = 0.0;
    std::map<QuestionType, double> per_dimension_accuracy;
    std::size_t n_items = 0;
    // Populated only from externally supplied score files, never computed here.
    std::optional<double> fid;
    std::optional<double> clip_score;
};

// Self-retrieval caption matrix: rows are generated captions, columns the
// reference captions of the same items, in prediction order.
SimilarityMatrix caption_similarity_matrix(std::span<const Prediction> predictions,
                                           const DatasetManifest& manifest,
                                           const SimilarityProvider& provider);

// R@{1,5,10} over the caption matrix, mean ROUGE-L of generated vs reference
// captions, and per-question-type accuracy of normalized exact answer
// matches. Throws EmptyRun / UnknownVaseId.
EvalReport evaluate_run(std::span<const Prediction> predictions, const DatasetManifest& manifest,
                        const SimilarityProvider& provider);

}  // namespace vasekit
