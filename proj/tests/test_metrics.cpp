#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "vasekit/errors.hpp"
#include "vasekit/metrics.hpp"
#include "vasekit/similarity.hpp"
#include "vasekit/text.hpp"

using namespace vasekit;

namespace {

SimilarityMatrix square_matrix(std::vector<std::vector<double>> values) {
    SimilarityMatrix matrix;
    matrix.values = std::move(values);
    for (std::size_t i = 0; i < matrix.values.size(); ++i) {
        matrix.row_ids.push_back("row" + std::to_string(i));
        matrix.col_ids.push_back("col" + std::to_string(i));
    }
    return matrix;
}

}  // namespace

TEST_CASE("recall on an identity-dominant matrix is perfect") {
    const SimilarityMatrix matrix = square_matrix({{0.9, 0.1, 0.2}, {0.3, 0.8, 0.1}, {0.2, 0.1, 0.7}});
    CHECK(recall_at_k(matrix, 1) == 1.0);
    CHECK(recall_at_k(matrix, 2) == 1.0);
}

TEST_CASE("recall counts the rank of the true reference") {
    // Row 0's truth ranks second; rows 1 and 2 rank first.
    const SimilarityMatrix matrix = square_matrix({{0.5, 0.9, 0.1}, {0.2, 0.8, 0.1}, {0.1, 0.2, 0.9}});
    CHECK(recall_at_k(matrix, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(recall_at_k(matrix, 2) == 1.0);
}

TEST_CASE("k beyond the matrix size saturates at one") {
    const SimilarityMatrix matrix = square_matrix({{0.0, 1.0}, {1.0, 0.0}});
    CHECK(recall_at_k(matrix, 10) == 1.0);
}

TEST_CASE("ties rank the lower column index first") {
    const SimilarityMatrix matrix = square_matrix({{0.5, 0.5, 0.1}, {0.5, 0.5, 0.1}, {0.1, 0.1, 0.1}});
    // Row 0: truth at col 0 wins its tie. Row 1: col 0 ties and sits lower,
    // truth ranks 2nd. Row 2: both other columns tie at lower indices, 3rd.
    CHECK(recall_at_k(matrix, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(recall_at_k(matrix, 2) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(recall_at_k(matrix, 3) == 1.0);
}

TEST_CASE("recall rejects bad inputs") {
    SimilarityMatrix rect;
    rect.values = {{0.1, 0.2}};
    rect.row_ids = {"a"};
    rect.col_ids = {"x", "y"};
    CHECK_THROWS_AS(recall_at_k(rect, 1), NonSquareMatrix);
    CHECK_THROWS_AS(recall_at_k(square_matrix({{1.0}}), 0), InvalidConfig);
}

TEST_CASE("recall matches the brute-force oracle on random matrices") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int round = 0; round < 20; ++round) {
        std::vector<std::vector<double>> values(50, std::vector<double>(50));
        for (auto& row : values) {
            for (double& v : row) v = unit(rng);
        }
        const SimilarityMatrix matrix = square_matrix(values);
        double previous = 0.0;
        for (std::size_t k : {1, 5, 10}) {
            const double ours = recall_at_k(matrix, k);
            CHECK(ours == test::oracle_recall_at_k(values, k));
            CHECK(ours >= previous);  // R@1 <= R@5 <= R@10
            previous = ours;
        }
    }
}

TEST_CASE("rouge-l fixed points") {
    CHECK(rouge_l("attic kylix", "attic kylix") == 1.0);
    CHECK(rouge_l("alpha beta", "gamma delta") == 0.0);
    CHECK(rouge_l("", "anything") == 0.0);
    CHECK(rouge_l("anything", "") == 0.0);
    const double f1 = rouge_l("the black figure amphora", "black figure amphora");
    CHECK(std::abs(f1 - 6.0 / 7.0) < 1e-12);
}

TEST_CASE("rouge-l equals the DP oracle on random token pairs") {
    std::mt19937_64 rng(53);
    const std::vector<std::string> vocab = {"attic", "kylix", "red", "figure", "band", "lotus", "bc", "vase"};
    std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
    for (int round = 0; round < 100; ++round) {
        std::string a;
        std::string b;
        const std::size_t na = rng() % 30;
        const std::size_t nb = rng() % 30;
        for (std::size_t i = 0; i < na; ++i) a += vocab[pick(rng)] + " ";
        for (std::size_t i = 0; i < nb; ++i) b += vocab[pick(rng)] + " ";
        const double ours = rouge_l(a, b);
        CHECK(ours >= 0.0);
        CHECK(ours <= 1.0);
        CHECK(std::abs(ours - test::oracle_rouge_f1(tokenize(a), tokenize(b))) < 1e-12);
        if (!tokenize(a).empty()) CHECK(rouge_l(a, a) == 1.0);
    }
}

TEST_CASE("evaluating predictions identical to the references is perfect") {
    const DatasetManifest manifest = test::make_sample_manifest(8);
    std::vector<Prediction> predictions;
    for (const auto& entry : manifest.entries) {
        Prediction pred;
        pred.vase_id = entry.vase_id;
        pred.caption = entry.caption;
        for (const auto& qa : entry.qa_pairs) pred.answers[qa.question_type] = qa.answer;
        predictions.push_back(std::move(pred));
    }
    const HashedBowProvider provider(1024);
    const EvalReport report = evaluate_run(predictions, manifest, provider);
    CHECK(report.n_items == 8);
    CHECK(report.recall_at.at(1) == 1.0);
    CHECK(report.recall_at.at(5) == 1.0);
    CHECK(report.recall_at.at(10) == 1.0);
    CHECK(report.lexical_similarity == 1.0);
    for (const auto& [type, accuracy] : report.per_dimension_accuracy) {
        CHECK(accuracy == 1.0);
    }
    CHECK_FALSE(report.fid.has_value());
    CHECK_FALSE(report.clip_score.has_value());
}

TEST_CASE("all-empty answers score zero accuracy everywhere") {
    const DatasetManifest manifest = test::make_sample_manifest(5);
    std::vector<Prediction> predictions;
    for (const auto& entry : manifest.entries) {
        Prediction pred;
        pred.vase_id = entry.vase_id;
        pred.caption = entry.caption;
        for (const auto& qa : entry.qa_pairs) pred.answers[qa.question_type] = "";
        predictions.push_back(std::move(pred));
    }
    const HashedBowProvider provider(1024);
    const EvalReport report = evaluate_run(predictions, manifest, provider);
    for (const auto& [type, accuracy] : report.per_dimension_accuracy) {
        CHECK(accuracy == 0.0);
    }
}

TEST_CASE("prediction order does not change the report") {
    const DatasetManifest manifest = test::make_sample_manifest(6);
    std::vector<Prediction> predictions;
    for (const auto& entry : manifest.entries) {
        Prediction pred;
        pred.vase_id = entry.vase_id;
        pred.caption = "a " + entry.caption.substr(5);  // near-miss captions
        pred.answers[QuestionType::Shape] = entry.qa_pairs[2].answer;
        predictions.push_back(std::move(pred));
    }
    const HashedBowProvider provider(1024);
    const EvalReport base = evaluate_run(predictions, manifest, provider);

    std::mt19937_64 rng(59);
    std::shuffle(predictions.begin(), predictions.end(), rng);
    const EvalReport shuffled = evaluate_run(predictions, manifest, provider);
    CHECK(shuffled.recall_at == base.recall_at);
    CHECK(shuffled.lexical_similarity == doctest::Approx(base.lexical_similarity).epsilon(1e-12));
    CHECK(shuffled.per_dimension_accuracy == base.per_dimension_accuracy);
}

TEST_CASE("evaluation rejects unknown ids and empty runs") {
    const DatasetManifest manifest = test::make_sample_manifest(3);
    const HashedBowProvider provider(64);
    CHECK_THROWS_AS(evaluate_run(std::vector<Prediction>{}, manifest, provider), EmptyRun);
    std::vector<Prediction> predictions = {{"missing-id", "caption", {}}};
    CHECK_THROWS_AS(evaluate_run(predictions, manifest, provider), UnknownVaseId);
}
