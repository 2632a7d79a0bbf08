// textrank CLI: summarize single documents, evaluate candidate summaries
// with ROUGE, and benchmark every similarity variant over a corpus.

#include "textrank/corpus_bench.hpp"
#include "textrank/errors.hpp"
#include "textrank/graph_rank.hpp"
#include "textrank/io.hpp"
#include "textrank/rouge.hpp"
#include "textrank/summarizer.hpp"
#include "textrank/word_lists.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitDegenerate = 3;

struct SummarizeArgs {
    std::string file;
    std::string variant = "bm25";
    double ratio = 0.2;
    std::optional<std::size_t> words;
    double epsilon = 0.25;
    std::string idf = "corrected";
    double k1 = 1.2;
    double b = 0.75;
    double delta = 1.0;
    std::string output;
    bool lines = false;
    std::string stopwords_file;
    std::string abbreviations_file;
    std::string dump_graph;
};

struct EvalArgs {
    std::string candidate;
    std::vector<std::string> refs;
    bool no_stemming = false;
    std::string multi_ref = "average";
    bool json = false;
};

struct BenchArgs {
    std::string docs_dir;
    std::string refs_dir;
    std::vector<std::string> methods;
    std::string reference_method = "overlap";
    std::string format = "table";
    bool parallel = false;
    std::size_t bootstrap = 0;
    double ratio = 0.2;
    std::optional<std::size_t> words;
    double epsilon = 0.25;
    std::string idf = "corrected";
    double k1 = 1.2;
    double b = 0.75;
    double delta = 1.0;
    std::string stopwords_file;
    std::string abbreviations_file;
};

textrank::SimilarityConfig similarity_config(const std::string& variant, double k1, double b,
                                             double delta, double epsilon,
                                             const std::string& idf) {
    textrank::SimilarityConfig cfg;
    cfg.variant = textrank::variant_from_string(variant);
    cfg.k1 = k1;
    cfg.b = b;
    cfg.delta = delta;
    cfg.epsilon = epsilon;
    cfg.idf_mode = textrank::idf_mode_from_string(idf);
    return cfg;
}

textrank::PipelineConfig pipeline_config(const std::string& stopwords_file,
                                         const std::string& abbreviations_file) {
    textrank::PipelineConfig cfg;
    if (!stopwords_file.empty())
        cfg.stopwords = textrank::load_word_list(stopwords_file);
    if (!abbreviations_file.empty())
        cfg.abbreviations = textrank::load_word_list(abbreviations_file);
    return cfg;
}

textrank::SummaryConfig summary_config(double ratio, const std::optional<std::size_t>& words) {
    textrank::SummaryConfig cfg;
    if (words) {
        cfg.mode = textrank::SizingMode::word_budget;
        cfg.word_budget = *words;
    } else {
        cfg.mode = textrank::SizingMode::ratio;
        cfg.ratio = ratio;
    }
    return cfg;
}

int run_summarize(const SummarizeArgs& args) {
    const std::string text = textrank::read_text_file(args.file);
    const auto pipeline = pipeline_config(args.stopwords_file, args.abbreviations_file);
    const auto sim = similarity_config(args.variant, args.k1, args.b, args.delta,
                                       args.epsilon, args.idf);
    const auto sizing = summary_config(args.ratio, args.words);
    const textrank::RankConfig rank_cfg;

    textrank::RawDocument doc{args.file, text};
    const auto sentences = textrank::preprocess(doc, pipeline);
    const auto ranks = textrank::rank_sentences(sentences, sim, rank_cfg);
    if (!args.dump_graph.empty()) {
        std::vector<textrank::Sentence> graph_sentences;
        for (const auto& s : sentences)
            if (s.graph_eligible)
                graph_sentences.push_back(s);
        const auto stats = textrank::build_corpus_stats(graph_sentences);
        textrank::write_edge_list(textrank::build_graph(sentences, stats, sim),
                                  std::filesystem::path(args.dump_graph));
    }
    const auto summary = textrank::select_top(ranks, sentences, sizing);

    std::string out;
    if (args.lines) {
        for (const std::size_t idx : summary.selected) {
            out += sentences[idx].raw;
            out += '\n';
        }
    } else {
        out = summary.text + "\n";
    }
    if (args.output.empty())
        std::cout << out;
    else
        textrank::write_text_file(args.output, out);
    return kExitOk;
}

void print_metric(const char* name, const textrank::MetricTriple& t) {
    std::printf("%-10s  recall %.4f  precision %.4f  f1 %.4f\n", name, t.recall,
                t.precision, t.f1);
}

int run_eval(const EvalArgs& args) {
    textrank::EvalConfig cfg;
    cfg.stemming = !args.no_stemming;
    cfg.multi_ref_mode = args.multi_ref == "max" ? textrank::MultiRefMode::max
                                                 : textrank::MultiRefMode::average;

    const std::string candidate = textrank::read_text_file(args.candidate);
    std::vector<std::string> references;
    references.reserve(args.refs.size());
    for (const auto& path : args.refs)
        references.push_back(textrank::read_text_file(path));

    const auto score = textrank::score_summary(candidate, references, cfg);
    if (args.json) {
        nlohmann::json j;
        const auto triple = [](const textrank::MetricTriple& t) {
            return nlohmann::json{
                {"recall", t.recall}, {"precision", t.precision}, {"f1", t.f1}};
        };
        j["rouge1"] = triple(score.rouge1);
        j["rouge2"] = triple(score.rouge2);
        j["rouge_su4"] = triple(score.rouge_su4);
        j["metric_average"] = score.metric_average;
        std::cout << j.dump(2) << "\n";
    } else {
        print_metric("ROUGE-1", score.rouge1);
        print_metric("ROUGE-2", score.rouge2);
        print_metric("ROUGE-SU4", score.rouge_su4);
        std::printf("%-10s  %.4f (mean of the three recalls)\n", "average",
                    score.metric_average);
    }
    return kExitOk;
}

int run_bench(const BenchArgs& args) {
    textrank::CorpusLayout layout{args.docs_dir, args.refs_dir};
    const auto loaded = textrank::load_corpus(layout);
    for (const auto& orphan : loaded.orphan_refs)
        std::cerr << "warning: reference without document ignored: " << orphan << "\n";
    for (const auto& docid : loaded.skipped_missing_ref)
        std::cerr << "warning: document without references skipped: " << docid << "\n";
    if (loaded.documents.empty()) {
        std::cerr << "error: corpus has no usable documents\n";
        return kExitDegenerate;
    }

    textrank::BenchConfigs configs;
    configs.pipeline = pipeline_config(args.stopwords_file, args.abbreviations_file);
    configs.similarity = similarity_config("bm25", args.k1, args.b, args.delta,
                                           args.epsilon, args.idf);
    configs.summary = summary_config(args.ratio, args.words);
    configs.eval.bootstrap_samples = args.bootstrap;
    configs.reference_method = args.reference_method;
    configs.parallel = args.parallel;

    std::vector<std::string> methods =
        args.methods.empty() ? textrank::all_method_names() : args.methods;
    if (std::find(methods.begin(), methods.end(), args.reference_method) == methods.end())
        methods.push_back(args.reference_method);

    auto report = textrank::run_benchmark(loaded.documents, methods, configs);
    report.documents_skipped = loaded.skipped_missing_ref.size();
    std::cout << textrank::render_report(
        report, textrank::report_format_from_string(args.format));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"TextRank extractive summarizer with pluggable sentence similarity"};
    app.require_subcommand(1);

    SummarizeArgs sum_args;
    auto* sum = app.add_subcommand("summarize", "Summarize a plain-text document");
    sum->add_option("file", sum_args.file, "UTF-8 text file to summarize")->required();
    sum->add_option("--variant", sum_args.variant, "Similarity variant")
        ->check(CLI::IsMember({"overlap", "lcs", "cosine", "bm25", "bm25plus"}))
        ->capture_default_str();
    auto* ratio_opt = sum->add_option("--ratio", sum_args.ratio,
                                      "Summary size as a fraction of the sentence count")
                          ->check(CLI::Range(0.0, 1.0))
                          ->capture_default_str();
    sum->add_option("--words", sum_args.words, "Summary size as a word budget")
        ->excludes(ratio_opt);
    sum->add_option("--epsilon", sum_args.epsilon, "Corrected-IDF floor factor")
        ->capture_default_str();
    sum->add_option("--idf", sum_args.idf, "IDF mode")
        ->check(CLI::IsMember({"corrected", "naive", "zero"}))
        ->capture_default_str();
    sum->add_option("--k1", sum_args.k1, "BM25 k1")->capture_default_str();
    sum->add_option("--b", sum_args.b, "BM25 b")->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    sum->add_option("--delta", sum_args.delta, "BM25+ delta")->capture_default_str();
    sum->add_option("--output", sum_args.output, "Write the summary to this path");
    sum->add_flag("--lines", sum_args.lines, "One sentence per line");
    sum->add_option("--stopwords", sum_args.stopwords_file,
                    "Stopword list file (one word per line)");
    sum->add_option("--abbreviations", sum_args.abbreviations_file,
                    "Abbreviation list file for the sentence splitter");
    sum->add_option("--dump-graph", sum_args.dump_graph,
                    "Write the sentence graph as an i<TAB>j<TAB>weight edge list");

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Score a candidate summary with ROUGE");
    eval->add_option("--candidate", eval_args.candidate, "Candidate summary file")
        ->required();
    eval->add_option("--refs", eval_args.refs, "Reference summary files")
        ->required()
        ->expected(-1);
    eval->add_flag("--no-stemming", eval_args.no_stemming, "Disable Porter stemming");
    eval->add_option("--multi-ref", eval_args.multi_ref, "Multi-reference combination")
        ->check(CLI::IsMember({"average", "max"}))
        ->capture_default_str();
    eval->add_flag("--json", eval_args.json, "Emit scores as JSON");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Benchmark methods over a corpus");
    bench->add_option("--docs", bench_args.docs_dir, "Directory of <docid>.txt documents")
        ->required();
    bench->add_option("--refs", bench_args.refs_dir,
                      "Directory of <docid>.ref<k>.txt references")
        ->required();
    bench->add_option("--methods", bench_args.methods,
                      "Methods to run (default: lead and all five variants)")
        ->delimiter(',');
    bench->add_option("--reference-method", bench_args.reference_method,
                      "Method improvements are measured against")
        ->capture_default_str();
    bench->add_option("--format", bench_args.format, "Report format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    bench->add_flag("--parallel", bench_args.parallel,
                    "Evaluate documents on all cores (scores unchanged)");
    bench->add_option("--bootstrap", bench_args.bootstrap,
                      "Bootstrap samples for 95% confidence intervals");
    auto* bench_ratio = bench->add_option("--ratio", bench_args.ratio, "Compression ratio")
                            ->check(CLI::Range(0.0, 1.0))
                            ->capture_default_str();
    bench->add_option("--words", bench_args.words, "Word budget per summary")
        ->excludes(bench_ratio);
    bench->add_option("--epsilon", bench_args.epsilon, "Corrected-IDF floor factor")
        ->capture_default_str();
    bench->add_option("--idf", bench_args.idf, "IDF mode")
        ->check(CLI::IsMember({"corrected", "naive", "zero"}))
        ->capture_default_str();
    bench->add_option("--k1", bench_args.k1, "BM25 k1")->capture_default_str();
    bench->add_option("--b", bench_args.b, "BM25 b")->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    bench->add_option("--delta", bench_args.delta, "BM25+ delta")->capture_default_str();
    bench->add_option("--stopwords", bench_args.stopwords_file, "Stopword list file");
    bench->add_option("--abbreviations", bench_args.abbreviations_file,
                      "Abbreviation list file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sum->parsed())
            return run_summarize(sum_args);
        if (eval->parsed())
            return run_eval(eval_args);
        return run_bench(bench_args);
    } catch (const textrank::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const textrank::EmptyDocumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const textrank::StatsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const textrank::ScoreUndefinedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const textrank::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
