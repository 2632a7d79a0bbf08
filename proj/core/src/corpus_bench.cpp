#include "textrank/corpus_bench.hpp"

#include "textrank/errors.hpp"
#include "textrank/io.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <map>
#include <thread>

#include <json.hpp>

namespace textrank {
namespace {

namespace fs = std::filesystem;

// Splits "<docid>.ref<k>" (extension already removed); returns false when the
// name does not follow the reference convention.
bool parse_ref_stem(const std::string& stem, std::string& docid, unsigned long& k) {
    const auto pos = stem.rfind(".ref");
    if (pos == std::string::npos || pos == 0)
        return false;
    const std::string digits = stem.substr(pos + 4);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; }))
        return false;
    docid = stem.substr(0, pos);
    k = std::stoul(digits);
    return k >= 1;
}

std::vector<fs::path> sorted_regular_files(const fs::path& dir) {
    if (!fs::is_directory(dir))
        throw IoError("not a directory: " + dir.string());
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file())
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    return files;
}

struct PerDocOutcome {
    bool ok = false;
    RougeScore score;
};

Summary run_method_on_document(const std::string& method, const CorpusEntry& doc,
                               const BenchConfigs& configs) {
    if (method == "lead")
        return baseline_lead(doc.text, configs.pipeline, configs.summary);
    SimilarityConfig sim = configs.similarity;
    sim.variant = variant_from_string(method);
    return summarize(doc.text, configs.pipeline, sim, configs.rank, configs.summary);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

} // namespace

CorpusLoadResult load_corpus(const CorpusLayout& layout) {
    CorpusLoadResult result;

    std::map<std::string, fs::path> docs;
    for (const auto& path : sorted_regular_files(layout.docs_dir)) {
        if (path.extension() != ".txt")
            continue;
        const std::string stem = path.stem().string();
        if (stem.find(".ref") != std::string::npos)
            continue; // reference file living in the docs directory
        docs.emplace(stem, path);
    }

    std::map<std::string, std::map<unsigned long, fs::path>> refs;
    for (const auto& path : sorted_regular_files(layout.refs_dir)) {
        if (path.extension() != ".txt")
            continue;
        std::string docid;
        unsigned long k = 0;
        if (!parse_ref_stem(path.stem().string(), docid, k))
            continue;
        if (docs.find(docid) == docs.end()) {
            result.orphan_refs.push_back(path.filename().string());
            continue;
        }
        refs[docid].emplace(k, path);
    }

    for (const auto& [docid, doc_path] : docs) {
        const auto it = refs.find(docid);
        if (it == refs.end() || it->second.empty()) {
            result.skipped_missing_ref.push_back(docid);
            continue;
        }
        CorpusEntry entry;
        entry.id = docid;
        entry.text = read_text_file(doc_path);
        for (const auto& [k, ref_path] : it->second)
            entry.references.push_back(read_text_file(ref_path));
        result.documents.push_back(std::move(entry));
    }
    return result;
}

const std::vector<std::string>& all_method_names() {
    static const std::vector<std::string> names = {"lead",  "overlap", "lcs",
                                                   "cosine", "bm25",    "bm25plus"};
    return names;
}

double metric_average_of(double rouge1, double rouge2, double rouge_su4) {
    return (rouge1 + rouge2 + rouge_su4) / 3.0;
}

double improvement_pct(double avg, double ref_avg) {
    return 100.0 * (avg - ref_avg) / ref_avg;
}

BenchReport run_benchmark(const std::vector<CorpusEntry>& corpus,
                          const std::vector<std::string>& methods,
                          const BenchConfigs& configs) {
    if (corpus.empty())
        throw Error("benchmark needs at least one document");
    if (methods.empty())
        throw Error("benchmark needs at least one method");
    if (std::find(methods.begin(), methods.end(), configs.reference_method) == methods.end())
        throw Error("reference method '" + configs.reference_method +
                    "' is not among the benchmarked methods");

    BenchReport report;
    report.reference_method = configs.reference_method;
    report.documents_used = corpus.size();
    report.parallel = configs.parallel;

    for (const auto& method : methods) {
        std::vector<PerDocOutcome> outcomes(corpus.size());
        const auto evaluate_doc = [&](std::size_t i) {
            try {
                const Summary summary = run_method_on_document(method, corpus[i], configs);
                outcomes[i].score =
                    score_summary(summary.text, corpus[i].references, configs.eval);
                outcomes[i].ok = true;
            } catch (const Error&) {
                outcomes[i].ok = false;
            }
        };

        const auto t0 = std::chrono::steady_clock::now();
        if (configs.parallel && corpus.size() > 1) {
            std::atomic<std::size_t> next{0};
            const std::size_t n_workers =
                std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                                      corpus.size());
            std::vector<std::thread> workers;
            workers.reserve(n_workers);
            for (std::size_t w = 0; w < n_workers; ++w)
                workers.emplace_back([&] {
                    for (std::size_t i = next.fetch_add(1); i < corpus.size();
                         i = next.fetch_add(1))
                        evaluate_doc(i);
                });
            for (auto& worker : workers)
                worker.join();
        } else {
            for (std::size_t i = 0; i < corpus.size(); ++i)
                evaluate_doc(i);
        }
        const auto t1 = std::chrono::steady_clock::now();

        MethodResult mr;
        mr.name = method;
        mr.wall_clock_seconds = std::chrono::duration<double>(t1 - t0).count();

        // aggregate in docid order for deterministic sums
        std::vector<double> per_doc_avg;
        for (const auto& outcome : outcomes) {
            if (!outcome.ok) {
                ++mr.documents_failed;
                continue;
            }
            ++mr.documents_scored;
            mr.rouge1 += outcome.score.rouge1.recall;
            mr.rouge2 += outcome.score.rouge2.recall;
            mr.rouge_su4 += outcome.score.rouge_su4.recall;
            per_doc_avg.push_back(outcome.score.metric_average);
        }
        if (mr.documents_scored == 0)
            throw Error("method '" + method + "' failed on every document");
        const auto scored = static_cast<double>(mr.documents_scored);
        mr.rouge1 /= scored;
        mr.rouge2 /= scored;
        mr.rouge_su4 /= scored;
        mr.metric_average = metric_average_of(mr.rouge1, mr.rouge2, mr.rouge_su4);
        if (configs.eval.bootstrap_samples > 0)
            mr.ci95 = bootstrap_mean_ci(per_doc_avg, configs.eval.bootstrap_samples);
        report.methods.push_back(std::move(mr));
    }

    const auto ref = std::find_if(
        report.methods.begin(), report.methods.end(),
        [&](const MethodResult& m) { return m.name == configs.reference_method; });
    const double ref_avg = ref->metric_average;
    const double ref_wall = ref->wall_clock_seconds;
    for (auto& m : report.methods) {
        m.improvement_pct = improvement_pct(m.metric_average, ref_avg);
        if (!configs.parallel && ref_wall > 0.0)
            m.time_ratio = m.wall_clock_seconds / ref_wall;
    }

    std::stable_sort(report.methods.begin(), report.methods.end(),
                     [](const MethodResult& a, const MethodResult& b) {
                         return a.metric_average > b.metric_average;
                     });
    return report;
}

ReportFormat report_format_from_string(const std::string& name) {
    if (name == "table")
        return ReportFormat::table;
    if (name == "json")
        return ReportFormat::json;
    if (name == "csv")
        return ReportFormat::csv;
    throw Error("unknown report format: " + name);
}

namespace {

std::string render_table(const BenchReport& report) {
    const bool any_ci = std::any_of(report.methods.begin(), report.methods.end(),
                                    [](const MethodResult& m) { return m.ci95.has_value(); });
    std::string out;
    char line[256];
    std::snprintf(line, sizeof(line), "Reference method: %s   documents: %zu (skipped: %zu)%s\n",
                  report.reference_method.c_str(), report.documents_used,
                  report.documents_skipped, report.parallel ? "   [parallel timing]" : "");
    out += line;
    std::snprintf(line, sizeof(line), "%-10s %9s %9s %10s %9s %12s %9s %7s", "Method",
                  "ROUGE-1", "ROUGE-2", "ROUGE-SU4", "Avg", "Improvement", "Time(s)",
                  "Ratio");
    out += line;
    if (any_ci)
        out += "  CI95(avg)";
    out += '\n';
    for (const auto& m : report.methods) {
        std::snprintf(line, sizeof(line), "%-10s %9.4f %9.4f %10.4f %9.4f %11.2f%% %9.3f",
                      m.name.c_str(), m.rouge1, m.rouge2, m.rouge_su4, m.metric_average,
                      m.improvement_pct, m.wall_clock_seconds);
        out += line;
        if (m.time_ratio) {
            std::snprintf(line, sizeof(line), " %7.2f", *m.time_ratio);
            out += line;
        } else {
            out += "       -";
        }
        if (any_ci) {
            if (m.ci95) {
                std::snprintf(line, sizeof(line), "  [%.4f, %.4f]", m.ci95->lo, m.ci95->hi);
                out += line;
            } else {
                out += "  -";
            }
        }
        out += '\n';
    }
    return out;
}

std::string render_csv(const BenchReport& report) {
    std::string out = "method,rouge1,rouge2,rouge_su4,metric_average,improvement_pct,"
                      "wall_clock_seconds,time_ratio,ci95_lo,ci95_hi,documents_scored,"
                      "documents_failed\n";
    for (const auto& m : report.methods) {
        out += m.name;
        out += ',' + format_double(m.rouge1) + ',' + format_double(m.rouge2) + ',' +
               format_double(m.rouge_su4) + ',' + format_double(m.metric_average) + ',' +
               format_double(m.improvement_pct) + ',' + format_double(m.wall_clock_seconds);
        out += ',';
        if (m.time_ratio)
            out += format_double(*m.time_ratio);
        out += ',';
        if (m.ci95)
            out += format_double(m.ci95->lo);
        out += ',';
        if (m.ci95)
            out += format_double(m.ci95->hi);
        out += ',' + std::to_string(m.documents_scored) + ',' +
               std::to_string(m.documents_failed) + '\n';
    }
    return out;
}

nlohmann::json method_to_json(const MethodResult& m) {
    nlohmann::json j{{"name", m.name},
                     {"rouge1", m.rouge1},
                     {"rouge2", m.rouge2},
                     {"rouge_su4", m.rouge_su4},
                     {"metric_average", m.metric_average},
                     {"improvement_pct", m.improvement_pct},
                     {"wall_clock_seconds", m.wall_clock_seconds},
                     {"documents_scored", m.documents_scored},
                     {"documents_failed", m.documents_failed}};
    j["time_ratio"] = m.time_ratio ? nlohmann::json(*m.time_ratio) : nlohmann::json();
    j["ci95"] = m.ci95 ? nlohmann::json{m.ci95->lo, m.ci95->hi} : nlohmann::json();
    return j;
}

MethodResult method_from_json(const nlohmann::json& j) {
    MethodResult m;
    m.name = j.at("name").get<std::string>();
    m.rouge1 = j.at("rouge1").get<double>();
    m.rouge2 = j.at("rouge2").get<double>();
    m.rouge_su4 = j.at("rouge_su4").get<double>();
    m.metric_average = j.at("metric_average").get<double>();
    m.improvement_pct = j.at("improvement_pct").get<double>();
    m.wall_clock_seconds = j.at("wall_clock_seconds").get<double>();
    m.documents_scored = j.at("documents_scored").get<std::size_t>();
    m.documents_failed = j.at("documents_failed").get<std::size_t>();
    if (!j.at("time_ratio").is_null())
        m.time_ratio = j.at("time_ratio").get<double>();
    if (!j.at("ci95").is_null())
        m.ci95 = ConfidenceInterval{j.at("ci95").at(0).get<double>(),
                                    j.at("ci95").at(1).get<double>()};
    return m;
}

} // namespace

std::string render_report(const BenchReport& report, ReportFormat format) {
    switch (format) {
    case ReportFormat::table:
        return render_table(report);
    case ReportFormat::csv:
        return render_csv(report);
    case ReportFormat::json: {
        nlohmann::json j{{"reference_method", report.reference_method},
                         {"documents_used", report.documents_used},
                         {"documents_skipped", report.documents_skipped},
                         {"parallel", report.parallel}};
        auto& methods = j["methods"] = nlohmann::json::array();
        for (const auto& m : report.methods)
            methods.push_back(method_to_json(m));
        return j.dump(2) + "\n";
    }
    }
    throw Error("unknown report format");
}

BenchReport parse_report_json(const std::string& json_text) {
    const auto j = nlohmann::json::parse(json_text);
    BenchReport report;
    report.reference_method = j.at("reference_method").get<std::string>();
    report.documents_used = j.at("documents_used").get<std::size_t>();
    report.documents_skipped = j.at("documents_skipped").get<std::size_t>();
    report.parallel = j.at("parallel").get<bool>();
    for (const auto& jm : j.at("methods"))
        report.methods.push_back(method_from_json(jm));
    return report;
}

} // namespace textrank
