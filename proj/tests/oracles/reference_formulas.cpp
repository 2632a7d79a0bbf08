#include "reference_formulas.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <set>

namespace refmodel {
namespace {

std::size_t count_in(const std::vector<std::string>& tokens, const std::string& term) {
    return static_cast<std::size_t>(std::count(tokens.begin(), tokens.end(), term));
}

std::vector<std::string> distinct(const std::vector<std::string>& tokens) {
    std::vector<std::string> out(tokens);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double raw_idf(std::size_t n_total, std::size_t n_term) {
    return std::log(static_cast<double>(n_total) - static_cast<double>(n_term) + 0.5) -
           std::log(static_cast<double>(n_term) + 0.5);
}

double tf_component(double f, double r_len, double avg_dl, const Params& p) {
    return f * (p.k1 + 1.0) / (f + p.k1 * (1.0 - p.b + p.b * r_len / avg_dl));
}

double bm25_family(const Collection& c, std::size_t r, std::size_t s, const Params& p,
                   bool plus) {
    const double avg_dl = average_sentence_length(c);
    const double r_len = static_cast<double>(c.sentences[r].size());
    double score = 0.0;
    for (const auto& term : distinct(c.sentences[s])) {
        const auto f = static_cast<double>(count_in(c.sentences[r], term));
        if (f == 0.0)
            continue;
        double contribution = tf_component(f, r_len, avg_dl, p);
        if (plus)
            contribution += p.delta;
        score += term_idf(c, term, p) * contribution;
    }
    return score;
}

} // namespace

std::vector<std::string> vocabulary(const Collection& c) {
    std::set<std::string> vocab;
    for (const auto& s : c.sentences)
        vocab.insert(s.begin(), s.end());
    return {vocab.begin(), vocab.end()};
}

std::size_t sentences_containing(const Collection& c, const std::string& term) {
    std::size_t n = 0;
    for (const auto& s : c.sentences)
        if (count_in(s, term) > 0)
            ++n;
    return n;
}

double average_sentence_length(const Collection& c) {
    double total = 0.0;
    for (const auto& s : c.sentences)
        total += static_cast<double>(s.size());
    return total / static_cast<double>(c.sentences.size());
}

double average_idf(const Collection& c) {
    const auto vocab = vocabulary(c);
    double sum = 0.0;
    for (const auto& term : vocab)
        sum += raw_idf(c.sentences.size(), sentences_containing(c, term));
    return sum / static_cast<double>(vocab.size());
}

double term_idf(const Collection& c, const std::string& term, const Params& p) {
    const std::size_t n_total = c.sentences.size();
    const std::size_t n_term = sentences_containing(c, term);
    assert(n_term >= 1);
    switch (p.idf) {
    case Idf::naive:
        return std::log(static_cast<double>(n_total) / static_cast<double>(n_term));
    case Idf::zero_floor:
        return std::max(0.0, raw_idf(n_total, n_term));
    case Idf::corrected:
        break;
    }
    if (2 * n_term <= n_total)
        return raw_idf(n_total, n_term);
    return std::max(0.0, p.epsilon * average_idf(c));
}

double overlap_similarity(const Collection& c, std::size_t i, std::size_t j) {
    const auto di = distinct(c.sentences[i]);
    const auto dj = distinct(c.sentences[j]);
    std::vector<std::string> shared;
    std::set_intersection(di.begin(), di.end(), dj.begin(), dj.end(),
                          std::back_inserter(shared));
    if (shared.empty())
        return 0.0;
    const double denom = std::log(static_cast<double>(c.sentences[i].size())) +
                         std::log(static_cast<double>(c.sentences[j].size()));
    if (denom <= 0.0)
        return 0.0;
    return static_cast<double>(shared.size()) / denom;
}

std::size_t longest_common_substring(const std::string& a, const std::string& b) {
    // brute force: every substring of a, longest first would be faster but
    // scanning all lengths keeps it obviously correct
    std::size_t best = 0;
    for (std::size_t start = 0; start < a.size(); ++start)
        for (std::size_t len = 1; start + len <= a.size(); ++len)
            if (b.find(a.substr(start, len)) != std::string::npos)
                best = std::max(best, len);
    return best;
}

double cosine_tfidf(const Collection& c, std::size_t i, std::size_t j) {
    const auto vocab = vocabulary(c);
    const auto n_total = static_cast<double>(c.sentences.size());
    std::vector<double> vi, vj;
    for (const auto& term : vocab) {
        const double idf =
            std::log(n_total / static_cast<double>(sentences_containing(c, term)));
        vi.push_back(static_cast<double>(count_in(c.sentences[i], term)) * idf);
        vj.push_back(static_cast<double>(count_in(c.sentences[j], term)) * idf);
    }
    double dot = 0.0, ni = 0.0, nj = 0.0;
    for (std::size_t k = 0; k < vocab.size(); ++k) {
        dot += vi[k] * vj[k];
        ni += vi[k] * vi[k];
        nj += vj[k] * vj[k];
    }
    if (ni == 0.0 || nj == 0.0)
        return 0.0;
    return dot / (std::sqrt(ni) * std::sqrt(nj));
}

double bm25(const Collection& c, std::size_t r, std::size_t s, const Params& p) {
    return bm25_family(c, r, s, p, false);
}

double bm25_plus(const Collection& c, std::size_t r, std::size_t s, const Params& p) {
    return bm25_family(c, r, s, p, true);
}

double pair_weight(const Collection& c, std::size_t i, std::size_t j, Variant v,
                   const Params& p) {
    double w = 0.0;
    switch (v) {
    case Variant::overlap:
        w = overlap_similarity(c, i, j);
        break;
    case Variant::lcs:
        w = static_cast<double>(longest_common_substring(c.raws[i], c.raws[j]));
        break;
    case Variant::cosine:
        w = cosine_tfidf(c, i, j);
        break;
    case Variant::bm25:
        w = (bm25(c, i, j, p) + bm25(c, j, i, p)) / 2.0;
        break;
    case Variant::bm25_plus:
        w = (bm25_plus(c, i, j, p) + bm25_plus(c, j, i, p)) / 2.0;
        break;
    }
    return std::max(0.0, w);
}

std::vector<double> pagerank_fixed_point(const std::vector<std::vector<double>>& weights,
                                         double damping) {
    const std::size_t n = weights.size();
    std::vector<double> strength(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            strength[i] += weights[i][j];

    // A = I - d*T with T[i][j] = w(j,i)/strength(j); rhs = (1-d) * 1
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    std::vector<double> rhs(n, 1.0 - damping);
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || strength[j] == 0.0 || weights[j][i] == 0.0)
                continue;
            a[i][j] -= damping * weights[j][i] / strength[j];
        }
    }

    // gaussian elimination with partial pivoting
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row)
            if (std::abs(a[row][col]) > std::abs(a[pivot][col]))
                pivot = row;
        std::swap(a[col], a[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        assert(a[col][col] != 0.0);
        for (std::size_t row = col + 1; row < n; ++row) {
            const double factor = a[row][col] / a[col][col];
            if (factor == 0.0)
                continue;
            for (std::size_t k = col; k < n; ++k)
                a[row][k] -= factor * a[col][k];
            rhs[row] -= factor * rhs[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t row = n; row-- > 0;) {
        double sum = rhs[row];
        for (std::size_t k = row + 1; k < n; ++k)
            sum -= a[row][k] * x[k];
        x[row] = sum / a[row][row];
    }
    return x;
}

} // namespace refmodel
