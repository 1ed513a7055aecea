#include "talentrec/topsis.hpp"

#include <cmath>
#include <fstream>
#include <unordered_set>

#include "talentrec/cf.hpp"
#include "talentrec/errors.hpp"
#include "talentrec/text.hpp"

namespace talentrec {

const std::array<std::string, kNumCriteria>& criterion_names() {
    static const std::array<std::string, kNumCriteria> kNames = {
        "market_prevalence",  "skill_breadth", "digital_skill_density",
        "innovation_intensity", "role_level",  "transition_mobility",
    };
    return kNames;
}

int criterion_index(const std::string& name) {
    const auto& names = criterion_names();
    for (int c = 0; c < kNumCriteria; ++c) {
        if (names[c] == name) return c;
    }
    throw ValidationError("unknown criterion name: " + name);
}

LexiconConfig LexiconConfig::defaults() {
    LexiconConfig lex;
    lex.digital_terms = {
        "web",      "cloud",    "software",  "digital",   "network",  "data",
        "online",   "mobile",   "api",       "database",  "devops",   "frontend",
        "backend",  "javascript", "python",  "linux",     "security", "agile",
        "machine",  "learning", "analytics", "automation", "ai",      "iot",
        "blockchain", "sql",    "docker",    "kubernetes", "html",    "css",
    };
    lex.innovation_terms = {"ai", "cloud", "security", "automation", "iot", "blockchain"};
    lex.role_cues = {
        {"technician", 1.0}, {"analyst", 2.0},  {"engineer", 3.0},
        {"developer", 3.0},  {"architect", 4.0}, {"manager", 5.0},
    };
    return lex;
}

std::vector<std::string> load_term_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open lexicon file: " + path.string());
    std::vector<std::string> terms;
    std::unordered_set<std::string> seen;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::string term = to_lower(line);
        if (seen.insert(term).second) terms.push_back(std::move(term));
    }
    return terms;
}

std::vector<std::pair<std::string, double>> load_role_cue_file(
    const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open role-cue file: " + path.string());
    std::vector<std::pair<std::string, double>> cues;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw ParseError(path.string() + ":" + std::to_string(line_no) +
                             ": expected `cue<TAB>score`");
        }
        double score = 0.0;
        try {
            score = std::stod(line.substr(tab + 1));
        } catch (const std::exception&) {
            throw ParseError(path.string() + ":" + std::to_string(line_no) +
                             ": unparseable cue score");
        }
        if (score <= 0.0) {
            throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                                  ": cue scores must be positive");
        }
        cues.emplace_back(to_lower(line.substr(0, tab)), score);
    }
    return cues;
}

int CriterionMatrix::n_active() const {
    int n = 0;
    for (bool a : active) n += a ? 1 : 0;
    return n;
}

namespace {

// Description + skill tokens of an occupation; minimum token length 2 so
// short lexicon terms ("ai") can match.
std::vector<std::string> content_tokens(const OccupationRecord& item) {
    std::vector<std::string> tokens = tokenize(item.description, 2);
    for (const auto& skill : item.skill_terms) {
        for (auto& tok : tokenize(skill, 2)) tokens.push_back(std::move(tok));
    }
    return tokens;
}

}  // namespace

CriterionMatrix build_criterion_matrix(const std::vector<OccupationRecord>& items,
                                       const TransitionModel& model,
                                       const LexiconConfig& lexicons) {
    const int n = static_cast<int>(items.size());
    if (n == 0) throw ValidationError("criterion matrix needs a non-empty item list");
    if (model.n_items != n) {
        throw ValidationError("criterion matrix: item list and transition model disagree");
    }
    const std::unordered_set<std::string> digital(lexicons.digital_terms.begin(),
                                                  lexicons.digital_terms.end());
    const std::unordered_set<std::string> innovation(lexicons.innovation_terms.begin(),
                                                     lexicons.innovation_terms.end());

    Eigen::VectorXd breadth(n), density(n), innov(n), role(n), mobility(n);
    for (int i = 0; i < n; ++i) {
        const auto& item = items[static_cast<std::size_t>(i)];

        std::unordered_set<std::string> informative;
        for (const auto& tok : tokenize(item.description, 4)) {
            if (!is_stop_word(tok)) informative.insert(tok);
        }
        breadth(i) = static_cast<double>(item.skill_terms.size() + informative.size());

        const auto tokens = content_tokens(item);
        int digital_hits = 0;
        std::unordered_set<std::string> innovation_hits;
        for (const auto& tok : tokens) {
            if (digital.count(tok)) ++digital_hits;
            if (innovation.count(tok)) innovation_hits.insert(tok);
        }
        density(i) = tokens.empty() ? 0.0
                                    : static_cast<double>(digital_hits) /
                                          static_cast<double>(tokens.size());
        innov(i) = static_cast<double>(innovation_hits.size());

        double best_cue = 0.0;
        for (const auto& tok : tokenize(item.title, 2)) {
            for (const auto& [cue, score] : lexicons.role_cues) {
                if (tok == cue && score > best_cue) best_cue = score;
            }
        }
        role(i) = best_cue;

        mobility(i) = static_cast<double>((model.counts.row(i).array() > 0.0).count());
    }

    CriterionMatrix cm;
    cm.X.resize(n, kNumCriteria);
    cm.X.col(0) = model.popularity;
    cm.X.col(1) = min_max_normalize(breadth);
    cm.X.col(2) = density;
    cm.X.col(3) = min_max_normalize(innov);
    cm.X.col(4) = min_max_normalize(role);
    cm.X.col(5) = min_max_normalize(mobility);
    return cm;
}

Eigen::VectorXd entropy_weights(const CriterionMatrix& cm) {
    const int m = static_cast<int>(cm.X.rows());
    if (cm.n_active() == 0) throw ValidationError("entropy weights need an active criterion");
    Eigen::VectorXd divergence = Eigen::VectorXd::Zero(kNumCriteria);
    constexpr double kEps = 1e-9;
    const double log_m = std::log(static_cast<double>(m));
    for (int j = 0; j < kNumCriteria; ++j) {
        if (!cm.active[static_cast<std::size_t>(j)]) continue;
        const auto col = cm.X.col(j);
        // An exactly-constant column carries maximum entropy; set its
        // divergence to exactly 0.0 so zero-information proxies drop out of
        // every downstream sum bitwise (m = 1 degenerates the same way).
        if (m == 1 || col.maxCoeff() == col.minCoeff()) continue;
        const Eigen::ArrayXd shifted = col.array() + kEps;
        const Eigen::ArrayXd p = shifted / shifted.sum();
        const double entropy = -(p * p.log()).sum() / log_m;
        divergence(j) = std::max(0.0, 1.0 - entropy);
    }
    const double total = divergence.sum();
    Eigen::VectorXd w = Eigen::VectorXd::Zero(kNumCriteria);
    if (total > 0.0) {
        w = divergence / total;
    } else {
        const double uniform = 1.0 / cm.n_active();
        for (int j = 0; j < kNumCriteria; ++j) {
            if (cm.active[static_cast<std::size_t>(j)]) w(j) = uniform;
        }
    }
    return w;
}

Eigen::VectorXd user_weights(const std::vector<int>& prefix, const CriterionMatrix& cm,
                             double decay, const Eigen::VectorXd& global) {
    if (prefix.empty()) throw ValidationError("user_weights needs a non-empty prefix");
    const Eigen::VectorXd rho = recency_weights(static_cast<int>(prefix.size()), decay);
    Eigen::VectorXd profile = Eigen::VectorXd::Zero(kNumCriteria);
    for (std::size_t t = 0; t < prefix.size(); ++t) {
        profile += rho(static_cast<Eigen::Index>(t)) *
                   cm.X.row(prefix[t]).transpose();
    }
    for (int j = 0; j < kNumCriteria; ++j) {
        if (!cm.active[static_cast<std::size_t>(j)]) profile(j) = 0.0;
    }
    const double total = profile.sum();
    if (total <= 0.0) return global;
    return profile / total;
}

Eigen::VectorXd mix_weights(const Eigen::VectorXd& user, const Eigen::VectorXd& global,
                            double alpha) {
    return alpha * user + (1.0 - alpha) * global;
}

Eigen::VectorXd topsis_closeness(const CriterionMatrix& cm, const Eigen::VectorXd& weights,
                                 TopsisNorm norm) {
    const int m = static_cast<int>(cm.X.rows());
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(m, kNumCriteria);
    for (int j = 0; j < kNumCriteria; ++j) {
        if (!cm.active[static_cast<std::size_t>(j)]) continue;
        Eigen::VectorXd r;
        if (norm == TopsisNorm::Vector) {
            const double denom = cm.X.col(j).norm();
            r = denom > 0.0 ? Eigen::VectorXd(cm.X.col(j) / denom)
                            : Eigen::VectorXd(Eigen::VectorXd::Zero(m));
        } else {
            r = min_max_normalize(cm.X.col(j));
        }
        v.col(j) = weights(j) * r;
    }

    Eigen::VectorXd closeness(m);
    Eigen::VectorXd ideal(kNumCriteria), anti(kNumCriteria);
    for (int j = 0; j < kNumCriteria; ++j) {
        // All criteria are benefit-type: ideal = max, anti-ideal = min.
        ideal(j) = cm.active[static_cast<std::size_t>(j)] ? v.col(j).maxCoeff() : 0.0;
        anti(j) = cm.active[static_cast<std::size_t>(j)] ? v.col(j).minCoeff() : 0.0;
    }
    for (int i = 0; i < m; ++i) {
        double d_pos = 0.0, d_neg = 0.0;
        for (int j = 0; j < kNumCriteria; ++j) {
            if (!cm.active[static_cast<std::size_t>(j)]) continue;
            const double dp = v(i, j) - ideal(j);
            const double dn = v(i, j) - anti(j);
            d_pos += dp * dp;
            d_neg += dn * dn;
        }
        d_pos = std::sqrt(d_pos);
        d_neg = std::sqrt(d_neg);
        const double denom = d_pos + d_neg;
        closeness(i) = denom == 0.0 ? 0.5 : d_neg / denom;
    }
    return closeness;
}

Eigen::VectorXd topsis_scores(const CriterionMatrix& cm, const Eigen::VectorXd& weights,
                              TopsisNorm norm) {
    return min_max_normalize(topsis_closeness(cm, weights, norm));
}

CriterionMatrix deactivate_proxy(CriterionMatrix cm, int criterion) {
    if (criterion < 0 || criterion >= kNumCriteria) {
        throw ValidationError("criterion index out of range");
    }
    if (!cm.active[static_cast<std::size_t>(criterion)]) {
        throw ValidationError("criterion already inactive: " +
                              criterion_names()[static_cast<std::size_t>(criterion)]);
    }
    if (cm.n_active() <= 1) {
        throw ValidationError("cannot deactivate the last active criterion");
    }
    cm.active[static_cast<std::size_t>(criterion)] = false;
    return cm;
}

CriterionMatrix activate_proxy(CriterionMatrix cm, int criterion) {
    if (criterion < 0 || criterion >= kNumCriteria) {
        throw ValidationError("criterion index out of range");
    }
    cm.active[static_cast<std::size_t>(criterion)] = true;
    return cm;
}

}  // namespace talentrec
