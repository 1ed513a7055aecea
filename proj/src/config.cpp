#include "talentrec/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "talentrec/errors.hpp"
#include "talentrec/io.hpp"
#include "talentrec/text.hpp"

namespace talentrec {
namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        double v = std::stod(value, &pos);
        if (pos != value.size()) throw ParseError("");
        return v;
    } catch (const std::exception&) {
        throw ParseError("config key '" + key + "': expected a number, got '" + value + "'");
    }
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(value, &pos);
        if (pos != value.size()) throw ParseError("");
        return v;
    } catch (const std::exception&) {
        throw ParseError("config key '" + key + "': expected an integer, got '" + value + "'");
    }
}

std::vector<std::string> split_commas(const std::string& value) {
    std::vector<std::string> parts;
    std::stringstream ss(value);
    std::string part;
    while (std::getline(ss, part, ',')) {
        part = trim(part);
        if (!part.empty()) parts.push_back(part);
    }
    return parts;
}

}  // namespace

std::vector<std::int64_t> parse_seed_list(const std::string& text) {
    std::vector<std::int64_t> seeds;
    for (const std::string& part : split_commas(text)) {
        std::size_t dash = part.find('-', 1);  // allow a leading minus sign
        if (dash != std::string::npos) {
            std::int64_t lo = parse_int("seeds", part.substr(0, dash));
            std::int64_t hi = parse_int("seeds", part.substr(dash + 1));
            if (hi < lo) throw ParseError("seed range '" + part + "' is descending");
            if (hi - lo > 10000) throw ParseError("seed range '" + part + "' is implausibly wide");
            for (std::int64_t s = lo; s <= hi; ++s) seeds.push_back(s);
        } else {
            seeds.push_back(parse_int("seeds", part));
        }
    }
    if (seeds.empty()) throw ParseError("seed list is empty");
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    return seeds;
}

std::map<std::string, std::string> parse_config_file(const std::filesystem::path& path) {
    std::map<std::string, std::string> kv;
    std::string content = read_file(path);
    std::stringstream ss(content);
    std::string line;
    int line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError(path.string() + ":" + std::to_string(line_no) +
                             ": expected key=value, got '" + line + "'");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ParseError(path.string() + ":" + std::to_string(line_no) + ": empty key");
        }
        if (kv.count(key) != 0) {
            throw ParseError(path.string() + ":" + std::to_string(line_no) +
                             ": duplicate key '" + key + "'");
        }
        kv[key] = value;
    }
    return kv;
}

void apply_config(const std::map<std::string, std::string>& kv, RunConfig& config) {
    for (const auto& [key, value] : kv) {
        if (key == "beta") {
            config.cf.beta = parse_double(key, value);
        } else if (key == "gamma") {
            config.cf.gamma = parse_double(key, value);
        } else if (key == "decay") {
            config.decay = parse_double(key, value);
        } else if (key == "eta") {
            config.rl.eta = parse_double(key, value);
        } else if (key == "reward_pos") {
            config.rl.reward_pos = parse_double(key, value);
        } else if (key == "reward_neg") {
            config.rl.reward_neg = parse_double(key, value);
        } else if (key == "negatives_per_positive") {
            config.rl.negatives_per_positive = static_cast<int>(parse_int(key, value));
        } else if (key == "passes") {
            config.rl.passes = static_cast<int>(parse_int(key, value));
        } else if (key == "omega") {
            config.rl.omega = parse_double(key, value);
        } else if (key == "mix_family") {
            config.rl.mix_family = parse_double(key, value);
        } else if (key == "mix_pop") {
            config.rl.mix_pop = parse_double(key, value);
        } else if (key == "topsis_norm") {
            std::string v = to_lower(value);
            if (v == "vector") {
                config.topsis_norm = TopsisNorm::Vector;
            } else if (v == "minmax") {
                config.topsis_norm = TopsisNorm::MinMax;
            } else {
                throw ParseError("config key 'topsis_norm': expected vector or minmax, got '" +
                                 value + "'");
            }
        } else if (key == "alpha_grid") {
            std::vector<double> grid;
            for (const std::string& part : split_commas(value)) {
                grid.push_back(parse_double(key, part));
            }
            if (grid.empty()) throw ParseError("config key 'alpha_grid': empty list");
            config.alpha_grid = grid;
        } else if (key == "latent_dims") {
            std::vector<int> dims;
            for (const std::string& part : split_commas(value)) {
                dims.push_back(static_cast<int>(parse_int(key, part)));
            }
            if (dims.empty()) throw ParseError("config key 'latent_dims': empty list");
            config.latent_dims = dims;
        } else if (key == "nmf_iterations") {
            config.nmf_iterations = static_cast<int>(parse_int(key, value));
        } else if (key == "svd_iterations") {
            config.svd_iterations = static_cast<int>(parse_int(key, value));
        } else if (key == "seeds") {
            config.seeds = parse_seed_list(value);
        } else if (key == "canonical_seed") {
            config.canonical_seed = parse_int(key, value);
        } else if (key == "validation_objective") {
            std::string v = to_lower(value);
            if (v == "hr5") {
                config.validation_objective = ValidationObjective::Hr5;
            } else if (v == "ndcg5") {
                config.validation_objective = ValidationObjective::Ndcg5;
            } else if (v == "mrr5") {
                config.validation_objective = ValidationObjective::Mrr5;
            } else {
                throw ParseError(
                    "config key 'validation_objective': expected hr5, ndcg5, or mrr5, got '" +
                    value + "'");
            }
        } else if (key == "jobs") {
            config.jobs = static_cast<int>(parse_int(key, value));
        } else if (key == "force_lambda") {
            std::vector<std::string> parts = split_commas(value);
            if (parts.size() != 3) {
                throw ParseError("config key 'force_lambda': expected cf,rl,t");
            }
            FusionWeights w;
            w.cf = parse_double(key, parts[0]);
            w.rl = parse_double(key, parts[1]);
            w.t = parse_double(key, parts[2]);
            config.forced_lambda = w;
        } else if (key == "force_alpha") {
            config.forced_alpha = parse_double(key, value);
        } else {
            throw ParseError("unknown config key '" + key + "'");
        }
    }

    if (config.cf.beta < 0.0 || config.cf.beta > 1.0) throw ValidationError("beta must be in [0, 1]");
    if (config.cf.gamma < 0.0 || config.cf.gamma > 1.0)
        throw ValidationError("gamma must be in [0, 1]");
    if (config.decay <= 0.0 || config.decay > 1.0)
        throw ValidationError("decay must be in (0, 1]");
    if (config.rl.eta <= 0.0 || config.rl.eta > 1.0) throw ValidationError("eta must be in (0, 1]");
    if (config.rl.passes < 1) throw ValidationError("passes must be >= 1");
    if (config.rl.negatives_per_positive < 0)
        throw ValidationError("negatives_per_positive must be >= 0");
    if (config.rl.omega < 0.0 || config.rl.omega > 1.0)
        throw ValidationError("omega must be in [0, 1]");
    if (config.rl.mix_family < 0.0 || config.rl.mix_pop < 0.0 ||
        std::abs(config.rl.mix_family + config.rl.mix_pop - 1.0) > 1e-12) {
        throw ValidationError("mix_family and mix_pop must be non-negative and sum to 1");
    }
    for (double a : config.alpha_grid) {
        if (a < 0.0 || a > 1.0) throw ValidationError("alpha_grid entries must be in [0, 1]");
    }
    for (int d : config.latent_dims) {
        if (d < 1) throw ValidationError("latent_dims entries must be >= 1");
    }
    if (config.nmf_iterations < 1) throw ValidationError("nmf_iterations must be >= 1");
    if (config.svd_iterations < 1) throw ValidationError("svd_iterations must be >= 1");
    if (config.seeds.empty()) throw ValidationError("seeds must be non-empty");
    if (config.jobs < 0) throw ValidationError("jobs must be >= 0");
    if (config.forced_lambda) {
        const FusionWeights& w = *config.forced_lambda;
        if (w.cf < 0.0 || w.rl < 0.0 || w.t < 0.0 ||
            std::abs(w.cf + w.rl + w.t - 1.0) > 1e-9) {
            throw ValidationError("force_lambda must be a convex combination (non-negative, sum 1)");
        }
    }
    if (config.forced_alpha && (*config.forced_alpha < 0.0 || *config.forced_alpha > 1.0)) {
        throw ValidationError("force_alpha must be in [0, 1]");
    }
}

}  // namespace talentrec
