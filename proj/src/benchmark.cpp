#include "talentrec/benchmark.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "talentrec/errors.hpp"
#include "talentrec/io.hpp"
#include "talentrec/rng.hpp"
#include "talentrec/text.hpp"

namespace talentrec {

namespace {

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

void require_clean_field(const std::string& value, const std::string& what,
                         std::string_view forbidden) {
    for (char c : forbidden) {
        if (value.find(c) != std::string::npos) {
            throw ValidationError(what + " contains forbidden character '" +
                                  std::string(1, c) + "': " + value);
        }
    }
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int md_len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &md_len, EVP_sha256(), nullptr) != 1) {
        throw IoError("SHA-256 computation failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(md_len * 2);
    for (unsigned int i = 0; i < md_len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xF]);
    }
    return out;
}

std::vector<UserHistory> parse_histories(const std::string& text, const std::string& name) {
    std::vector<UserHistory> histories;
    std::unordered_set<std::string> seen;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw ParseError(name + ":" + std::to_string(line_no) +
                             ": expected `user_id<TAB>occ_1,occ_2,...`");
        }
        UserHistory h;
        h.user_id = line.substr(0, tab);
        if (h.user_id.empty()) {
            throw ParseError(name + ":" + std::to_string(line_no) + ": empty user id");
        }
        if (!seen.insert(h.user_id).second) {
            throw ValidationError(name + ":" + std::to_string(line_no) +
                                  ": duplicate user id: " + h.user_id);
        }
        for (const auto& occ : split_on(line.substr(tab + 1), ',')) {
            if (occ.empty()) {
                throw ParseError(name + ":" + std::to_string(line_no) +
                                 ": empty occupation id in sequence");
            }
            h.sequence.push_back(occ);
        }
        histories.push_back(std::move(h));
    }
    return histories;
}

std::vector<OccupationRecord> parse_items(const std::string& text, const std::string& name) {
    std::vector<OccupationRecord> items;
    std::unordered_set<std::string> seen;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_on(line, '\t');
        if (fields.size() != 4) {
            throw ParseError(name + ":" + std::to_string(line_no) +
                             ": expected 4 tab-separated fields, got " +
                             std::to_string(fields.size()));
        }
        OccupationRecord rec;
        rec.occupation_id = fields[0];
        rec.title = fields[1];
        rec.description = fields[2];
        if (rec.occupation_id.empty()) {
            throw ParseError(name + ":" + std::to_string(line_no) + ": empty occupation id");
        }
        if (!seen.insert(rec.occupation_id).second) {
            throw ValidationError(name + ":" + std::to_string(line_no) +
                                  ": duplicate occupation id: " + rec.occupation_id);
        }
        if (!fields[3].empty()) {
            std::unordered_set<std::string> skill_seen;
            for (const auto& raw : split_on(fields[3], '|')) {
                if (raw.empty()) {
                    throw ParseError(name + ":" + std::to_string(line_no) +
                                     ": empty skill term");
                }
                std::string term = to_lower(raw);
                if (skill_seen.insert(term).second) rec.skill_terms.push_back(term);
            }
        }
        items.push_back(std::move(rec));
    }
    return items;
}

void check_referential_integrity(const std::vector<UserHistory>& histories,
                                 const std::vector<OccupationRecord>& items) {
    std::unordered_set<std::string> known;
    for (const auto& it : items) known.insert(it.occupation_id);
    for (const auto& h : histories) {
        for (const auto& occ : h.sequence) {
            if (!known.count(occ)) {
                throw ValidationError("history for user " + h.user_id +
                                      " references unknown occupation id: " + occ);
            }
        }
    }
}

std::pair<std::vector<UserHistory>, std::vector<OccupationRecord>> ingest(
    const std::filesystem::path& histories_path,
    const std::filesystem::path& items_path) {
    auto histories = parse_histories(read_file(histories_path), histories_path.string());
    auto items = parse_items(read_file(items_path), items_path.string());
    check_referential_integrity(histories, items);
    return {std::move(histories), std::move(items)};
}

std::vector<std::string> load_allow_list(const std::filesystem::path& path) {
    std::vector<std::string> entries;
    std::istringstream in(read_file(path));
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        // Trim surrounding whitespace; skip blanks and '#' comments.
        auto b = line.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t");
        line = line.substr(b, e - b + 1);
        if (line.empty() || line[0] == '#') continue;
        entries.push_back(line);
    }
    return entries;
}

std::string filter_config_digest(const FilterConfig& config) {
    std::set<std::string> normalized;
    for (const auto& entry : config.allow_list) normalized.insert(to_lower(entry));
    std::ostringstream os;
    os << "allow_list=";
    bool first = true;
    for (const auto& entry : normalized) {
        if (!first) os << ',';
        os << entry;
        first = false;
    }
    os << ";min_sequence_length=" << config.min_sequence_length
       << ";min_item_user_support=" << config.min_item_user_support;
    return sha256_hex(os.str());
}

FilterResult apply_filters(std::vector<UserHistory> histories,
                           std::vector<OccupationRecord> items,
                           const FilterConfig& config) {
    if (config.min_sequence_length < 3) {
        throw ValidationError("min_sequence_length must be >= 3");
    }
    if (config.min_item_user_support < 1) {
        throw ValidationError("min_item_user_support must be >= 1");
    }
    FilterResult result;
    AuditReport& audit = result.audit;

    // Pass 1: allow-list (case-insensitive match on occupation id or title).
    if (!config.allow_list.empty()) {
        std::unordered_set<std::string> allowed_keys;
        for (const auto& entry : config.allow_list) allowed_keys.insert(to_lower(entry));
        std::unordered_set<std::string> keep;
        std::vector<OccupationRecord> kept_items;
        for (auto& it : items) {
            if (allowed_keys.count(to_lower(it.occupation_id)) ||
                allowed_keys.count(to_lower(it.title))) {
                keep.insert(it.occupation_id);
                kept_items.push_back(std::move(it));
            } else {
                audit.dropped.push_back(
                    {AuditEntry::Kind::Occupation, it.occupation_id, "allow_list", 0});
            }
        }
        items = std::move(kept_items);
        for (auto& h : histories) {
            std::erase_if(h.sequence, [&](const std::string& occ) { return !keep.count(occ); });
        }
    }

    // Pass 2: support/length fixpoint.
    int round = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        ++round;

        std::map<std::string, std::unordered_set<std::string>> users_of;
        for (const auto& it : items) users_of[it.occupation_id];  // ensure presence
        for (const auto& h : histories) {
            for (const auto& occ : h.sequence) users_of[occ].insert(h.user_id);
        }
        std::unordered_set<std::string> drop_occ;
        for (const auto& [occ, users] : users_of) {
            if (static_cast<int>(users.size()) < config.min_item_user_support) {
                drop_occ.insert(occ);
                audit.dropped.push_back(
                    {AuditEntry::Kind::Occupation, occ, "min_item_user_support", round});
            }
        }
        if (!drop_occ.empty()) {
            changed = true;
            std::erase_if(items, [&](const OccupationRecord& it) {
                return drop_occ.count(it.occupation_id) > 0;
            });
            for (auto& h : histories) {
                std::erase_if(h.sequence,
                              [&](const std::string& occ) { return drop_occ.count(occ) > 0; });
            }
        }

        std::vector<UserHistory> kept_users;
        kept_users.reserve(histories.size());
        for (auto& h : histories) {
            if (static_cast<int>(h.sequence.size()) < config.min_sequence_length) {
                audit.dropped.push_back(
                    {AuditEntry::Kind::User, h.user_id, "min_sequence_length", round});
                changed = true;
            } else {
                kept_users.push_back(std::move(h));
            }
        }
        histories = std::move(kept_users);
    }
    audit.rounds = round;

    if (histories.empty() || items.empty()) {
        throw ValidationError("benchmark degenerate: no users or occupations survive filtering");
    }
    result.histories = std::move(histories);
    result.items = std::move(items);
    return result;
}

SplitSpec generate_split(const UserHistory& history, std::int64_t seed) {
    const int L = static_cast<int>(history.sequence.size());
    if (L < 3) {
        throw ValidationError("cannot split sequence of length " + std::to_string(L) +
                              " for user " + history.user_id + " (minimum 3)");
    }
    SplitMix64 rng(mix_seed(static_cast<std::uint64_t>(seed), history.user_id));
    SplitSpec spec;
    spec.user_id = history.user_id;
    spec.seed = seed;
    spec.test_index = 2 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(L - 2)));
    spec.validation_index = spec.test_index - 1;
    spec.train_end = spec.validation_index;
    return spec;
}

BenchmarkPackage assemble_package(std::vector<UserHistory> histories,
                                  std::vector<OccupationRecord> items,
                                  const std::vector<std::int64_t>& seeds,
                                  const std::string& source,
                                  const std::string& filter_digest,
                                  const std::string& created_at) {
    if (histories.empty() || items.empty()) {
        throw ValidationError("benchmark degenerate: empty histories or items");
    }
    check_referential_integrity(histories, items);
    for (const auto& h : histories) {
        require_clean_field(h.user_id, "user id", "\t\n\r,");
        if (h.sequence.size() < 3) {
            throw ValidationError("user " + h.user_id + " has sequence shorter than 3");
        }
    }
    for (const auto& it : items) {
        require_clean_field(it.occupation_id, "occupation id", "\t\n\r,|");
        require_clean_field(it.title, "title", "\t\n\r");
        require_clean_field(it.description, "description", "\t\n\r");
        for (const auto& s : it.skill_terms) require_clean_field(s, "skill term", "\t\n\r|");
    }

    std::sort(histories.begin(), histories.end(),
              [](const UserHistory& a, const UserHistory& b) { return a.user_id < b.user_id; });
    std::sort(items.begin(), items.end(),
              [](const OccupationRecord& a, const OccupationRecord& b) {
                  return a.occupation_id < b.occupation_id;
              });

    BenchmarkPackage pkg;
    pkg.histories = std::move(histories);
    pkg.items = std::move(items);
    for (std::int64_t seed : seeds) {
        auto& specs = pkg.splits[seed];
        specs.reserve(pkg.histories.size());
        for (const auto& h : pkg.histories) specs.push_back(generate_split(h, seed));
    }
    pkg.meta.source = source;
    pkg.meta.filter_digest = filter_digest;
    pkg.meta.created_at = created_at;
    pkg.meta.seeds = seeds;
    pkg.meta.counts.n_users = static_cast<std::int64_t>(pkg.histories.size());
    pkg.meta.counts.n_items = static_cast<std::int64_t>(pkg.items.size());
    std::int64_t interactions = 0;
    for (const auto& h : pkg.histories) interactions += static_cast<std::int64_t>(h.sequence.size());
    pkg.meta.counts.n_interactions = interactions;
    return pkg;
}

std::string serialize_histories(const BenchmarkPackage& pkg) {
    std::ostringstream os;
    for (const auto& h : pkg.histories) {
        os << h.user_id << '\t';
        for (std::size_t i = 0; i < h.sequence.size(); ++i) {
            if (i) os << ',';
            os << h.sequence[i];
        }
        os << '\n';
    }
    return os.str();
}

std::string serialize_items(const BenchmarkPackage& pkg) {
    std::ostringstream os;
    for (const auto& it : pkg.items) {
        os << it.occupation_id << '\t' << it.title << '\t' << it.description << '\t';
        for (std::size_t i = 0; i < it.skill_terms.size(); ++i) {
            if (i) os << '|';
            os << it.skill_terms[i];
        }
        os << '\n';
    }
    return os.str();
}

std::string serialize_splits(const BenchmarkPackage& pkg) {
    nlohmann::json root = nlohmann::json::object();
    for (const auto& [seed, specs] : pkg.splits) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& s : specs) {
            arr.push_back({{"test_index", s.test_index}, {"user_id", s.user_id}});
        }
        root[std::to_string(seed)] = std::move(arr);
    }
    return root.dump(2) + "\n";
}

std::string serialize_meta(const PackageMeta& meta) {
    nlohmann::json root = {
        {"counts",
         {{"n_interactions", meta.counts.n_interactions},
          {"n_items", meta.counts.n_items},
          {"n_users", meta.counts.n_users}}},
        {"created_at", meta.created_at},
        {"digest", meta.digest},
        {"filter_digest", meta.filter_digest},
        {"seeds", meta.seeds},
        {"source", meta.source},
    };
    return root.dump(2) + "\n";
}

std::string compute_digest(const std::string& histories_tsv,
                           const std::string& items_tsv,
                           const std::string& splits_json,
                           const PackageMeta& meta) {
    PackageMeta canonical = meta;
    canonical.digest.clear();
    canonical.created_at.clear();
    std::string blob;
    blob.reserve(histories_tsv.size() + items_tsv.size() + splits_json.size() + 512);
    blob += histories_tsv;
    blob += items_tsv;
    blob += splits_json;
    blob += serialize_meta(canonical);
    return sha256_hex(blob);
}

std::string compute_digest(const BenchmarkPackage& pkg) {
    return compute_digest(serialize_histories(pkg), serialize_items(pkg),
                          serialize_splits(pkg), pkg.meta);
}

std::string freeze(const BenchmarkPackage& pkg, const std::filesystem::path& directory) {
    std::error_code ec;
    std::filesystem::create_directories(directory, ec);
    if (ec) throw IoError("cannot create directory: " + directory.string());

    const std::string histories_tsv = serialize_histories(pkg);
    const std::string items_tsv = serialize_items(pkg);
    const std::string splits_json = serialize_splits(pkg);
    const std::string digest = compute_digest(histories_tsv, items_tsv, splits_json, pkg.meta);

    PackageMeta meta = pkg.meta;
    meta.digest = digest;

    write_file(directory / "histories.tsv", histories_tsv);
    write_file(directory / "items.tsv", items_tsv);
    write_file(directory / "splits.json", splits_json);
    write_file(directory / "meta.json", serialize_meta(meta));

    BenchmarkPackage reread = load_package(directory);
    if (reread.meta.digest != digest) {
        throw ValidationError("digest mismatch on verification read: " + directory.string());
    }
    return digest;
}

BenchmarkPackage load_package(const std::filesystem::path& directory) {
    const std::string histories_tsv = read_file(directory / "histories.tsv");
    const std::string items_tsv = read_file(directory / "items.tsv");
    const std::string splits_json = read_file(directory / "splits.json");
    const std::string meta_json = read_file(directory / "meta.json");

    BenchmarkPackage pkg;
    pkg.histories = parse_histories(histories_tsv, (directory / "histories.tsv").string());
    pkg.items = parse_items(items_tsv, (directory / "items.tsv").string());
    check_referential_integrity(pkg.histories, pkg.items);

    nlohmann::json meta;
    nlohmann::json splits;
    try {
        meta = nlohmann::json::parse(meta_json);
        splits = nlohmann::json::parse(splits_json);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("malformed package JSON in " + directory.string() + ": " + e.what());
    }
    try {
        pkg.meta.source = meta.at("source").get<std::string>();
        pkg.meta.filter_digest = meta.at("filter_digest").get<std::string>();
        pkg.meta.created_at = meta.at("created_at").get<std::string>();
        pkg.meta.seeds = meta.at("seeds").get<std::vector<std::int64_t>>();
        pkg.meta.counts.n_users = meta.at("counts").at("n_users").get<std::int64_t>();
        pkg.meta.counts.n_items = meta.at("counts").at("n_items").get<std::int64_t>();
        pkg.meta.counts.n_interactions =
            meta.at("counts").at("n_interactions").get<std::int64_t>();
        pkg.meta.digest = meta.at("digest").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("meta.json missing required field: " + std::string(e.what()));
    }

    std::unordered_map<std::string, const UserHistory*> by_user;
    for (const auto& h : pkg.histories) by_user.emplace(h.user_id, &h);
    if (!splits.is_object()) throw ParseError("splits.json root must be an object");
    for (const auto& [seed_str, arr] : splits.items()) {
        std::int64_t seed = 0;
        try {
            seed = std::stoll(seed_str);
        } catch (const std::exception&) {
            throw ParseError("splits.json: non-integer seed key: " + seed_str);
        }
        if (!arr.is_array() || arr.size() != pkg.histories.size()) {
            throw ValidationError("splits.json: seed " + seed_str +
                                  " does not cover every user exactly once");
        }
        auto& specs = pkg.splits[seed];
        specs.reserve(arr.size());
        for (std::size_t i = 0; i < arr.size(); ++i) {
            SplitSpec spec;
            spec.seed = seed;
            spec.user_id = arr[i].at("user_id").get<std::string>();
            spec.test_index = arr[i].at("test_index").get<int>();
            if (spec.user_id != pkg.histories[i].user_id) {
                throw ValidationError("splits.json: seed " + seed_str +
                                      " is not aligned with histories order at row " +
                                      std::to_string(i));
            }
            const int L = static_cast<int>(by_user.at(spec.user_id)->sequence.size());
            if (spec.test_index < 2 || spec.test_index >= L) {
                throw ValidationError("splits.json: illegal test_index " +
                                      std::to_string(spec.test_index) + " for user " +
                                      spec.user_id);
            }
            spec.validation_index = spec.test_index - 1;
            spec.train_end = spec.validation_index;
            specs.push_back(std::move(spec));
        }
    }

    if (pkg.meta.counts.n_users != static_cast<std::int64_t>(pkg.histories.size()) ||
        pkg.meta.counts.n_items != static_cast<std::int64_t>(pkg.items.size())) {
        throw ValidationError("meta.json counts disagree with package contents");
    }
    std::int64_t interactions = 0;
    for (const auto& h : pkg.histories) interactions += static_cast<std::int64_t>(h.sequence.size());
    if (pkg.meta.counts.n_interactions != interactions) {
        throw ValidationError("meta.json interaction count disagrees with histories");
    }
    for (std::int64_t seed : pkg.meta.seeds) {
        if (!pkg.splits.count(seed)) {
            throw ValidationError("meta.json lists seed " + std::to_string(seed) +
                                  " with no splits entry");
        }
    }

    const std::string recomputed = compute_digest(histories_tsv, items_tsv, splits_json, pkg.meta);
    if (recomputed != pkg.meta.digest) {
        throw ValidationError("package digest mismatch: recorded " + pkg.meta.digest +
                              ", recomputed " + recomputed);
    }
    return pkg;
}

}  // namespace talentrec
