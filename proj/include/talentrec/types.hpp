#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace talentrec {

struct OccupationRecord {
    std::string occupation_id;
    std::string title;
    std::string description;
    std::vector<std::string> skill_terms;  // deduplicated, lowercase
};

struct UserHistory {
    std::string user_id;
    std::vector<std::string> sequence;  // chronological, earliest first
};

struct FilterConfig {
    std::vector<std::string> allow_list;  // occupation ids or titles, case-insensitive
    int min_sequence_length = 3;
    int min_item_user_support = 25;
};

struct SplitSpec {
    std::string user_id;
    int train_end = 0;          // exclusive end of training prefix (= validation_index)
    int validation_index = 0;   // = test_index - 1
    int test_index = 0;         // uniform over {2, ..., L-1}
    std::int64_t seed = 0;
};

struct PackageCounts {
    std::int64_t n_users = 0;
    std::int64_t n_items = 0;
    std::int64_t n_interactions = 0;  // total sequence positions
};

struct PackageMeta {
    std::string source;
    std::string filter_digest;
    std::string created_at;  // ISO-8601; excluded from the content digest
    std::vector<std::int64_t> seeds;
    PackageCounts counts;
    std::string digest;  // hex SHA-256; excluded from its own computation
};

struct BenchmarkPackage {
    std::vector<UserHistory> histories;             // sorted by user_id
    std::vector<OccupationRecord> items;            // sorted by occupation_id
    std::map<std::int64_t, std::vector<SplitSpec>> splits;  // aligned with histories order
    PackageMeta meta;
};

struct AuditEntry {
    enum class Kind { Occupation, User };
    Kind kind;
    std::string id;
    std::string reason;  // "allow_list" | "min_item_user_support" | "min_sequence_length"
    int round = 0;       // fixpoint iteration that removed it (0 = allow-list pass)
};

struct AuditReport {
    std::vector<AuditEntry> dropped;
    int rounds = 0;  // fixpoint iterations until stable
    std::string summary() const;
    std::string detail() const;  // one line per dropped entity
};

// Dense index over a package's retained occupations, in items order
// (ascending occupation_id). All matrices/vectors use these positions, so the
// ascending-index tie-break used in ranking equals ascending-id.
struct ItemIndex {
    std::vector<std::string> ids;
    std::unordered_map<std::string, int> position;

    static ItemIndex build(const std::vector<OccupationRecord>& items);
    int at(const std::string& occupation_id) const;  // throws ValidationError
    int size() const { return static_cast<int>(ids.size()); }
};

}  // namespace talentrec
