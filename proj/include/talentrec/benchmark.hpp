#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "talentrec/types.hpp"

namespace talentrec {

// Hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view bytes);

// --- ingest ---------------------------------------------------------------
// histories file: `user_id<TAB>occ_1,occ_2,...` one user per line.
// items file:     `occupation_id<TAB>title<TAB>description<TAB>skill1|skill2|...`
// Unknown occupation ids referenced by a history raise a referential-integrity
// error rather than being dropped.
std::pair<std::vector<UserHistory>, std::vector<OccupationRecord>> ingest(
    const std::filesystem::path& histories_path,
    const std::filesystem::path& items_path);

// Parse from in-memory text (same formats); `name` labels parse errors.
std::vector<UserHistory> parse_histories(const std::string& text, const std::string& name);
std::vector<OccupationRecord> parse_items(const std::string& text, const std::string& name);
void check_referential_integrity(const std::vector<UserHistory>& histories,
                                 const std::vector<OccupationRecord>& items);

// --- filters --------------------------------------------------------------
struct FilterResult {
    std::vector<UserHistory> histories;
    std::vector<OccupationRecord> items;
    AuditReport audit;
};

// Pipeline order is fixed: (1) drop occupations outside the allow-list from
// every sequence (empty allow-list = keep everything); (2) iterate to fixpoint:
// drop occupations with distinct-user support below the threshold, then users
// with sequences shorter than the minimum, until stable.
FilterResult apply_filters(std::vector<UserHistory> histories,
                           std::vector<OccupationRecord> items,
                           const FilterConfig& config);

std::vector<std::string> load_allow_list(const std::filesystem::path& path);
std::string filter_config_digest(const FilterConfig& config);

// --- splits ---------------------------------------------------------------
// test_index uniform over {2, ..., L-1} from a deterministic generator keyed
// by (seed, user_id); independent of user iteration order.
SplitSpec generate_split(const UserHistory& history, std::int64_t seed);

// --- package assembly / freeze / load ------------------------------------
// Sorts histories by user_id and items by occupation_id, generates splits for
// every seed, fills counts. `created_at` is stored verbatim (freeze excludes
// it from the digest so identical content always reproduces one digest).
BenchmarkPackage assemble_package(std::vector<UserHistory> histories,
                                  std::vector<OccupationRecord> items,
                                  const std::vector<std::int64_t>& seeds,
                                  const std::string& source,
                                  const std::string& filter_digest,
                                  const std::string& created_at);

// Canonical serializations used for both files and the digest.
std::string serialize_histories(const BenchmarkPackage& pkg);
std::string serialize_items(const BenchmarkPackage& pkg);
std::string serialize_splits(const BenchmarkPackage& pkg);
std::string serialize_meta(const PackageMeta& meta);

// Digest = SHA-256 over histories.tsv ++ items.tsv ++ splits.json ++ a
// canonicalized meta.json in which `digest` and `created_at` are "".
std::string compute_digest(const std::string& histories_tsv,
                           const std::string& items_tsv,
                           const std::string& splits_json,
                           const PackageMeta& meta);
std::string compute_digest(const BenchmarkPackage& pkg);

// Writes histories.tsv, items.tsv, splits.json, meta.json; verifies by
// re-reading; returns the digest.
std::string freeze(const BenchmarkPackage& pkg, const std::filesystem::path& directory);

// Loads a frozen directory, verifies the recorded digest against the file
// bytes, and re-validates package invariants.
BenchmarkPackage load_package(const std::filesystem::path& directory);

}  // namespace talentrec
