#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "talentrec/types.hpp"

namespace talentrec {

inline constexpr int kNumFamilies = 6;

// Canonical family order; indices are stable across the project.
const std::array<std::string, kNumFamilies>& family_names();
int family_index(const std::string& name);  // throws ValidationError on unknown name

struct FamilyTaxonomy {
    std::vector<int> family_of;  // dense item index -> family index
    int family(int item) const { return family_of[item]; }
};

// Default keyword-rule assignment from titles. Rule priority (first match
// wins): infrastructure and security -> data and AI -> digital experience ->
// hardware and automation -> technology management -> software engineering
// (fallback), so e.g. "web developer" lands in digital experience.
FamilyTaxonomy taxonomy_from_rules(const std::vector<OccupationRecord>& items);
int classify_family(const std::string& title);

// `occupation_id<TAB>family_name` lines; entries override the keyword rules,
// items absent from the file fall back to them. Unknown occupation ids and
// unknown family names are rejected.
FamilyTaxonomy taxonomy_from_file(const std::filesystem::path& path,
                                  const std::vector<OccupationRecord>& items,
                                  const ItemIndex& index);

}  // namespace talentrec
