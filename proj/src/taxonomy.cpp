#include "talentrec/taxonomy.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "talentrec/errors.hpp"
#include "talentrec/text.hpp"

namespace talentrec {

const std::array<std::string, kNumFamilies>& family_names() {
    static const std::array<std::string, kNumFamilies> kNames = {
        "software engineering",      "infrastructure and security",
        "data and AI",               "digital experience",
        "hardware and automation",   "technology management",
    };
    return kNames;
}

int family_index(const std::string& name) {
    const std::string needle = to_lower(name);
    const auto& names = family_names();
    for (int f = 0; f < kNumFamilies; ++f) {
        if (to_lower(names[f]) == needle) return f;
    }
    throw ValidationError("unknown family name: " + name);
}

namespace {

bool has_any(const std::vector<std::string>& tokens,
             std::initializer_list<const char*> keywords) {
    for (const auto& tok : tokens) {
        for (const char* kw : keywords) {
            if (tok == kw) return true;
        }
    }
    return false;
}

}  // namespace

int classify_family(const std::string& title) {
    // Lexicon terms like "ai" are two characters, so match over length >= 2.
    const auto tokens = tokenize(title, 2);
    if (has_any(tokens, {"network", "security", "administrator", "sysadmin", "devops",
                         "infrastructure", "firewall"})) {
        return 1;  // infrastructure and security
    }
    if (has_any(tokens, {"data", "ai", "analyst", "analytics", "scientist", "statistician",
                         "machine"})) {
        return 2;  // data and AI
    }
    if (has_any(tokens, {"web", "ux", "ui", "interface", "designer", "frontend", "graphic"})) {
        return 3;  // digital experience
    }
    if (has_any(tokens, {"hardware", "embedded", "automation", "technician", "robotics",
                         "electronics"})) {
        return 4;  // hardware and automation
    }
    if (has_any(tokens, {"manager", "management", "director", "chief", "head", "lead",
                         "officer"})) {
        return 5;  // technology management
    }
    return 0;  // software engineering (fallback: developer, engineer, programmer, ...)
}

FamilyTaxonomy taxonomy_from_rules(const std::vector<OccupationRecord>& items) {
    FamilyTaxonomy tax;
    tax.family_of.reserve(items.size());
    for (const auto& it : items) tax.family_of.push_back(classify_family(it.title));
    return tax;
}

FamilyTaxonomy taxonomy_from_file(const std::filesystem::path& path,
                                  const std::vector<OccupationRecord>& items,
                                  const ItemIndex& index) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open taxonomy file: " + path.string());

    FamilyTaxonomy tax = taxonomy_from_rules(items);
    std::unordered_set<std::string> seen;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw ParseError(path.string() + ":" + std::to_string(line_no) +
                             ": expected `occupation_id<TAB>family_name`");
        }
        const std::string occ = line.substr(0, tab);
        const std::string family = line.substr(tab + 1);
        if (!seen.insert(occ).second) {
            throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                                  ": duplicate taxonomy entry for " + occ);
        }
        tax.family_of[static_cast<std::size_t>(index.at(occ))] = family_index(family);
    }
    return tax;
}

}  // namespace talentrec
