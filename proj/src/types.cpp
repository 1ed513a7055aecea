#include "talentrec/types.hpp"

#include <sstream>

#include "talentrec/errors.hpp"

namespace talentrec {

std::string AuditReport::summary() const {
    std::int64_t occs = 0, users = 0;
    for (const auto& e : dropped) {
        (e.kind == AuditEntry::Kind::Occupation ? occs : users)++;
    }
    std::ostringstream os;
    os << "filter audit: dropped " << occs << " occupations, " << users
       << " users in " << rounds << " fixpoint round(s)";
    return os.str();
}

std::string AuditReport::detail() const {
    std::ostringstream os;
    for (const auto& e : dropped) {
        os << (e.kind == AuditEntry::Kind::Occupation ? "occupation" : "user") << '\t'
           << e.id << '\t' << e.reason << '\t' << "round=" << e.round << '\n';
    }
    return os.str();
}

ItemIndex ItemIndex::build(const std::vector<OccupationRecord>& items) {
    ItemIndex idx;
    idx.ids.reserve(items.size());
    for (const auto& it : items) {
        idx.position.emplace(it.occupation_id, static_cast<int>(idx.ids.size()));
        idx.ids.push_back(it.occupation_id);
    }
    return idx;
}

int ItemIndex::at(const std::string& occupation_id) const {
    auto it = position.find(occupation_id);
    if (it == position.end()) {
        throw ValidationError("unknown occupation id: " + occupation_id);
    }
    return it->second;
}

}  // namespace talentrec
