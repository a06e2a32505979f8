#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace pact {

/// One broken rule together with the smallest witness found for it.
struct Violation {
    std::string rule;
    std::string witness;
};

/// Outcome of a structural check: empty means every rule held. Checkers keep
/// only the first witness per rule so reports stay small and deterministic.
class Report {
public:
    bool pass() const { return violations_.empty(); }
    const std::vector<Violation>& violations() const { return violations_; }

    void add(std::string rule, std::string witness) {
        violations_.push_back({std::move(rule), std::move(witness)});
    }

    /// Records the first witness for a rule and ignores later ones.
    void add_once(const std::string& rule, const std::string& witness) {
        if (!has(rule)) add(rule, witness);
    }

    bool has(const std::string& rule) const {
        for (const auto& v : violations_)
            if (v.rule == rule) return true;
        return false;
    }

    const Violation* find(const std::string& rule) const {
        for (const auto& v : violations_)
            if (v.rule == rule) return &v;
        return nullptr;
    }

    void merge(const Report& other) {
        for (const auto& v : other.violations_) violations_.push_back(v);
    }

    std::string summary() const {
        if (pass()) return "pass";
        std::ostringstream os;
        for (std::size_t k = 0; k < violations_.size(); ++k) {
            if (k) os << "; ";
            os << violations_[k].rule << " at " << violations_[k].witness;
        }
        return os.str();
    }

private:
    std::vector<Violation> violations_;
};

}  // namespace pact
