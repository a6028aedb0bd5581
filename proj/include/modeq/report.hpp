#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace modeq {

/// One checked statement. Informational conditions are recorded (usually
/// printed formulas that disagree with the computed matrices) but never
/// decide whether a report passes.
struct Condition {
    std::string label;
    bool ok = false;
    std::string detail;
    bool informational = false;
};

struct Report {
    std::string name;
    std::vector<Condition> conditions;

    void check(std::string label, bool ok, std::string detail = {})
    {
        conditions.push_back({std::move(label), ok, std::move(detail), false});
    }

    void note(std::string label, bool ok, std::string detail = {})
    {
        conditions.push_back({std::move(label), ok, std::move(detail), true});
    }

    bool passed() const
    {
        return std::all_of(conditions.begin(), conditions.end(),
                           [](const Condition& c) { return c.informational || c.ok; });
    }

    const Condition* find(const std::string& label) const
    {
        for (const auto& c : conditions)
            if (c.label == label) return &c;
        return nullptr;
    }
};

inline std::ostream& operator<<(std::ostream& out, const Report& r)
{
    out << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : r.conditions) {
        out << "  [" << (c.informational ? "note" : (c.ok ? " ok " : "FAIL")) << "] " << c.label;
        if (c.informational) out << (c.ok ? " (holds)" : " (does not hold)");
        if (!c.detail.empty()) out << ": " << c.detail;
        out << "\n";
    }
    return out;
}

} // namespace modeq
