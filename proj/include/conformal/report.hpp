#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace conformal {

// One verdict per named check; witness describes the first failing tuple.
struct CheckItem {
    std::string name;
    bool pass = false;
    std::string witness;
};

struct Report {
    std::string object;
    std::vector<CheckItem> items;

    void add(std::string name, bool pass, std::string witness = "") {
        items.push_back({std::move(name), pass, std::move(witness)});
    }
    void merge(const Report& o, const std::string& prefix = "") {
        for (const auto& it : o.items)
            items.push_back({prefix.empty() ? it.name : prefix + it.name, it.pass, it.witness});
    }
    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    bool passed(const std::string& name) const {
        for (const auto& it : items)
            if (it.name == name) return it.pass;
        return false;
    }
    int fail_count() const {
        int n = 0;
        for (const auto& it : items) n += it.pass ? 0 : 1;
        return n;
    }

    std::string text() const {
        std::ostringstream out;
        for (const auto& it : items) {
            out << (it.pass ? "[PASS] " : "[FAIL] ");
            if (!object.empty()) out << object << " :: ";
            out << it.name;
            if (!it.pass && !it.witness.empty()) out << " :: " << it.witness;
            out << "\n";
        }
        return out.str();
    }
};

} // namespace conformal
