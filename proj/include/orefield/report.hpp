/*
   Copyright 2026 The orefield Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef OREFIELD_REPORT_HPP
#define OREFIELD_REPORT_HPP

// Check results and their deterministic rendering.

#include <algorithm>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace orefield {

enum class Status { Pass, Fail, Skipped };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Pass:
            return "pass";
        case Status::Fail:
            return "fail";
        case Status::Skipped:
            return "skipped";
    }
    return "fail";
}

struct Check {
    std::string name;
    Status status = Status::Pass;
    std::string details;
    /// The mathematical statement the check exercises.
    std::string reference;

    bool passed() const { return status != Status::Fail; }
};

inline Check make_check(std::string name, bool ok, std::string details, std::string reference) {
    return {std::move(name), ok ? Status::Pass : Status::Fail, std::move(details), std::move(reference)};
}

class Report {
   public:
    void add(Check c) { checks_.push_back(std::move(c)); }
    void add_all(const std::vector<Check>& cs) {
        for (const auto& c : cs) checks_.push_back(c);
    }
    bool all_passed() const {
        return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed(); });
    }
    /// Sorted by name; ties keep insertion order.
    std::vector<Check> sorted() const {
        auto out = checks_;
        std::stable_sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
        return out;
    }
    const std::vector<Check>& checks() const { return checks_; }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& c : sorted()) {
            nlohmann::ordered_json j;
            j["check-name"] = c.name;
            j["status"] = status_name(c.status);
            j["details"] = c.details;
            j["paper-ref"] = c.reference;
            arr.push_back(std::move(j));
        }
        nlohmann::ordered_json doc;
        doc["passed"] = all_passed();
        doc["checks"] = std::move(arr);
        return doc;
    }
    std::string to_text() const {
        std::string out;
        for (const auto& c : sorted()) {
            out += std::string(status_name(c.status)) + "  " + c.name;
            if (!c.details.empty()) out += "  " + c.details;
            out += "\n";
        }
        return out;
    }

   private:
    std::vector<Check> checks_;
};

}  // namespace orefield

#endif  // OREFIELD_REPORT_HPP
