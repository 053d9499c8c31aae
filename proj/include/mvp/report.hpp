#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace mvp {

using ordered_json = nlohmann::ordered_json;

// Outcome of one verification check. `residual` is empty when the check is
// exact (rational identity); otherwise it holds the numeric defect that was
// compared against the tolerance.
struct CheckReport {
    std::string check;
    ordered_json params = ordered_json::object();
    bool pass = false;
    std::string residual;

    ordered_json to_json() const {
        ordered_json j;
        j["check"] = check;
        j["params"] = params;
        j["status"] = pass ? "pass" : "fail";
        if (residual.empty())
            j["residual"] = nullptr;
        else
            j["residual"] = residual;
        return j;
    }
};

}  // namespace mvp
