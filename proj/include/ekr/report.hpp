#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ekr/numeric.hpp"

namespace ekr {

using json = nlohmann::ordered_json;

/// Result of one verification check: machine-readable, stable field order.
/// `anchor` is the stable traceability id of the statement being checked
/// (e.g. "sec6:rank-M"), used to attribute CI failures.
struct CheckReport {
    std::string check;
    int n = 0;
    bool pass = true;
    std::string anchor;
    json witnesses = json::object();
    double ms = 0.0;

    void fail(const std::string& key, json value) {
        pass = false;
        witnesses[key] = std::move(value);
    }

    json to_json() const {
        json j;
        j["check"] = check;
        j["n"] = n;
        j["status"] = pass ? "pass" : "fail";
        j["anchor"] = anchor;
        j["witnesses"] = witnesses;
        j["timings"] = {{"ms", ms}};
        return j;
    }
};

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        const auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace ekr
