#include "linfty/verdict.hpp"

#include <json.hpp>

namespace linfty {

std::string Verdict::text() const {
    std::string out;
    out += "check: " + check + "\n";
    out += std::string("pass: ") + (pass ? "true" : "false") + "\n";
    if (!pass) {
        out += "witness: " + witness + "\n";
        out += "lhs: " + lhs + "\n";
        out += "rhs: " + rhs + "\n";
    }
    out += "bounds: weight<=" + std::to_string(max_weight) +
           " arity<=" + std::to_string(max_arity) + "\n";
    for (const auto& [k, v] : details)
        out += k + ": " + v + "\n";
    return out;
}

std::string Verdict::json() const {
    nlohmann::json j;
    j["check"] = check;
    j["pass"] = pass;
    j["witness"] = pass ? nlohmann::json() : nlohmann::json(witness);
    if (!pass) {
        j["lhs"] = lhs;
        j["rhs"] = rhs;
    }
    j["bounds"] = {{"max_weight", max_weight}, {"max_arity", max_arity}};
    if (!details.empty()) {
        nlohmann::json d = nlohmann::json::object();
        for (const auto& [k, v] : details)
            d[k] = v;
        j["details"] = d;
    }
    return j.dump(2) + "\n";
}

}  // namespace linfty
