#pragma once

#include <string>
#include <utility>
#include <vector>

namespace linfty {

// Outcome of a mathematical check. Deterministic for a given input and
// configuration: witnesses are the first failing monomial in canonical
// order, with both sides' values printed.
struct Verdict {
    std::string check;
    bool pass = true;
    std::string witness;
    std::string lhs;
    std::string rhs;
    int max_weight = 0;
    int max_arity = 0;
    std::vector<std::pair<std::string, std::string>> details;

    void fail(std::string witness_, std::string lhs_, std::string rhs_) {
        if (!pass)
            return;  // keep the first failure
        pass = false;
        witness = std::move(witness_);
        lhs = std::move(lhs_);
        rhs = std::move(rhs_);
    }
    void note(std::string key, std::string value) {
        details.emplace_back(std::move(key), std::move(value));
    }

    std::string text() const;
    std::string json() const;
};

}  // namespace linfty
