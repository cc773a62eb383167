#pragma once

// The acceptance suite: ten exact checks, each timed and reported on one line.

#include <string>
#include <vector>

#include "dhall/hall.hpp"
#include "json.hpp"

namespace dhall {

struct AcceptanceOptions {
    std::vector<Fp> primes{2, 3};
    HallConvention convention{};
    std::vector<int> only;  // criterion ids to run; empty runs all
};

struct CriterionResult {
    int id;
    std::string title;
    bool passed = false;
    double seconds = 0;
    std::string detail;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);
std::string format_result(const CriterionResult& r);
nlohmann::json acceptance_to_json(const std::vector<CriterionResult>& results, const AcceptanceOptions& options);

}  // namespace dhall
