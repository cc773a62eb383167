// Runs the acceptance suite and prints one line per criterion.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "acceptance.hpp"

int main(int argc, char** argv) {
    CLI::App app{"dhall acceptance suite"};
    dhall::AcceptanceOptions options;
    bool flip = false;
    std::string out;
    app.add_option("--primes", options.primes, "field sizes to specialize q^2 at")->delimiter(',');
    app.add_option("--only", options.only, "criterion ids to run")->delimiter(',');
    app.add_flag("--flip-suspension", flip, "negative control: suspend in the wrong direction");
    app.add_option("--out", out, "write the JSON summary here");
    CLI11_PARSE(app, argc, argv);
    if (flip) options.convention.suspension_shift = -options.convention.suspension_shift;

    auto results = dhall::run_acceptance(options);
    bool all = true;
    for (const auto& r : results) {
        std::cout << dhall::format_result(r) << "\n";
        all = all && r.passed;
    }
    if (options.primes.size() < 2) std::cout << "note: one specialization only, reduced confidence\n";
    if (!out.empty()) std::ofstream(out) << dhall::acceptance_to_json(results, options).dump(2) << "\n";
    return all ? 0 : 3;
}
