#include "wph/cli.hpp"

#include <iostream>

#ifndef WPH_DATA_DIR
#define WPH_DATA_DIR "data"
#endif

int main(int argc, char** argv) {
    wph::CliConfig cfg;
    cfg.golden_dir = WPH_DATA_DIR;
#ifdef WPH_FAULT_AGE_OFF_BY_ONE
    // Negative-test build: every age comes out one too high.
    cfg.pipelines.age = [](const wph::WeightTuple& w, std::int64_t k) {
        return wph::age_of(w.weights(), w.degree(), k) + 1;
    };
    cfg.pipelines.ages = [](const wph::WeightTuple& w) {
        std::vector<std::int64_t> counts(w.dim(), 0);
        for (auto k : wph::age_spectrum(w).strict_residues) {
            const auto a = wph::age_of(w.weights(), w.degree(), k) + 1;
            if (a <= static_cast<std::int64_t>(w.dim())) ++counts[static_cast<std::size_t>(a - 1)];
        }
        return counts;
    };
#endif
    return wph::run_cli(argc, argv, std::cout, std::cerr, cfg);
}
