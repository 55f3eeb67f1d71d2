#ifndef WORDREP_GUARD_WORDREP_REPRO_HH
#define WORDREP_GUARD_WORDREP_REPRO_HH 1

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace wordrep
{
    struct ReproOptions
    {
        std::uint64_t solver_budget = 2'000'000;
        std::uint64_t oracle_budget = 20'000'000;
        unsigned jobs = 1;
        std::ostream * log = nullptr; ///< progress lines, if set
    };

    struct StageResult
    {
        std::string name;
        bool passed = false;
        std::string detail;
        double seconds = 0.0;
    };

    /// The full reproduction pipeline: S(n, 2) colourings for n = 1..10; W5 and S(2, 3) by solver and
    /// oracle; the bundled witness trace parsed, verified, extracted, embedded into S(3, 3) with anchors
    /// 1=102 and 2=210, re-verified against the induced image and solved independently.
    auto run_repro(const ReproOptions & options = {}) -> std::vector<StageResult>;
}

#endif
