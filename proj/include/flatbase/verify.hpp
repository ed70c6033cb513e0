#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "flatbase/basechange.hpp"
#include "flatbase/rng.hpp"

namespace flatbase {

struct CheckRecord {
    std::string name;
    std::string anchor;
    bool pass = false;
    std::string details;
};

struct VerificationReport {
    std::string instance_id;
    std::uint64_t seed = 0;
    int depth = 3;
    bool overall = false;
    std::vector<CheckRecord> checks;
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    int depth = 3;
    int random_modules = 3;
};

using NamedModule = std::pair<std::string, ModulePresentation>;

/// Runs the whole identity suite for one flat map: certificate, truncation
/// isomorphisms, transport round trips, length formulas, Ext vanishing,
/// restriction and Matlis checks, and the power-structure comparison. A
/// non-flat map short-circuits into a single failed certificate record.
VerificationReport verify_instance(const RingMap& phi,
                                   const std::vector<NamedModule>& file_r_modules,
                                   const std::vector<NamedModule>& file_s_modules,
                                   const std::string& instance_id, const VerifyOptions& options);

}  // namespace flatbase
