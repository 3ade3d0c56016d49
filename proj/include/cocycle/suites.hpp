#pragma once

// Invariant suites run by `verify`. Each check counts the instances it examined and the ones that
// failed; the first failure is kept as a diagnostic.

#include <cstdint>
#include <string>
#include <vector>

#include "cocycle/obstruction.hpp"

namespace cocycle {

struct SuiteCheck {
    std::string module;
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string first_failure;

    bool ok() const { return failed == 0 && checked > 0; }
};

// Module names as in the README: core-algebra, bar-cohomology, groupoid-cohomology,
// modular-obstruction, flow-model, cli. The cli suite lives with the tool; here it is skipped.
const std::vector<std::string>& suite_names();
std::vector<SuiteCheck> run_suite(const std::string& module, std::uint64_t seed);

// Homomorphisms G -> (1/12)Z/Z with denominators <= max_den.
std::vector<ModulusMap> small_moduli(const FiniteGroup& g, std::int64_t max_den);
// G in {Z_4, Z_2xZ_2, Z_6}, every central N and every m of denominator <= 4 vanishing on N.
struct NamedSetup {
    std::string label;
    ModulusSetup setup;
};
std::vector<NamedSetup> standard_setups();

}  // namespace cocycle
