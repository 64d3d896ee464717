#pragma once

// The acceptance suites, shared by the command-line tool and the acceptance
// binary. Each suite counts exact checks per root system.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nsmac/klbases.hpp"

namespace nsmac {

// Engines per root system, built on first use and kept for later suites so
// that cached polynomials are shared.
class Workbench {
public:
    struct Entry {
        RootSystemData R;
        std::unique_ptr<MacdonaldEngine> M;
        std::unique_ptr<KLEngine> K;       // independent parameters
        std::unique_ptr<KLEngine> K_equal;  // t_s = t_l
    };
    Entry& get(const std::string& system);

private:
    std::map<std::string, std::unique_ptr<Entry>> entries_;
};

struct SuiteOptions {
    int radius = 2;           // weight box |coords| <= radius
    int relation_radius = 3;  // monomial basis for the relation suite
    int64_t truncation = 6;   // D for the q-pairing
    int random_elements = 200;
    uint64_t seed = 20240601;
    // Progress lines go here when set.
    std::function<void(const std::string&)> log;
};

struct SystemTally {
    std::string system;
    int64_t passed = 0;
    int64_t failed = 0;
    std::vector<std::string> failures;  // first few, for the report
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what);
};

struct SuiteResult {
    int criterion = 0;
    std::string name;
    std::vector<SystemTally> systems;

    int64_t passed() const;
    int64_t failed() const;
    bool ok() const { return failed() == 0 && passed() > 0; }
};

// Suite names in criterion order: polynomiality, eigenvalue, intertwiner,
// kappa, standard_basis, demazure, orthogonality, kl, zero_hecke, relations,
// combinatorics.
const std::vector<std::string>& suite_names();
// The systems a suite targets by default.
std::vector<std::string> default_systems(const std::string& suite);

// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(Workbench& wb, const std::string& suite, const std::vector<std::string>& systems,
                      const SuiteOptions& opt);

}  // namespace nsmac
