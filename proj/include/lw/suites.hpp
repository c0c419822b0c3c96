#ifndef LW_SUITES_HPP
#define LW_SUITES_HPP

#include "lw/dga.hpp"
#include "lw/golod.hpp"

namespace lw {

/// One named property suite over a configuration grid. Corrupt modes
/// run the suite against a deliberately broken fixture; the suite is
/// then expected to fail with a located counterexample.
enum class Corruption { none, deleted_kernel_vector, flipped_perturbation, flipped_product_sign,
                        scaled_representative };

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::vector<std::string> lines;  // one per config/check, human readable
    std::string counterexample;

    void record(const std::string& line, bool ok, const std::string& why = "") {
        lines.push_back(std::string(ok ? "pass  " : "FAIL  ") + line +
                        (ok || why.empty() ? "" : "  [" + why + "]"));
        if (!ok) {
            pass = false;
            if (counterexample.empty()) counterexample = why.empty() ? line : why;
        }
    }
};

std::vector<SetupConfig> grid_resolution();
std::vector<SetupConfig> grid_retract();
std::vector<SetupConfig> grid_dga();
std::vector<SetupConfig> grid_golod();

/// Theorem-level certification of the resolution over the grid:
/// composition, minimality, box exactness, quotient match, tableau
/// counts, and the row/column exactness of the underlying double
/// complex.
SuiteResult suite_resolution(const std::vector<SetupConfig>& grid,
                             Corruption corrupt = Corruption::none);

/// The homotopy identities h^2 = 0 and kappa h + h kappa = 1 on every
/// restricted piece (a,b) != (0,0) with b <= d.
SuiteResult suite_homotopy(const std::vector<SetupConfig>& grid);

/// Special-retract identities before and after perturbation, the
/// transferred differential against the independently built resolution,
/// and the closed form of the perturbed inclusion.
SuiteResult suite_retract(const std::vector<SetupConfig>& grid,
                          Corruption corrupt = Corruption::none);

/// DG-algebra laws for the carrier product and the transferred product,
/// the generalized Leibniz witness identity, and symmetric-group
/// equivariance where applicable.
SuiteResult suite_dga(const std::vector<SetupConfig>& grid,
                      Corruption corrupt = Corruption::none);

/// Koszul homology cycles, product triviality, and the residue-field
/// resolution up to the given degree.
SuiteResult suite_golod(const std::vector<SetupConfig>& grid, int max_deg = 5,
                        Corruption corrupt = Corruption::none);

/// expected homology pattern of the double complex rows (kappa lines)
SuiteResult check_bicomplex_exactness(const SetupConfig& cfg);

} // namespace lw

#endif
