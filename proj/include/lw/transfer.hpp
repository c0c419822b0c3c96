#ifndef LW_TRANSFER_HPP
#define LW_TRANSFER_HPP

#include <memory>

#include "lw/complexes.hpp"

namespace lw {

/// Degree-indexed map families between the big complex F (the
/// totalization carrier) and the small complex G (the resolution
/// modules). dF/dG have degree -1, h degree +1, i goes G -> F and p
/// goes F -> G.
struct RetractMaps {
    std::vector<LinMap> dF, dG, i, p, h;
};

/// Special deformation retract data. The convention verified
/// throughout: p i = 1, 1 - i p = dF h + h dF, h i = 0, p h = 0,
/// h h = 0, with i and p chain maps.
struct RetractData {
    SetupConfig cfg;
    std::shared_ptr<XComplex> X;
    std::shared_ptr<LComplex> L;
    RetractMaps maps;

    explicit RetractData(SetupConfig c) : cfg(std::move(c)) {}
};

/// The retract to be perturbed: F is the carrier with the horizontal
/// differential only, G the resolution modules with zero differential,
/// h the scaled de Rham homotopy, i the homotopy on kernel elements and
/// p the horizontal map back. The kernel-column legs of i and p carry
/// an extra -1 so the perturbed bottom map comes out as +psi.
RetractData unperturbed_retract(const SetupConfig& cfg);

struct PerturbedRetract {
    SetupConfig cfg;
    std::shared_ptr<XComplex> X;
    std::shared_ptr<LComplex> L;
    RetractMaps maps;        // i_inf, p_inf, h_inf, dF_inf, dG_inf
    std::vector<LinMap> A;   // (1 - delta h)^{-1} delta, per degree

    explicit PerturbedRetract(SetupConfig c) : cfg(std::move(c)) {}
};

/// Homological perturbation: A is computed as the finite alternating
/// Neumann sum sum_k (-delta h)^k delta, which must terminate within
/// n+d steps; the perturbed maps are i - hAi, p - pAh, h - hAh,
/// dF + delta, dG + pAi, the closed formulas matching the convention
/// 1 - ip = dF h + h dF. Throws if delta is not a perturbation of dF
/// or the sum fails to terminate.
PerturbedRetract perturb(const RetractData& r, const std::vector<LinMap>& delta);

/// The nominal perturbation for the transfer: minus the vertical
/// Koszul differential. sign = -1 reproduces it; the parameter exists
/// so the suite can pin the convention.
std::vector<LinMap> koszul_perturbation(const XComplex& X, int sign = -1);

struct RetractCheck {
    std::string name;
    bool pass = false;
    std::string counterexample;
};

struct RetractReport {
    std::vector<RetractCheck> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const RetractCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

/// Exhaustive verification of the five special-retract identities, the
/// chain-map conditions, and that both differentials square to zero.
RetractReport verify_retract(const RetractMaps& maps, const std::vector<ModuleSpec>& modsF,
                             const std::vector<ModuleSpec>& modsG);

/// Closed form of the perturbed inclusion on kernel elements:
/// the geometric series u * (1 - h(Kos(x)1))^{-1} h with u = -1.
/// Used to confirm the engine's i_inf.
std::vector<LinMap> closed_form_i_inf(const RetractData& r);

} // namespace lw

#endif
