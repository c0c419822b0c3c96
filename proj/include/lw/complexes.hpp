#ifndef LW_COMPLEXES_HPP
#define LW_COMPLEXES_HPP

#include <optional>

#include "lw/module.hpp"

namespace lw {

/// Finite complex of labeled free modules. diffs[k] maps degree k to
/// degree k-1 (k >= 1); diffs[0] is an empty placeholder so indices
/// line up with degrees.
struct ComplexData {
    std::vector<ModuleSpec> mods;
    std::vector<LinMap> diffs;

    int top() const { return int(mods.size()) - 1; }
    int rank(int k) const { return (k >= 0 && k <= top()) ? mods[k].rank() : 0; }
    std::vector<int> ranks() const {
        std::vector<int> r;
        for (const auto& m : mods) r.push_back(m.rank());
        return r;
    }
    /// ranks with trailing zero modules dropped
    std::vector<int> trimmed_ranks() const {
        std::vector<int> r = ranks();
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

/// first (degree, source column) where consecutive differentials fail
/// to compose to zero
std::optional<std::pair<int, int>> first_d_squared_failure(const ComplexData& c);

/// first (degree, column, row) carrying a nonzero constant term in a
/// differential entry
std::optional<std::tuple<int, int, int>> first_unit_entry(const ComplexData& c);

/// checks every differential entry is a single monomial matching the
/// ring-multidegree difference of its labels; returns a description of
/// the first offender
std::optional<std::string> first_inhomogeneous_entry(const ComplexData& c);

/// One restricted piece (wedge^a (x) S_b)_w with its labels in
/// deterministic order and an index for lookups.
struct WedgeSymModule {
    int a = 0, b = 0;
    std::vector<BasisLabel> labels;
    std::map<BasisLabel, int> index;
    ModuleSpec spec;

    int rank() const { return int(labels.size()); }
};

WedgeSymModule restricted_module(int a, int b, const SetupConfig& cfg);

/// Label-level maps. Each returns (target label, coefficient) pairs;
/// targets automatically satisfy the multidegree bound.
std::vector<std::pair<BasisLabel, Poly>> kappa_terms(const BasisLabel& x, const SetupConfig& cfg);
std::vector<std::pair<BasisLabel, Poly>> kos_terms(const BasisLabel& x, const SetupConfig& cfg);
std::vector<std::pair<BasisLabel, Poly>> derham_terms(const BasisLabel& x, const SetupConfig& cfg);

/// Matrix forms between restricted pieces.
LinMap kappa(int a, int b, const SetupConfig& cfg);       // (a,b) -> (a-1,b+1)
LinMap kos_tensor(int a, int b, const SetupConfig& cfg);  // (a,b) -> (a-1,b)
LinMap derham_h(int a, int b, const SetupConfig& cfg);    // (a,b) -> (a+1,b-1)

/// The restricted double complex: pieces (a,b) for 0 <= a <= n,
/// 0 <= b <= d-1, horizontal kappa (dropped where it would leave the
/// truncation) and vertical Koszul action.
struct BicomplexData {
    SetupConfig cfg;
    std::map<std::pair<int, int>, WedgeSymModule> mods;
    std::map<std::pair<int, int>, LinMap> horiz;  // (a,b) -> (a-1,b+1)
    std::map<std::pair<int, int>, LinMap> vert;   // (a,b) -> (a-1,b)

    explicit BicomplexData(SetupConfig c) : cfg(std::move(c)) {}
    const WedgeSymModule& at(int a, int b) const { return mods.at({a, b}); }
};

BicomplexData build_bicomplex(const SetupConfig& cfg);

/// verifies horiz^2 = 0, vert^2 = 0 and anticommutation on every square
std::optional<std::string> bicomplex_square_failure(const BicomplexData& B);

/// Totalization of the restricted double complex: degree = wedge
/// degree, differential horizontal minus vertical. Keeps the label
/// bookkeeping and the per-degree pieces of both differentials plus the
/// contracting homotopy.
struct XComplex {
    SetupConfig cfg;
    ComplexData cx;                               // differential kappa - vert
    std::vector<std::vector<BasisLabel>> labels;  // per degree
    std::vector<std::map<BasisLabel, int>> index;
    std::vector<LinMap> kap;   // degree k -> k-1, kappa component
    std::vector<LinMap> vert;  // degree k -> k-1, Koszul component
    std::vector<LinMap> h;     // degree k -> k+1, scaled de Rham homotopy

    int top() const { return cx.top(); }
    int find(int k, const BasisLabel& l) const {
        auto it = index[k].find(l);
        return it == index[k].end() ? -1 : it->second;
    }
    Element embed(int k, const std::vector<std::pair<BasisLabel, Poly>>& terms) const;
};

XComplex totalize(const BicomplexData& B);
XComplex build_x_complex(const SetupConfig& cfg);

/// Kernel of kappa on the ambient piece (a,d): echelon basis plus a
/// solver for re-expressing elements in that basis.
struct KernelSpace {
    WedgeSymModule ambient;
    std::vector<Element> basis;  // scalar coordinates in ambient labels
    std::vector<Exp> basis_mdeg;
    SolveContext solver;

    int rank() const { return int(basis.size()); }
};

KernelSpace kernel_space(int a, const SetupConfig& cfg);

/// The resolution of R modulo the restricted power: degree 0 is R,
/// degree 1 the restricted power generators, degree a+1 the kernel
/// L^a. Differentials are psi at the bottom and the Koszul action
/// re-expressed in the kernel bases above.
struct LComplex {
    SetupConfig cfg;
    ComplexData cx;
    std::vector<KernelSpace> kernels;  // index a = 0..n-1; kernels[0] trivial
    MonomialIdeal ideal;

    /// ambient expansion of a degree-k coordinate element (k >= 1)
    Element to_ambient(int k, const Element& coords) const;
};

LComplex build_l_complex(const SetupConfig& cfg);

MonomialIdeal restricted_power_ideal(const SetupConfig& cfg);

/// Koszul complex on the ring variables, resolving the residue field.
struct KoszulComplex {
    SetupConfig cfg;
    ComplexData cx;
    std::vector<std::vector<IndexSet>> labels;
    std::vector<std::map<IndexSet, int>> index;

    int find(int k, const IndexSet& tau) const {
        auto it = index[k].find(tau);
        return it == index[k].end() ? -1 : it->second;
    }
};

KoszulComplex koszul_complex(const SetupConfig& cfg);

} // namespace lw

#endif
