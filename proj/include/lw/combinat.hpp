#ifndef LW_COMBINAT_HPP
#define LW_COMBINAT_HPP

#include <optional>

#include "lw/expvec.hpp"
#include "lw/field.hpp"

namespace lw {

/// Strictly increasing subset of {1..n}, the index set of a wedge basis
/// element.
using IndexSet = std::vector<int>;

/// (-1)^{k-1} where r is the k-th smallest element of sigma. Throws if
/// r is not a member.
int koszul_sign(int r, const IndexSet& sigma);

/// Sign of the permutation sorting the concatenation (tau, sigma\tau)
/// into ascending order, for tau a subset of sigma. Throws if tau is
/// not contained in sigma.
///
/// The concatenation order is a convention; the cycle-lift tests pin it
/// (see shuffle_sign_alt for the other reading).
int shuffle_sign(const IndexSet& tau, const IndexSet& sigma);

/// Alternative convention: sort (sigma\tau, tau) instead.
int shuffle_sign_alt(const IndexSet& tau, const IndexSet& sigma);

bool is_subset(const IndexSet& tau, const IndexSet& sigma);
IndexSet set_minus(const IndexSet& sigma, const IndexSet& tau);
IndexSet set_minus(const IndexSet& sigma, int r);

/// f_r wedge f_sigma as (sign, sorted set); nullopt when r already lies
/// in sigma.
std::optional<std::pair<int, IndexSet>> wedge_insert(int r, const IndexSet& sigma);

/// f_sigma wedge f_tau as (sign, sorted union); nullopt on overlap.
std::optional<std::pair<int, IndexSet>> wedge_merge(const IndexSet& sigma, const IndexSet& tau);

/// All subsets of sigma of size k, in lexicographic order.
std::vector<IndexSet> subsets_of(const IndexSet& sigma, int k);

/// Ambient data shared by every construction: n generators f_1..f_n
/// with psi(f_i) = x_i^{e_i}, the power d, the restriction vector w,
/// and the coefficient field.
struct SetupConfig {
    int n = 0;
    int d = 0;
    Exp w;
    Exp e;
    FieldCfg field;

    SetupConfig(int n_, int d_, Exp w_, Exp e_ = Exp{}, FieldCfg f = FieldCfg::rationals());

    /// ring multidegree of a formal multidegree: entry i scaled by e_i
    Exp ring_mdeg(const Exp& formal) const { return scale(formal, e); }

    /// psi(f^alpha) = prod x_i^{e_i alpha_i} as a monomial exponent
    Exp psi_exp(const Exp& alpha) const { return scale(alpha, e); }
};

/// All alpha with |alpha| = d and alpha <= w, lexicographic order.
/// The lattice points of the restricted dilated simplex.
std::vector<Exp> restricted_exponents(const SetupConfig& cfg);

/// Hook-shaped semistandard tableau: arm = first row (b weakly
/// increasing entries), leg = the a entries below the first box. The
/// first column (arm[0], leg...) increases strictly.
struct HookTableau {
    std::vector<int> arm;
    std::vector<int> leg;

    Exp content(int n) const {
        Exp c(n);
        for (int x : arm) c[x - 1] += 1;
        for (int x : leg) c[x - 1] += 1;
        return c;
    }
    auto operator<=>(const HookTableau&) const = default;
    std::string str() const;
};

/// All hook SSYT with first row length b, first column length a+1,
/// entries in 1..n, and content bounded by w. Deterministic order.
std::vector<HookTableau> hook_ssyt(int a, int b, const SetupConfig& cfg);

long long binomial(int n, int k);

} // namespace lw

#endif
