#ifndef LW_DGA_HPP
#define LW_DGA_HPP

#include "lw/transfer.hpp"

namespace lw {

/// Product of restricted monomials: overflow above w is pulled out as a
/// ring coefficient, and anything clamping to symmetric degree >= d is
/// zero. Inputs must be bounded by w.
struct SymProduct {
    bool zero = true;
    Exp coeff;    // monomial exponent of psi(f^{overflow})
    Exp clamped;  // min(alpha+beta, w)
};
SymProduct sym_product(const Exp& alpha, const Exp& beta, const SetupConfig& cfg);

/// Product of two carrier labels: zero when some index with
/// alpha_i + beta_i >= w_i lies in sigma or tau, when the wedges
/// overlap, or when the symmetric part clamps away; otherwise the
/// signed wedge with the symmetric product's coefficient.
std::optional<std::pair<BasisLabel, Poly>> x_product_labels(const BasisLabel& x,
                                                            const BasisLabel& y,
                                                            const SetupConfig& cfg);

/// Bilinear multiplication table on a complex, stored on basis pairs.
struct ProductTable {
    const ComplexData* carrier = nullptr;
    std::map<std::tuple<int, int, int, int>, Element> entries;  // (kx,jx,ky,jy)
    int unit_degree = 0;
    int unit_index = 0;

    const Element* entry(int kx, int jx, int ky, int jy) const {
        auto it = entries.find({kx, jx, ky, jy});
        return it == entries.end() ? nullptr : &it->second;
    }
    /// bilinear extension; result lives in degree kx+ky
    Element product(int kx, const Element& x, int ky, const Element& y) const;
};

ProductTable x_product_table(const XComplex& X);

/// Transferred product on the resolution: p_inf(i_inf(x) . i_inf(y)),
/// tabulated on the resolution basis in kernel coordinates.
ProductTable transferred_product_table(const PerturbedRetract& pr);

/// One transferred product, computed map-free (results in kernel
/// coordinates of the resolution).
Element transferred_product(const PerturbedRetract& pr, int kx, const Element& x, int ky,
                            const Element& y);

struct LawReport {
    bool pass = true;
    std::string counterexample;
    long long pairs_checked = 0;

    void fail(std::string why) {
        if (pass) {
            pass = false;
            counterexample = std::move(why);
        }
    }
};

/// d(xy) = d(x) y + (-1)^|x| x d(y), exhaustive over basis pairs.
LawReport check_leibniz(const ComplexData& c, const ProductTable& prod);

/// associativity over triples, graded commutativity, odd squares, unit.
LawReport check_algebra_laws(const ComplexData& c, const ProductTable& prod);

/// The witness identity behind the generalized Leibniz rule: for every
/// carrier pair with nonzero product, the overflow set T and truncated
/// exponents make the scaled two-sided expansion match the homotopy of
/// the product exactly. Pairs with zero product are vacuous.
struct GenLeibnizReport {
    bool pass = true;
    std::string counterexample;
    long long nonzero_pairs = 0;
    long long vacuous_pairs = 0;
};
GenLeibnizReport check_generalized_leibniz(const SetupConfig& cfg);

/// Relabeling action of a permutation (1-based images) on carrier
/// elements; defined for configurations with constant w and e.
Element permute_element(const XComplex& X, int degree, const Element& x,
                        const std::vector<int>& pi);

/// For symmetric configurations: the transferred product commutes with
/// the permutation action on ambient expansions.
LawReport check_sn_equivariance(const PerturbedRetract& pr, const ProductTable& gprod);

/// Whether the perturbed homotopy correction annihilates products of
/// embedded basis elements, i.e. products of i_inf-images land exactly
/// inside the embedded resolution. This holds on unrestricted and many
/// restricted configurations but fails on others; the transferred DG
/// laws do not depend on it.
LawReport check_homotopy_annihilates_products(const PerturbedRetract& pr);

} // namespace lw

#endif
