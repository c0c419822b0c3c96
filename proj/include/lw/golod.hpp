#ifndef LW_GOLOD_HPP
#define LW_GOLOD_HPP

#include "lw/oracle.hpp"

namespace lw {

/// monomial exponent of z_tau = (prod_{t in tau} x_t^{e_t-1}) e_tau,
/// the Koszul-algebra lift of the wedge basis element f_tau
Exp koszul_lift_coeff(const IndexSet& tau, const SetupConfig& cfg);

/// phi^i_j(f_sigma) = sum over j-subsets tau of sigma of
/// shuffle_sign(tau,sigma) z_tau (x) f_{sigma\tau}; returned as
/// ((tau, sigma\tau), coefficient monomial, sign) triples.
struct PhiTerm {
    IndexSet tau;
    IndexSet rest;
    Exp coeff;
    int sign;
};
std::vector<PhiTerm> phi(int j, const IndexSet& sigma, const SetupConfig& cfg);

/// The tensor complex ((wedge^1.. (x) S_{d-1})_w, augmented by R at the
/// bottom) (x) K, the carrier of the explicit cycle lifts.
struct TensorComplex {
    struct TLabel {
        int wedge = 0;  // wedge degree of the strand part; 0 means R
        BasisLabel m;   // meaningful when wedge >= 1
        IndexSet tau;

        auto operator<=>(const TLabel&) const = default;
    };
    SetupConfig cfg;
    ComplexData cx;
    std::vector<std::vector<TLabel>> labels;
    std::vector<std::map<TLabel, int>> index;

    int find(int k, const TLabel& l) const {
        auto it = index[k].find(l);
        return it == index[k].end() ? -1 : it->second;
    }
};

TensorComplex build_tensor_complex(const SetupConfig& cfg);

/// The explicit cycle attached to f_sigma (x) f^alpha with |alpha|=d-1:
/// the alternating sum over phi levels, terminating in
/// psi(f^alpha) z_sigma. Throws when mdeg(f_sigma (x) f^alpha) exceeds
/// w or |alpha| != d-1.
Element lift_cycle(const TensorComplex& T, const IndexSet& sigma, const Exp& alpha);

/// One Koszul homology representative psi(f^alpha) z_sigma of the
/// quotient, with its provenance.
struct HomologyClass {
    int degree = 0;
    IndexSet sigma;
    Exp alpha;
    Exp coeff;      // monomial exponent of the representative coefficient
    bool chosen = false;  // member of the pruned spanning basis
};

struct KoszulHomology {
    SetupConfig cfg;

    explicit KoszulHomology(SetupConfig c) : cfg(std::move(c)) {}

    MonomialIdeal ideal;
    std::vector<int> dims;                            // dim H_i, i = 0..n
    std::vector<std::vector<HomologyClass>> classes;  // per degree, all candidates
    std::vector<const HomologyClass*> basis(int degree) const;
};

/// Computes dim H_i((R/I) (x) K) by the strand oracle, checks the
/// candidate representatives span, prunes greedily to a basis, and
/// asserts the dimensions match the resolution ranks. Throws on any
/// falsification.
KoszulHomology koszul_homology(const SetupConfig& cfg);

struct MasseyWitness {
    bool trivial = false;
    long long pairs_checked = 0;
    std::string offending_pair;
};

/// All pairwise products of representatives must vanish identically in
/// (R/I) (x) K; the zero Massey operation on longer tuples then
/// satisfies the defining equation with both sides zero.
MasseyWitness check_golod(const KoszulHomology& H);

/// Word label of the residue-field resolution: a Koszul factor and a
/// list of homology-class letters (indices into the chosen basis).
struct GolodWord {
    IndexSet tau;
    std::vector<int> letters;
    auto operator<=>(const GolodWord&) const = default;
};

struct GolodComplex {
    SetupConfig cfg;

    explicit GolodComplex(SetupConfig c) : cfg(std::move(c)) {}

    MonomialIdeal ideal;
    ComplexData cx;  // over R/I; entries are monomial lifts
    std::vector<std::vector<GolodWord>> words;
    std::vector<HomologyClass> letters;  // the chosen basis, degree >= 1
};

/// Truncation of the residue-field resolution over the quotient, with
/// the Koszul differential plus contraction of the leading letter.
GolodComplex golod_resolution(const SetupConfig& cfg, int max_deg);
GolodComplex golod_resolution(const KoszulHomology& H, int max_deg);

/// coefficients of (1+t)^n / (1 - sum_i dim H_i t^{i+1}) up to max_deg
std::vector<long long> poincare_coeffs(const std::vector<int>& h_dims, int n, int max_deg);

/// d^2 = 0 over the quotient: compositions reduce to zero mod I
std::optional<std::pair<int, int>> first_d_squared_failure_mod(const ComplexData& c,
                                                               const MonomialIdeal& I);

} // namespace lw

#endif
