#ifndef LW_ORACLE_HPP
#define LW_ORACLE_HPP

#include <functional>

#include "lw/complexes.hpp"

namespace lw {

/// Finite certification region: all ring multidegrees m with
/// 0 <= m <= upper, componentwise.
struct StrandBox {
    Exp upper;

    long long volume() const {
        long long v = 1;
        for (int x : upper.v) v *= (x + 1);
        return v;
    }
};

/// componentwise max of label multidegrees across the complex, padded
/// by d*e; the certificate only covers this region
StrandBox default_box(const ComplexData& c, const SetupConfig& cfg);

/// Strand-ready form of a complex: per differential, the scalar
/// obtained from each (monomial) entry once its multidegree shift has
/// been validated. Fiber matrices at any strand are selections of these
/// scalars.
class StrandEngine {
  public:
    StrandEngine(const ComplexData& c, const MonomialIdeal* quotient = nullptr);

    /// homology dimensions per degree 0..top at one multidegree
    std::vector<int> homology_at(const Exp& m) const;

    /// sum of strand homology over the box
    std::vector<long long> total_homology(const StrandBox& box) const;

    /// first strand in the box with nonzero homology in a degree range
    std::optional<std::pair<Exp, int>> first_nonexact(const StrandBox& box, int lo_degree,
                                                      int hi_degree) const;

    /// first strand where H_0 differs from the expected dimension
    std::optional<Exp> first_h0_mismatch(const StrandBox& box,
                                         const std::function<int(const Exp&)>& expected) const;

    int top() const { return int(active_mdeg_.size()) - 1; }

  private:
    struct Entry {
        int src, tgt;
        Scalar c;
    };
    std::vector<std::vector<Entry>> entries_;     // per degree k >= 1
    std::vector<std::vector<Exp>> active_mdeg_;   // per degree, per label
    const MonomialIdeal* quotient_;
    Exp clamp_bound_;
    mutable std::map<Exp, std::vector<int>> memo_;  // only used without quotient

    std::vector<int> compute_at(const Exp& m) const;
};

std::vector<int> strand_homology(const ComplexData& c, const Exp& m,
                                 const MonomialIdeal* I = nullptr);

struct ResolutionReport {
    bool d2_ok = false;
    bool minimal = false;
    bool exact = false;   // strands vanish in degrees >= 1 over the box
    bool h0_ok = false;   // strand H0 matches R/I over the box
    std::string counterexample;
    StrandBox box;
    std::vector<int> ranks;

    bool pass() const { return d2_ok && minimal && exact && h0_ok; }
};

/// Certifies a candidate resolution of R/I at desk scale: composition,
/// minimality, box-strand exactness in degrees >= 1, and H0 agreement
/// with the quotient. The verdict covers only the box.
ResolutionReport verify_resolution(const ComplexData& c, const SetupConfig& cfg,
                                   const MonomialIdeal& I,
                                   std::optional<StrandBox> box = std::nullopt);

struct BettiTable {
    std::vector<int> ranks;
    std::map<std::pair<int, Exp>, int> graded;
};

BettiTable betti_table(const ComplexData& c);

} // namespace lw

#endif
