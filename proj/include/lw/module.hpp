#ifndef LW_MODULE_HPP
#define LW_MODULE_HPP

#include <map>
#include <string>
#include <vector>

#include "lw/combinat.hpp"
#include "lw/poly.hpp"

namespace lw {

/// Basis label f_sigma (x) f^alpha of a wedge-times-symmetric module.
struct BasisLabel {
    IndexSet sigma;
    Exp alpha;

    /// formal multidegree: indicator of sigma plus alpha
    Exp mdeg() const {
        Exp m = alpha;
        for (int s : sigma) m[s - 1] += 1;
        return m;
    }
    auto operator<=>(const BasisLabel&) const = default;
    std::string str() const;
};

/// A labeled free module: printable names plus the ring multidegree of
/// each basis element. Everything downstream (strand fibers, minimality,
/// Betti tables) only needs these two vectors.
struct ModuleSpec {
    std::vector<std::string> names;
    std::vector<Exp> ring_mdeg;

    int rank() const { return int(names.size()); }
    void push(std::string name, Exp mdeg) {
        names.push_back(std::move(name));
        ring_mdeg.push_back(std::move(mdeg));
    }
};

/// Sparse element of a labeled free module: basis index -> coefficient.
/// No zero polynomials are stored.
using Element = std::map<int, Poly>;

struct LinMap;
LinMap scale_map(const Scalar& c, const LinMap& f);

void elem_add(Element& a, int idx, const Poly& q);
void elem_add(Element& a, const Element& b);
void elem_sub(Element& a, const Element& b);
Element elem_scale(const Poly& q, const Element& x);
Element elem_scale(const Scalar& c, const Element& x);
bool elem_is_zero(const Element& x);
std::string elem_str(const Element& x, const ModuleSpec& mod);

/// Basis-indexed map between labeled free modules, stored by columns.
struct LinMap {
    int src_rank = 0;
    int tgt_rank = 0;
    std::vector<Element> cols;

    LinMap() = default;
    LinMap(int src, int tgt) : src_rank(src), tgt_rank(tgt), cols(src) {}

    Element apply(const Element& x) const {
        Element out;
        for (const auto& [j, q] : x) {
            for (const auto& [i, c] : cols.at(j)) elem_add(out, i, q * c);
        }
        return out;
    }
    bool is_zero() const {
        for (const auto& c : cols)
            if (!elem_is_zero(c)) return false;
        return true;
    }
    friend LinMap compose(const LinMap& f, const LinMap& g) {
        LinMap r(g.src_rank, f.tgt_rank);
        for (int j = 0; j < g.src_rank; ++j) r.cols[j] = f.apply(g.cols[j]);
        return r;
    }
    friend LinMap operator+(const LinMap& f, const LinMap& g) {
        LinMap r(f.src_rank, f.tgt_rank);
        for (int j = 0; j < f.src_rank; ++j) {
            r.cols[j] = f.cols[j];
            elem_add(r.cols[j], g.cols[j]);
        }
        return r;
    }
    friend LinMap operator-(const LinMap& f) { return scale_map(Scalar(-1), f); }
    friend bool operator==(const LinMap& f, const LinMap& g) {
        return f.src_rank == g.src_rank && f.tgt_rank == g.tgt_rank && f.cols == g.cols;
    }
};

LinMap zero_map(int src, int tgt);

/// Exact dense matrix over the active field.
struct DenseMatrix {
    int rows = 0, cols = 0;
    std::vector<Scalar> a;

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c) {}
    Scalar& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
    const Scalar& at(int r, int c) const { return a[std::size_t(r) * cols + c]; }
};

/// Row-reduce in place to reduced row echelon form; returns pivot
/// columns in order.
std::vector<int> rref(DenseMatrix& m);

int rank_of(DenseMatrix m);

/// Kernel basis from RREF free columns: one vector per non-pivot
/// column, with entry +1 at its free column. Columns index the source.
std::vector<std::vector<Scalar>> kernel_basis(DenseMatrix m);

/// Exact Gaussian-elimination kernel of an mdeg-homogeneous map with
/// scalar coefficients, computed fiber by fiber over the formal
/// multidegrees of the source labels. Basis vectors are homogeneous and
/// deterministically ordered (fiber mdeg, then free column).
///
/// Throws if a column mixes multidegrees or carries non-scalar
/// coefficients.
std::vector<Element> kernel_by_multidegree(const LinMap& f, const std::vector<Exp>& src_mdeg,
                                           const std::vector<Exp>& tgt_mdeg);

/// Repeated exact solves against a fixed spanning set of scalar
/// vectors: expresses targets as linear combinations of the generators.
class SolveContext {
  public:
    SolveContext() = default;
    SolveContext(const std::vector<Element>& gens, int ambient_rank);

    int generator_count() const { return k_; }

    /// coordinates of a scalar vector in the generators; nullopt when
    /// the target is outside their span
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& target) const;

    /// polynomial-coefficient version, solved monomial by monomial
    std::optional<Element> solve_element(const Element& target) const;

  private:
    int k_ = 0, n_ = 0;
    DenseMatrix red_;                        // echelon form of generator rows
    std::vector<std::vector<Scalar>> comb_;  // red_ rows as combinations of inputs
    std::vector<int> pivot_col_;
};

} // namespace lw

#endif
