#ifndef LW_POLY_HPP
#define LW_POLY_HPP

#include <algorithm>
#include <map>

#include "lw/expvec.hpp"
#include "lw/field.hpp"

namespace lw {

/// Sparse multivariate polynomial over the active field. Terms map a
/// monomial exponent vector to a nonzero scalar; zero coefficients are
/// never stored.
class Poly {
  public:
    Poly() = default;
    static Poly zero() { return Poly(); }
    static Poly constant(std::size_t n, const Scalar& c) {
        Poly p;
        if (!c.is_zero()) p.terms_[Exp(n)] = c;
        return p;
    }
    static Poly monomial(const Exp& m, const Scalar& c = Scalar(1)) {
        Poly p;
        if (!c.is_zero()) p.terms_[m] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exp, Scalar>& terms() const { return terms_; }

    /// single-term access; throws unless the polynomial is one monomial
    std::pair<Exp, Scalar> single_term() const {
        if (terms_.size() != 1) throw std::logic_error("poly is not a single term");
        return *terms_.begin();
    }

    Scalar coeff(const Exp& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar(0) : it->second;
    }
    Scalar constant_term() const {
        return terms_.empty() ? Scalar(0) : coeff(Exp(terms_.begin()->first.size()));
    }

    void add_term(const Exp& m, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
        return r;
    }
    friend Poly operator*(const Scalar& c, const Poly& p) {
        Poly r;
        for (const auto& [m, cc] : p.terms_) r.add_term(m, c * cc);
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& vars = {}) const;

  private:
    std::map<Exp, Scalar> terms_;
};

/// Monomial ideal given by its minimal generating exponents: no stored
/// generator divides another.
class MonomialIdeal {
  public:
    MonomialIdeal() = default;
    explicit MonomialIdeal(std::vector<Exp> gens) { reset(std::move(gens)); }

    const std::vector<Exp>& gens() const { return gens_; }

    /// true iff some generator divides x^m
    bool contains(const Exp& m) const {
        for (const auto& g : gens_)
            if (leq(g, m)) return true;
        return false;
    }

  private:
    void reset(std::vector<Exp> raw) {
        std::sort(raw.begin(), raw.end());
        raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
        for (std::size_t i = 0; i < raw.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < raw.size() && !redundant; ++j)
                if (j != i && leq(raw[j], raw[i]) && !(raw[j] == raw[i] && j > i))
                    redundant = true;
            if (!redundant) gens_.push_back(raw[i]);
        }
    }
    std::vector<Exp> gens_;
};

/// normal form in R/I: delete every term whose monomial lies in I
inline Poly reduce_mod(const Poly& p, const MonomialIdeal& I) {
    Poly r;
    for (const auto& [m, c] : p.terms())
        if (!I.contains(m)) r.add_term(m, c);
    return r;
}

} // namespace lw

#endif
