#ifndef LW_EXPVEC_HPP
#define LW_EXPVEC_HPP

#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lw {

/// Exponent vector in Z^n with non-negative entries. The componentwise
/// partial order `leq` is the one used for all multidegree bounds; the
/// lexicographic total order makes containers deterministic.
struct Exp {
    std::vector<int> v;

    Exp() = default;
    explicit Exp(std::size_t n) : v(n, 0) {}
    Exp(std::initializer_list<int> init) : v(init) {}
    explicit Exp(std::vector<int> init) : v(std::move(init)) {}

    static Exp unit(std::size_t n, std::size_t i) {
        Exp e(n);
        e.v[i] = 1;
        return e;
    }

    std::size_t size() const { return v.size(); }
    int operator[](std::size_t i) const { return v[i]; }
    int& operator[](std::size_t i) { return v[i]; }

    int total() const { return std::accumulate(v.begin(), v.end(), 0); }
    bool is_zero() const {
        for (int x : v)
            if (x) return false;
        return true;
    }

    friend Exp operator+(const Exp& a, const Exp& b) {
        if (a.size() != b.size()) throw std::logic_error("exponent length mismatch");
        Exp r = a;
        for (std::size_t i = 0; i < r.size(); ++i) r.v[i] += b.v[i];
        return r;
    }
    friend Exp operator-(const Exp& a, const Exp& b) {
        if (a.size() != b.size()) throw std::logic_error("exponent length mismatch");
        Exp r = a;
        for (std::size_t i = 0; i < r.size(); ++i) {
            r.v[i] -= b.v[i];
            if (r.v[i] < 0) throw std::domain_error("negative exponent");
        }
        return r;
    }

    /// componentwise a_i <= b_i
    friend bool leq(const Exp& a, const Exp& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a.v[i] > b.v[i]) return false;
        return true;
    }
    friend Exp min(const Exp& a, const Exp& b) {
        Exp r = a;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (b.v[i] < r.v[i]) r.v[i] = b.v[i];
        return r;
    }
    friend Exp max(const Exp& a, const Exp& b) {
        Exp r = a;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (b.v[i] > r.v[i]) r.v[i] = b.v[i];
        return r;
    }
    /// entrywise product, used to pass from formal to ring multidegrees
    friend Exp scale(const Exp& a, const Exp& e) {
        Exp r = a;
        for (std::size_t i = 0; i < r.size(); ++i) r.v[i] *= e.v[i];
        return r;
    }

    auto operator<=>(const Exp&) const = default;

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        return s + ")";
    }
};

} // namespace lw

#endif
