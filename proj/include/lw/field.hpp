#ifndef LW_FIELD_HPP
#define LW_FIELD_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace lw {

/// Coefficient field for all exact linear algebra: the rationals by
/// default, or Z/p for a prime p. A prime modulus must exceed n+d so
/// that every integer scaling performed by the de Rham homotopy is
/// invertible.
struct FieldCfg {
    enum class Kind { rationals, prime_field };
    Kind kind = Kind::rationals;
    long p = 0;

    static FieldCfg rationals() { return FieldCfg{}; }
    static FieldCfg prime(long p) { return FieldCfg{Kind::prime_field, p}; }

    bool is_prime_field() const { return kind == Kind::prime_field; }
    bool operator==(const FieldCfg&) const = default;
};

bool is_prime(long p);

/// Active field for Scalar arithmetic. Set once per run (CLI startup or
/// test setup); all Scalar operations normalize against it.
void set_field(const FieldCfg& f);
const FieldCfg& active_field();

/// Exact field scalar. Rationals are kept canonical by GMP; prime-field
/// values are stored as integer residues in [0,p) with denominator 1.
class Scalar {
  public:
    Scalar() : v_(0) {}
    Scalar(long n) : v_(n) { canon(); }
    Scalar(long num, long den) : v_(num, den) {
        v_.canonicalize();
        canon();
    }
    explicit Scalar(const mpq_class& q) : v_(q) { canon(); }
    explicit Scalar(const std::string& s) : v_(s) {
        v_.canonicalize();
        canon();
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    const mpq_class& value() const { return v_; }

    Scalar operator-() const { return Scalar(mpq_class(-v_)); }
    Scalar& operator+=(const Scalar& o) { v_ += o.v_; canon(); return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; canon(); return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; canon(); return *this; }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }

    Scalar inv() const;
    std::string str() const;

  private:
    void canon();
    mpq_class v_;
};

} // namespace lw

#endif
