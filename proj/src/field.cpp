#include "lw/field.hpp"

namespace lw {

namespace {
FieldCfg g_field; // rationals unless a run selects otherwise
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

void set_field(const FieldCfg& f) {
    if (f.is_prime_field() && !is_prime(f.p))
        throw std::invalid_argument("prime-field modulus must be prime");
    g_field = f;
}

const FieldCfg& active_field() { return g_field; }

void Scalar::canon() {
    if (!g_field.is_prime_field()) return;
    mpz_class p(g_field.p);
    mpz_class num = v_.get_num(), den = v_.get_den();
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::domain_error("denominator not invertible mod p");
    mpz_class r = (num * dinv) % p;
    if (r < 0) r += p;
    v_ = mpq_class(r);
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("division by zero scalar");
    if (g_field.is_prime_field()) {
        *this *= o.inv();
        return *this;
    }
    v_ /= o.v_;
    return *this;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero scalar");
    if (g_field.is_prime_field()) {
        mpz_class p(g_field.p), r;
        mpz_class num = v_.get_num();
        if (mpz_invert(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::domain_error("value not invertible mod p");
        Scalar s;
        s.v_ = mpq_class(r);
        s.canon();
        return s;
    }
    return Scalar(mpq_class(1 / v_));
}

std::string Scalar::str() const { return v_.get_str(); }

} // namespace lw
