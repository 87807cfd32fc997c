#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gjsum {

// An element of the cyclotomic field Q(zeta_n), held as exact rational
// coordinates in the power basis 1, z, ..., z^(phi(n)-1) modulo the n-th
// cyclotomic polynomial. Construction reduces n to the conductor (the
// minimal m | n with the element in Q(zeta_m)), so equality is plain
// coefficient comparison. Values are immutable; all operations are pure.
class Cyclotomic {
  public:
    Cyclotomic();  // zero
    Cyclotomic(long v);
    Cyclotomic(const mpq_class& v);

    // zeta_n^k. Requires n >= 1.
    static Cyclotomic root_of_unity(long n, long k = 1);
    // Element with the given power-basis coordinates (length phi(n)).
    static Cyclotomic from_coeffs(long n, std::vector<mpq_class> coeffs);
    // Element sum_j dense[j] * zeta_n^j for a coefficient vector of any
    // length; reduced modulo the cyclotomic polynomial in one pass.
    static Cyclotomic from_dense(long n, std::vector<mpq_class> dense);

    // Coordinates at order L (a multiple of order()); plumbing for
    // accumulation loops that defer canonicalization to one final
    // from_dense call.
    std::vector<mpq_class> coeffs_at(long L) const;

    long order() const { return order_; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const { return order_ == 1; }
    // Requires is_rational().
    const mpq_class& rational_value() const;
    bool is_integer() const;

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);

    // Multiplicative inverse; zero input raises input_error (zero division).
    Cyclotomic inverse() const;
    // a^e for any integer e (negative exponents go through inverse()).
    Cyclotomic pow(long e) const;

    // Galois action zeta_n -> zeta_n^k; requires gcd(k, order()) == 1.
    Cyclotomic galois(long k) const;
    // Complex conjugation, i.e. galois(-1).
    Cyclotomic conj() const;
    bool is_real() const;

    // Exact sign of a real element: the exact zero test runs first, then
    // the value is bracketed by dyadic intervals (directed-rounding cos
    // evaluation) at doubling precision until the interval excludes zero.
    // Non-real input raises input_error; exhausting cap_bits raises
    // check_failure rather than guessing.
    int sign_real(unsigned cap_bits = 4096) const;

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
    // Total order used for deterministic table/report ordering:
    // by order, then lexicographic on coordinates.
    static int compare(const Cyclotomic& a, const Cyclotomic& b);

    // "c0 + c1*z + ...; order=n" with rationals as "p/q"; lossless.
    std::string str() const;
    static Cyclotomic parse(const std::string& text);

  private:
    long order_;
    std::vector<mpq_class> coeffs_;  // length phi(order_)

    Cyclotomic(long order, std::vector<mpq_class> coeffs, bool already_canonical);
    void canonicalize();
};

long euler_phi(long n);
// Coefficients of the n-th cyclotomic polynomial (degree phi(n), monic).
const std::vector<mpz_class>& cyclotomic_polynomial(long n);

}  // namespace gjsum
