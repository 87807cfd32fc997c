#include "gjsum/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "gjsum/errors.hpp"

namespace gjsum {

long euler_phi(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

std::vector<long> prime_factors(long n) {
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Exact division of integer polynomials, quotient only (divisor monic).
std::vector<mpz_class> poly_divide_exact(const std::vector<mpz_class>& num,
                                         const std::vector<mpz_class>& den) {
    std::vector<mpz_class> rem = num;
    long dn = static_cast<long>(rem.size()) - 1;
    long dd = static_cast<long>(den.size()) - 1;
    std::vector<mpz_class> quot(dn - dd + 1, 0);
    for (long i = dn; i >= dd; --i) {
        if (rem[i] == 0) continue;
        mpz_class c = rem[i];  // den monic
        quot[i - dd] = c;
        for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= c * den[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw internal_error("cyclotomic polynomial division not exact");
    return quot;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(long n) {
    static std::map<long, std::vector<mpz_class>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by increasing n.
    std::function<const std::vector<mpz_class>&(long)> get = [&](long m) -> const std::vector<mpz_class>& {
        auto found = cache.find(m);
        if (found != cache.end()) return found->second;
        std::vector<mpz_class> num(m + 1, 0);
        num[0] = -1;
        num[m] = 1;
        for (long d = 1; d < m; ++d)
            if (m % d == 0) num = poly_divide_exact(num, get(d));
        return cache.emplace(m, std::move(num)).first->second;
    };
    return get(n);
}

namespace {

// Remainder of a dense rational polynomial modulo Phi_n; result has
// exactly phi(n) coordinates.
std::vector<mpq_class> reduce_mod_phi(long n, std::vector<mpq_class> v) {
    const auto& phi = cyclotomic_polynomial(n);
    const long d = static_cast<long>(phi.size()) - 1;
    for (long i = static_cast<long>(v.size()) - 1; i >= d; --i) {
        if (v[i] == 0) continue;
        mpq_class c = v[i];
        for (long j = 0; j <= d; ++j) v[i - d + j] -= c * phi[j];
    }
    v.resize(d);
    return v;
}

// Coordinates of an order-n element re-expressed at order L (n | L).
std::vector<mpq_class> lift_coords(long n, const std::vector<mpq_class>& c, long L) {
    if (n == L) return c;
    const long s = L / n;
    std::vector<mpq_class> v(static_cast<size_t>((c.size() - 1) * s + 1), 0);
    for (size_t j = 0; j < c.size(); ++j) v[j * s] = c[j];
    return reduce_mod_phi(L, std::move(v));
}

// Data for rewriting an element of Q(zeta_n) known to lie in Q(zeta_d),
// d | n, into zeta_d coordinates: basis_cols[j] = coords at order n of
// zeta_d^j, pivot_rows a row subset whose square submatrix was inverted.
struct DescentMap {
    long n = 0, d = 0;
    std::vector<std::vector<mpq_class>> basis_cols;  // phi(d) columns, each length phi(n)
    std::vector<int> pivot_rows;                     // phi(d) row indices
    std::vector<std::vector<mpq_class>> inv;         // phi(d) x phi(d)
};

const DescentMap& descent_map(long n, long d) {
    static std::map<std::pair<long, long>, DescentMap> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    DescentMap m;
    m.n = n;
    m.d = d;
    const long pn = euler_phi(n), pd = euler_phi(d);
    for (long j = 0; j < pd; ++j) {
        std::vector<mpq_class> col(static_cast<size_t>((n / d) * j + 1), 0);
        col[(n / d) * j] = 1;
        m.basis_cols.push_back(reduce_mod_phi(n, std::move(col)));
    }
    // Row echelon with row pivoting to find an invertible phi(d)-row subset.
    std::vector<std::vector<mpq_class>> work(pn, std::vector<mpq_class>(pd, 0));
    for (long j = 0; j < pd; ++j)
        for (long i = 0; i < pn; ++i) work[i][j] = m.basis_cols[j][i];
    std::vector<int> rows(pn);
    std::iota(rows.begin(), rows.end(), 0);
    long r = 0;
    for (long col = 0; col < pd; ++col) {
        long piv = -1;
        for (long i = r; i < pn; ++i)
            if (work[i][col] != 0) { piv = i; break; }
        if (piv < 0) throw internal_error("cyclotomic descent basis is rank deficient");
        std::swap(work[r], work[piv]);
        std::swap(rows[r], rows[piv]);
        for (long i = r + 1; i < pn; ++i) {
            if (work[i][col] == 0) continue;
            mpq_class f = work[i][col] / work[r][col];
            for (long j = col; j < pd; ++j) work[i][j] -= f * work[r][j];
        }
        m.pivot_rows.push_back(rows[r]);
        ++r;
    }
    // Invert the pivot submatrix by Gauss-Jordan.
    std::vector<std::vector<mpq_class>> a(pd, std::vector<mpq_class>(2 * pd, 0));
    for (long i = 0; i < pd; ++i) {
        for (long j = 0; j < pd; ++j) a[i][j] = m.basis_cols[j][m.pivot_rows[i]];
        a[i][pd + i] = 1;
    }
    for (long col = 0; col < pd; ++col) {
        long piv = -1;
        for (long i = col; i < pd; ++i)
            if (a[i][col] != 0) { piv = i; break; }
        if (piv < 0) throw internal_error("cyclotomic descent submatrix singular");
        std::swap(a[col], a[piv]);
        mpq_class inv_p = 1 / a[col][col];
        for (long j = 0; j < 2 * pd; ++j) a[col][j] *= inv_p;
        for (long i = 0; i < pd; ++i) {
            if (i == col || a[i][col] == 0) continue;
            mpq_class f = a[i][col];
            for (long j = 0; j < 2 * pd; ++j) a[i][j] -= f * a[col][j];
        }
    }
    m.inv.assign(pd, std::vector<mpq_class>(pd, 0));
    for (long i = 0; i < pd; ++i)
        for (long j = 0; j < pd; ++j) m.inv[i][j] = a[i][pd + j];
    return cache.emplace(key, std::move(m)).first->second;
}

// If the order-n element with coordinates c lies in Q(zeta_d), write its
// zeta_d coordinates into out and return true.
bool try_descend(long n, const std::vector<mpq_class>& c, long d, std::vector<mpq_class>& out) {
    const DescentMap& m = descent_map(n, d);
    const long pd = euler_phi(d), pn = euler_phi(n);
    std::vector<mpq_class> cd(pd, 0);
    for (long i = 0; i < pd; ++i)
        for (long j = 0; j < pd; ++j) cd[i] += m.inv[i][j] * c[m.pivot_rows[j]];
    // Membership holds iff the candidate reproduces every coordinate.
    for (long i = 0; i < pn; ++i) {
        mpq_class acc = 0;
        for (long j = 0; j < pd; ++j)
            if (cd[j] != 0) acc += m.basis_cols[j][i] * cd[j];
        if (acc != c[i]) return false;
    }
    out = std::move(cd);
    return true;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

}  // namespace

Cyclotomic::Cyclotomic() : order_(1), coeffs_{mpq_class(0)} {}
Cyclotomic::Cyclotomic(long v) : order_(1), coeffs_{mpq_class(v)} {}
Cyclotomic::Cyclotomic(const mpq_class& v) : order_(1), coeffs_{v} {
    coeffs_[0].canonicalize();
}

Cyclotomic::Cyclotomic(long order, std::vector<mpq_class> coeffs, bool already_canonical)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (!already_canonical) canonicalize();
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
    if (n < 1) throw input_error("root_of_unity: order must be positive");
    k %= n;
    if (k < 0) k += n;
    std::vector<mpq_class> v(static_cast<size_t>(k) + 1, 0);
    v[k] = 1;
    return Cyclotomic(n, reduce_mod_phi(n, std::move(v)), false);
}

Cyclotomic Cyclotomic::from_coeffs(long n, std::vector<mpq_class> coeffs) {
    if (n < 1) throw input_error("from_coeffs: order must be positive");
    if (static_cast<long>(coeffs.size()) != euler_phi(n))
        throw input_error("from_coeffs: expected phi(n) coefficients");
    for (auto& c : coeffs) c.canonicalize();
    return Cyclotomic(n, std::move(coeffs), false);
}

Cyclotomic Cyclotomic::from_dense(long n, std::vector<mpq_class> dense) {
    if (n < 1) throw input_error("from_dense: order must be positive");
    if (dense.empty()) dense.push_back(0);
    for (auto& c : dense) c.canonicalize();
    return Cyclotomic(n, reduce_mod_phi(n, std::move(dense)), false);
}

std::vector<mpq_class> Cyclotomic::coeffs_at(long L) const {
    if (L % order_ != 0) throw input_error("coeffs_at: L must be a multiple of the order");
    return lift_coords(order_, coeffs_, L);
}

// Reduce the order to the conductor by stripping one prime at a time.
// Any divisor chain reaching the minimal field passes through single-prime
// steps, so greedy descent finds it.
void Cyclotomic::canonicalize() {
    bool changed = true;
    while (changed && order_ > 1) {
        changed = false;
        for (long p : prime_factors(order_)) {
            long d = order_ / p;
            std::vector<mpq_class> down;
            if (try_descend(order_, coeffs_, d, down)) {
                order_ = d;
                coeffs_ = std::move(down);
                changed = true;
                break;
            }
        }
    }
}

bool Cyclotomic::is_zero() const {
    return order_ == 1 && coeffs_[0] == 0;
}

const mpq_class& Cyclotomic::rational_value() const {
    if (order_ != 1) throw input_error("rational_value: element is not rational");
    return coeffs_[0];
}

bool Cyclotomic::is_integer() const {
    return order_ == 1 && coeffs_[0].get_den() == 1;
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<mpq_class> v = coeffs_;
    for (auto& c : v) c = -c;
    return Cyclotomic(order_, std::move(v), true);
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    long L = std::lcm(a.order_, b.order_);
    std::vector<mpq_class> va = lift_coords(a.order_, a.coeffs_, L);
    std::vector<mpq_class> vb = lift_coords(b.order_, b.coeffs_, L);
    for (size_t i = 0; i < va.size(); ++i) va[i] += vb[i];
    return Cyclotomic(L, std::move(va), false);
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    long L = std::lcm(a.order_, b.order_);
    std::vector<mpq_class> va = lift_coords(a.order_, a.coeffs_, L);
    std::vector<mpq_class> vb = lift_coords(b.order_, b.coeffs_, L);
    std::vector<mpq_class> prod(va.size() + vb.size() - 1, 0);
    for (size_t i = 0; i < va.size(); ++i) {
        if (va[i] == 0) continue;
        for (size_t j = 0; j < vb.size(); ++j)
            if (vb[j] != 0) prod[i + j] += va[i] * vb[j];
    }
    return Cyclotomic(L, reduce_mod_phi(L, std::move(prod)), false);
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw input_error("inverse: division by zero");
    if (order_ == 1) return Cyclotomic(mpq_class(1) / coeffs_[0]);
    // Extended Euclid in Q[x]: s*A + t*Phi_n = 1, inverse = s mod Phi_n.
    const auto& phi_z = cyclotomic_polynomial(order_);
    std::vector<mpq_class> r0(phi_z.begin(), phi_z.end());
    std::vector<mpq_class> r1 = coeffs_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<mpq_class> s0{mpq_class(0)}, s1{mpq_class(1)};
    auto degree = [](const std::vector<mpq_class>& p) { return static_cast<long>(p.size()) - 1; };
    while (degree(r1) > 0) {
        // divide r0 by r1
        std::vector<mpq_class> rem = r0;
        std::vector<mpq_class> q(std::max<long>(degree(r0) - degree(r1) + 1, 1), 0);
        for (long i = degree(rem); i >= degree(r1); --i) {
            if (rem[i] == 0) continue;
            mpq_class c = rem[i] / r1.back();
            q[i - degree(r1)] = c;
            for (long j = 0; j <= degree(r1); ++j) rem[i - degree(r1) + j] -= c * r1[j];
        }
        while (rem.size() > 1 && rem.back() == 0) rem.pop_back();
        // s_new = s0 - q * s1
        std::vector<mpq_class> s_new(std::max(s0.size(), q.size() + s1.size() - 1), 0);
        for (size_t i = 0; i < s0.size(); ++i) s_new[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) s_new[i + j] -= q[i] * s1[j];
        }
        while (s_new.size() > 1 && s_new.back() == 0) s_new.pop_back();
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s_new);
    }
    if (r1.empty() || r1[0] == 0)
        throw internal_error("inverse: element not a unit modulo the cyclotomic polynomial");
    mpq_class lead = r1[0];
    for (auto& c : s1) c /= lead;
    return Cyclotomic(order_, reduce_mod_phi(order_, std::move(s1)), false);
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic acc(1L);
    Cyclotomic base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

Cyclotomic Cyclotomic::galois(long k) const {
    long n = order_;
    long kk = k % n;
    if (kk < 0) kk += n;
    if (n == 1) return *this;
    if (gcd_long(kk, n) != 1)
        throw input_error("galois: exponent " + std::to_string(k) +
                          " is not coprime to the order " + std::to_string(n));
    std::vector<mpq_class> v(static_cast<size_t>(n), 0);
    for (size_t j = 0; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0) v[(j * kk) % n] += coeffs_[j];
    // Automorphisms preserve the conductor, so the result is canonical at
    // the same order.
    return Cyclotomic(n, reduce_mod_phi(n, std::move(v)), true);
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

bool Cyclotomic::is_real() const { return conj() == *this; }

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    return order_ == o.order_ && coeffs_ == o.coeffs_;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_ ? -1 : 1;
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        int c = cmp(a.coeffs_[i], b.coeffs_[i]);
        if (c != 0) return c;
    }
    return 0;
}

int Cyclotomic::sign_real(unsigned cap_bits) const {
    if (!is_real()) throw input_error("sign_real: element is not real");
    if (is_zero()) return 0;
    if (order_ == 1) return sgn(coeffs_[0]);
    // Nonzero real algebraic number: bracket sum(c_j cos(2 pi j / n)) at
    // doubling precision. Lipschitz slack covers the argument interval.
    for (unsigned prec = 64; prec <= cap_bits; prec *= 2) {
        mpfr_t pi_lo, pi_hi, t_lo, t_hi, c_lo, c_hi, term_lo, term_hi, sum_lo, sum_hi, q, w;
        mpfr_inits2(prec, pi_lo, pi_hi, t_lo, t_hi, c_lo, c_hi, term_lo, term_hi, sum_lo,
                    sum_hi, q, w, static_cast<mpfr_ptr>(nullptr));
        mpfr_const_pi(pi_lo, MPFR_RNDD);
        mpfr_const_pi(pi_hi, MPFR_RNDU);
        mpfr_set_zero(sum_lo, 1);
        mpfr_set_zero(sum_hi, 1);
        for (size_t j = 0; j < coeffs_.size(); ++j) {
            if (coeffs_[j] == 0) continue;
            // t = 2 pi j / n as an interval
            mpfr_mul_si(t_lo, pi_lo, 2 * static_cast<long>(j), MPFR_RNDD);
            mpfr_div_si(t_lo, t_lo, order_, MPFR_RNDD);
            mpfr_mul_si(t_hi, pi_hi, 2 * static_cast<long>(j), MPFR_RNDU);
            mpfr_div_si(t_hi, t_hi, order_, MPFR_RNDU);
            mpfr_sub(w, t_hi, t_lo, MPFR_RNDU);
            // cos over [t_lo, t_hi]: endpoints with directed rounding,
            // widened by the interval width (|cos'| <= 1).
            mpfr_cos(c_lo, t_lo, MPFR_RNDD);
            mpfr_cos(c_hi, t_lo, MPFR_RNDU);
            mpfr_cos(q, t_hi, MPFR_RNDD);
            if (mpfr_cmp(q, c_lo) < 0) mpfr_set(c_lo, q, MPFR_RNDD);
            mpfr_cos(q, t_hi, MPFR_RNDU);
            if (mpfr_cmp(q, c_hi) > 0) mpfr_set(c_hi, q, MPFR_RNDU);
            mpfr_sub(c_lo, c_lo, w, MPFR_RNDD);
            mpfr_add(c_hi, c_hi, w, MPFR_RNDU);
            // multiply by the rational coefficient
            mpfr_set_q(q, coeffs_[j].get_mpq_t(), MPFR_RNDN);
            int s = sgn(coeffs_[j]);
            if (s > 0) {
                mpfr_set_q(q, coeffs_[j].get_mpq_t(), MPFR_RNDD);
                mpfr_mul(term_lo, c_lo, q, MPFR_RNDD);
                mpfr_set_q(q, coeffs_[j].get_mpq_t(), MPFR_RNDU);
                mpfr_mul(term_hi, c_hi, q, MPFR_RNDU);
            } else {
                mpfr_set_q(q, coeffs_[j].get_mpq_t(), MPFR_RNDD);
                mpfr_mul(term_lo, c_hi, q, MPFR_RNDD);
                mpfr_set_q(q, coeffs_[j].get_mpq_t(), MPFR_RNDU);
                mpfr_mul(term_hi, c_lo, q, MPFR_RNDU);
            }
            mpfr_add(sum_lo, sum_lo, term_lo, MPFR_RNDD);
            mpfr_add(sum_hi, sum_hi, term_hi, MPFR_RNDU);
        }
        bool pos = mpfr_sgn(sum_lo) > 0;
        bool neg = mpfr_sgn(sum_hi) < 0;
        mpfr_clears(pi_lo, pi_hi, t_lo, t_hi, c_lo, c_hi, term_lo, term_hi, sum_lo, sum_hi,
                    q, w, static_cast<mpfr_ptr>(nullptr));
        if (pos) return 1;
        if (neg) return -1;
    }
    throw check_failure("sign_real: precision cap exhausted without separating the value from zero");
}

std::string Cyclotomic::str() const {
    std::ostringstream out;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (j > 0) out << " + ";
        out << coeffs_[j].get_str();
        if (j == 1) out << "*z";
        if (j > 1) out << "*z^" << j;
    }
    out << "; order=" << order_;
    return out.str();
}

Cyclotomic Cyclotomic::parse(const std::string& text) {
    auto semi = text.rfind("; order=");
    if (semi == std::string::npos) throw input_error("parse: missing '; order=' suffix");
    long n = 0;
    try {
        n = std::stol(text.substr(semi + 8));
    } catch (const std::exception&) {
        throw input_error("parse: bad order");
    }
    if (n < 1) throw input_error("parse: bad order");
    // Rendering is positional: term j carries degree j with suffix "",
    // "*z", or "*z^j". Parse accordingly and validate the suffix.
    std::vector<mpq_class> coeffs(euler_phi(n), 0);
    std::string body = text.substr(0, semi);
    size_t pos = 0, deg = 0;
    while (pos <= body.size() && deg < coeffs.size()) {
        size_t next = body.find(" + ", pos);
        std::string term = body.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        pos = next == std::string::npos ? body.size() + 1 : next + 3;
        std::string want_suffix =
            deg == 0 ? "" : (deg == 1 ? "*z" : "*z^" + std::to_string(deg));
        if (term.size() < want_suffix.size() ||
            term.substr(term.size() - want_suffix.size()) != want_suffix)
            throw input_error("parse: term '" + term + "' does not match degree " +
                              std::to_string(deg));
        std::string coef = term.substr(0, term.size() - want_suffix.size());
        try {
            coeffs[deg] = mpq_class(coef);
            coeffs[deg].canonicalize();
        } catch (const std::exception&) {
            throw input_error("parse: bad rational '" + coef + "'");
        }
        ++deg;
    }
    if (deg != coeffs.size() || pos <= body.size())
        throw input_error("parse: expected phi(order) terms");
    return from_coeffs(n, std::move(coeffs));
}

}  // namespace gjsum
