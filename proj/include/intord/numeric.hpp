#ifndef INTORD_NUMERIC_HPP
#define INTORD_NUMERIC_HPP

// Exact integers and rationals (GMP) plus a precision-carrying binary
// floating-point type (MPFR) used by the asymptotic layer.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

namespace intord
{

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer binomial(unsigned long n, unsigned long k)
{
    Integer r;
    if (k > n) {
        return r;
    }
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// n (n-1) ... (n-m+1); zero when m > n.
inline Integer falling_factorial(unsigned long n, unsigned long m)
{
    if (m > n) {
        return Integer{0};
    }
    Integer r{1};
    for (unsigned long t = 0; t < m; ++t) {
        r *= n - t;
    }
    return r;
}

inline Integer pow_ui(const Integer &base, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline std::string to_string(const Integer &z)
{
    return z.get_str();
}

inline std::string to_string(const Rational &q)
{
    return q.get_str();
}

// Owning wrapper around mpfr_t. Every value carries its own precision;
// binary operations round to the larger of the two operand precisions.
class Real
{
public:
    static constexpr mpfr_prec_t default_precision = 256;

    explicit Real(mpfr_prec_t bits = default_precision)
    {
        mpfr_init2(m_value, bits);
        mpfr_set_zero(m_value, 1);
    }
    Real(long v, mpfr_prec_t bits) : Real(bits)
    {
        mpfr_set_si(m_value, v, MPFR_RNDN);
    }
    Real(const Integer &z, mpfr_prec_t bits) : Real(bits)
    {
        mpfr_set_z(m_value, z.get_mpz_t(), MPFR_RNDN);
    }
    Real(const Rational &q, mpfr_prec_t bits) : Real(bits)
    {
        mpfr_set_q(m_value, q.get_mpq_t(), MPFR_RNDN);
    }
    Real(const Real &other)
    {
        mpfr_init2(m_value, mpfr_get_prec(other.m_value));
        mpfr_set(m_value, other.m_value, MPFR_RNDN);
    }
    Real(Real &&other) noexcept : Real(Real::min_precision_tag{})
    {
        mpfr_swap(m_value, other.m_value);
    }
    Real &operator=(const Real &other)
    {
        if (this != &other) {
            mpfr_set_prec(m_value, mpfr_get_prec(other.m_value));
            mpfr_set(m_value, other.m_value, MPFR_RNDN);
        }
        return *this;
    }
    Real &operator=(Real &&other) noexcept
    {
        mpfr_swap(m_value, other.m_value);
        return *this;
    }
    ~Real()
    {
        mpfr_clear(m_value);
    }

    [[nodiscard]] mpfr_prec_t precision() const
    {
        return mpfr_get_prec(m_value);
    }
    [[nodiscard]] mpfr_srcptr get() const
    {
        return m_value;
    }
    mpfr_ptr get()
    {
        return m_value;
    }

    // Returns a copy rounded to `bits`.
    [[nodiscard]] Real rounded(mpfr_prec_t bits) const
    {
        Real r(bits);
        mpfr_set(r.m_value, m_value, MPFR_RNDN);
        return r;
    }

    [[nodiscard]] double to_double() const
    {
        return mpfr_get_d(m_value, MPFR_RNDN);
    }

    [[nodiscard]] bool is_finite() const
    {
        return mpfr_number_p(m_value) != 0;
    }

    // Decimal rendering with enough digits to round-trip at this precision.
    [[nodiscard]] std::string str(int digits = 0) const
    {
        if (digits <= 0) {
            digits = static_cast<int>(static_cast<double>(precision()) * 0.30103) + 2;
        }
        char *buf = nullptr;
        if (mpfr_asprintf(&buf, "%.*Rg", digits, m_value) < 0) {
            throw std::runtime_error("mpfr_asprintf failed");
        }
        std::string out(buf);
        mpfr_free_str(buf);
        return out;
    }

    static Real pi(mpfr_prec_t bits)
    {
        Real r(bits);
        mpfr_const_pi(r.m_value, MPFR_RNDN);
        return r;
    }

    Real &operator+=(const Real &o)
    {
        widen_to(o);
        mpfr_add(m_value, m_value, o.m_value, MPFR_RNDN);
        return *this;
    }
    Real &operator-=(const Real &o)
    {
        widen_to(o);
        mpfr_sub(m_value, m_value, o.m_value, MPFR_RNDN);
        return *this;
    }
    Real &operator*=(const Real &o)
    {
        widen_to(o);
        mpfr_mul(m_value, m_value, o.m_value, MPFR_RNDN);
        return *this;
    }
    Real &operator/=(const Real &o)
    {
        widen_to(o);
        mpfr_div(m_value, m_value, o.m_value, MPFR_RNDN);
        return *this;
    }

    friend Real operator+(Real a, const Real &b)
    {
        return a += b;
    }
    friend Real operator-(Real a, const Real &b)
    {
        return a -= b;
    }
    friend Real operator*(Real a, const Real &b)
    {
        return a *= b;
    }
    friend Real operator/(Real a, const Real &b)
    {
        return a /= b;
    }
    friend Real operator-(Real a)
    {
        mpfr_neg(a.m_value, a.m_value, MPFR_RNDN);
        return a;
    }

    friend bool operator<(const Real &a, const Real &b)
    {
        return mpfr_less_p(a.m_value, b.m_value) != 0;
    }
    friend bool operator>(const Real &a, const Real &b)
    {
        return b < a;
    }
    friend bool operator<=(const Real &a, const Real &b)
    {
        return mpfr_lessequal_p(a.m_value, b.m_value) != 0;
    }
    friend bool operator>=(const Real &a, const Real &b)
    {
        return b <= a;
    }
    friend bool operator==(const Real &a, const Real &b)
    {
        return mpfr_equal_p(a.m_value, b.m_value) != 0;
    }

    friend Real abs(Real a)
    {
        mpfr_abs(a.m_value, a.m_value, MPFR_RNDN);
        return a;
    }
    friend Real sqrt(Real a)
    {
        mpfr_sqrt(a.m_value, a.m_value, MPFR_RNDN);
        return a;
    }
    friend Real exp(Real a)
    {
        mpfr_exp(a.m_value, a.m_value, MPFR_RNDN);
        return a;
    }
    friend Real pow(Real a, long e)
    {
        mpfr_pow_si(a.m_value, a.m_value, e, MPFR_RNDN);
        return a;
    }
    friend Real pow(Real a, const Real &e)
    {
        a.widen_to(e);
        mpfr_pow(a.m_value, a.m_value, e.m_value, MPFR_RNDN);
        return a;
    }

private:
    struct min_precision_tag {
    };
    explicit Real(min_precision_tag)
    {
        mpfr_init2(m_value, MPFR_PREC_MIN);
    }

    void widen_to(const Real &o)
    {
        if (mpfr_get_prec(o.m_value) > mpfr_get_prec(m_value)) {
            mpfr_prec_round(m_value, mpfr_get_prec(o.m_value), MPFR_RNDN);
        }
    }

    mpfr_t m_value;
};

} // namespace intord

#endif
