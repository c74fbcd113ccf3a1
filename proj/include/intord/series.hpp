#ifndef INTORD_SERIES_HPP
#define INTORD_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include <intord/numeric.hpp>

namespace intord
{

enum class Sign : int { plus = 1, minus = -1 };

// Truncated power series c_0 + c_1 x + ... + c_N x^N with exact integer
// coefficients. The truncation order N is fixed at construction.
class TruncSeries
{
public:
    explicit TruncSeries(std::size_t order) : m_coeffs(order + 1)
    {
    }
    TruncSeries(std::size_t order, std::initializer_list<long> init) : TruncSeries(order)
    {
        if (init.size() > order + 1) {
            throw std::invalid_argument("TruncSeries: more coefficients than order + 1");
        }
        std::size_t k = 0;
        for (long v : init) {
            m_coeffs[k++] = v;
        }
    }
    TruncSeries(std::size_t order, std::vector<Integer> coeffs) : m_coeffs(std::move(coeffs))
    {
        if (m_coeffs.size() != order + 1) {
            throw std::invalid_argument("TruncSeries: coefficient count must be order + 1");
        }
    }

    static TruncSeries one(std::size_t order)
    {
        TruncSeries s(order);
        s.m_coeffs[0] = 1;
        return s;
    }

    [[nodiscard]] std::size_t order() const
    {
        return m_coeffs.size() - 1;
    }
    [[nodiscard]] const Integer &operator[](std::size_t k) const
    {
        return m_coeffs[k];
    }
    Integer &operator[](std::size_t k)
    {
        return m_coeffs[k];
    }
    [[nodiscard]] std::span<const Integer> coeffs() const
    {
        return m_coeffs;
    }

    // Index of the first nonzero coefficient, or order() + 1 for the zero series.
    [[nodiscard]] std::size_t valuation() const
    {
        auto it = std::find_if(m_coeffs.begin(), m_coeffs.end(), [](const Integer &c) { return c != 0; });
        return static_cast<std::size_t>(it - m_coeffs.begin());
    }

    // Prefix of this series at a lower order.
    [[nodiscard]] TruncSeries truncated(std::size_t new_order) const
    {
        if (new_order > order()) {
            throw std::invalid_argument("TruncSeries::truncated: cannot extend the truncation order");
        }
        return TruncSeries(new_order, std::vector<Integer>(m_coeffs.begin(), m_coeffs.begin() + new_order + 1));
    }

    TruncSeries &operator+=(const TruncSeries &o)
    {
        check_same_order(o);
        for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
            m_coeffs[k] += o.m_coeffs[k];
        }
        return *this;
    }
    TruncSeries &operator-=(const TruncSeries &o)
    {
        check_same_order(o);
        for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
            m_coeffs[k] -= o.m_coeffs[k];
        }
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries &b)
    {
        return a += b;
    }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries &b)
    {
        return a -= b;
    }

    friend bool operator==(const TruncSeries &, const TruncSeries &) = default;

    void check_same_order(const TruncSeries &o) const
    {
        if (o.order() != order()) {
            throw std::invalid_argument("TruncSeries: mismatched truncation orders");
        }
    }

private:
    std::vector<Integer> m_coeffs;
};

// Truncated Cauchy product. Zero prefixes of either operand are skipped,
// which matters for the running products below (factor k has valuation 1).
inline TruncSeries mul(const TruncSeries &a, const TruncSeries &b)
{
    a.check_same_order(b);
    const std::size_t n = a.order();
    TruncSeries c(n);
    const std::size_t va = a.valuation();
    const std::size_t vb = b.valuation();
    for (std::size_t i = va; i <= n; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = vb; i + j <= n; ++j) {
            if (b[j] != 0) {
                mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
            }
        }
    }
    return c;
}

inline TruncSeries operator*(const TruncSeries &a, const TruncSeries &b)
{
    return mul(a, b);
}

// (1 + sign*x)^exponent truncated at `order`. Negative exponents expand as
// (1 + s x)^{-i} = sum_k C(i+k-1, k) (-s)^k x^k, which stays integral.
inline TruncSeries binomial_pow(Sign sign, long exponent, std::size_t order)
{
    TruncSeries s(order);
    const bool negate_odd = (exponent >= 0) ? sign == Sign::minus : sign == Sign::plus;
    if (exponent >= 0) {
        const auto e = static_cast<unsigned long>(exponent);
        for (std::size_t k = 0; k <= order && k <= e; ++k) {
            s[k] = binomial(e, k);
        }
    } else {
        const auto i = static_cast<unsigned long>(-exponent);
        for (std::size_t k = 0; k <= order; ++k) {
            s[k] = binomial(i + k - 1, k);
        }
    }
    if (negate_odd) {
        for (std::size_t k = 1; k <= order; k += 2) {
            s[k] = -s[k];
        }
    }
    return s;
}

namespace detail
{

// sum_{k>=0} prod_{i=1}^{k} factor(i), truncated at N. factor(i) must have
// zero constant term, so the k-th product has valuation k and only k <= N
// contribute.
template <typename FactorFn>
TruncSeries sum_of_running_products(std::size_t N, FactorFn factor)
{
    TruncSeries total = TruncSeries::one(N);
    TruncSeries running = TruncSeries::one(N);
    for (std::size_t k = 1; k <= N; ++k) {
        running = mul(running, factor(static_cast<long>(k)));
        total += running;
    }
    return total;
}

} // namespace detail

// Generating function of unlabelled interval orders:
//   I(x) = sum_{n>=0} prod_{i=1}^{n} (1 - (1-x)^i).
inline TruncSeries interval_gf(std::size_t N)
{
    return detail::sum_of_running_products(N, [N](long i) {
        return TruncSeries::one(N) - binomial_pow(Sign::minus, i, N);
    });
}

// Generating function of rigid unlabelled interval orders:
//   R(x) = sum_{n>=0} prod_{i=1}^{n} (1 - (1+x)^{-i}).
inline TruncSeries rigid_gf(std::size_t N)
{
    return detail::sum_of_running_products(N, [N](long i) {
        return TruncSeries::one(N) - binomial_pow(Sign::plus, -i, N);
    });
}

// S(x / (1 + sign*x)), truncated at S.order().
//
// [x^n] x^j (1 + s x)^{-j} = C(n-1, n-j) (-s)^{n-j} for 1 <= j <= n, so the
// substitution is a signed binomial transform of the coefficients.
inline TruncSeries substitute_moebius(const TruncSeries &S, Sign sign)
{
    const std::size_t N = S.order();
    TruncSeries out(N);
    out[0] = S[0];
    // row holds C(n-1, t) for t = 0..n-1
    std::vector<Integer> row{Integer{1}};
    for (std::size_t n = 1; n <= N; ++n) {
        if (n > 1) {
            row.emplace_back(1);
            for (std::size_t t = n - 2; t >= 1; --t) {
                row[t] += row[t - 1];
            }
        }
        Integer acc;
        for (std::size_t j = 1; j <= n; ++j) {
            const std::size_t k = n - j;
            if (S[j] == 0) {
                continue;
            }
            if (sign == Sign::plus && (k & 1U) != 0) {
                mpz_submul(acc.get_mpz_t(), row[k].get_mpz_t(), S[j].get_mpz_t());
            } else {
                mpz_addmul(acc.get_mpz_t(), row[k].get_mpz_t(), S[j].get_mpz_t());
            }
        }
        out[n] = std::move(acc);
    }
    return out;
}

} // namespace intord

#endif
