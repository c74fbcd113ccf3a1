#ifndef INTORD_COUNTS_HPP
#define INTORD_COUNTS_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include <intord/numeric.hpp>
#include <intord/series.hpp>

namespace intord
{

// Exact counting sequences up to max_n:
//   i_seq  unlabelled interval orders
//   r_seq  rigid unlabelled interval orders
//   l_seq  labelled interval orders
// together with the Stirling triangle S(n, k) and cached factorials.
struct CountTable {
    std::size_t max_n = 0;
    std::vector<Integer> i_seq;
    std::vector<Integer> r_seq;
    std::vector<Integer> l_seq;
    std::vector<std::vector<Integer>> stirling; // stirling[n][k], 0 <= k <= n
    std::vector<Integer> factorials;

    [[nodiscard]] const Integer &S(std::size_t n, std::size_t k) const
    {
        return stirling.at(n).at(k);
    }
};

inline std::vector<std::vector<Integer>> stirling_triangle(std::size_t max_n)
{
    std::vector<std::vector<Integer>> s(max_n + 1);
    s[0] = {Integer{1}};
    for (std::size_t n = 1; n <= max_n; ++n) {
        s[n].resize(n + 1);
        for (std::size_t k = 1; k <= n; ++k) {
            if (k < n) {
                s[n][k] = s[n - 1][k] * k;
            }
            s[n][k] += s[n - 1][k - 1];
        }
    }
    return s;
}

// r_n = sum_{k=0}^{n-1} (-1)^k C(n-1, k) i_{n-k} for n >= 1, r_0 = i_0.
inline Integer rigid_by_transform(std::size_t n, std::span<const Integer> i_seq)
{
    if (i_seq.size() <= n) {
        throw std::invalid_argument("rigid_by_transform: i_seq too short");
    }
    if (n == 0) {
        return i_seq[0];
    }
    Integer acc;
    for (std::size_t k = 0; k < n; ++k) {
        const Integer c = binomial(n - 1, k);
        if ((k & 1U) != 0) {
            mpz_submul(acc.get_mpz_t(), c.get_mpz_t(), i_seq[n - k].get_mpz_t());
        } else {
            mpz_addmul(acc.get_mpz_t(), c.get_mpz_t(), i_seq[n - k].get_mpz_t());
        }
    }
    return acc;
}

// The transform with an extra leading i_0 term, as displayed in the source
// derivation. Overcounts by exactly i_0 = 1 for n >= 1; kept for diagnostics.
inline Integer rigid_by_transform_with_i0(std::size_t n, std::span<const Integer> i_seq)
{
    if (n == 0) {
        return i_seq[0];
    }
    return i_seq[0] + rigid_by_transform(n, i_seq);
}

inline CountTable build(std::size_t max_n)
{
    CountTable t;
    t.max_n = max_n;

    const TruncSeries I = interval_gf(max_n);
    const TruncSeries R = rigid_gf(max_n);
    t.i_seq.assign(I.coeffs().begin(), I.coeffs().end());
    t.r_seq.assign(R.coeffs().begin(), R.coeffs().end());

    t.factorials.resize(max_n + 1);
    t.factorials[0] = 1;
    for (std::size_t n = 1; n <= max_n; ++n) {
        t.factorials[n] = t.factorials[n - 1] * n;
    }

    t.stirling = stirling_triangle(max_n);

    // l_n = sum_{k=1}^{n} r_k k! S(n, k)
    t.l_seq.resize(max_n + 1);
    t.l_seq[0] = 1;
    std::vector<Integer> weighted(max_n + 1); // r_k k!
    for (std::size_t k = 0; k <= max_n; ++k) {
        weighted[k] = t.r_seq[k] * t.factorials[k];
    }
    for (std::size_t n = 1; n <= max_n; ++n) {
        Integer acc;
        for (std::size_t k = 1; k <= n; ++k) {
            mpz_addmul(acc.get_mpz_t(), weighted[k].get_mpz_t(), t.stirling[n][k].get_mpz_t());
        }
        t.l_seq[n] = std::move(acc);
    }
    return t;
}

// k! S(n, k), the number of surjections [n] -> [k].
inline Integer surjections(std::size_t n, std::size_t k, const CountTable &table)
{
    if (k > n) {
        return Integer{0};
    }
    if (n > table.max_n) {
        throw std::out_of_range("surjections: n exceeds table.max_n");
    }
    return table.factorials[k] * table.stirling[n][k];
}

// i_n == sum_{m=1}^{n} r_m C(n-1, m-1): an interval order is its rigid
// reduction on m points plus a composition of n into m multiplicities.
inline bool multiplicity_identity_check(std::size_t n, const CountTable &table)
{
    if (n == 0 || n > table.max_n) {
        throw std::out_of_range("multiplicity_identity_check: need 1 <= n <= max_n");
    }
    Integer acc;
    for (std::size_t m = 1; m <= n; ++m) {
        const Integer c = binomial(n - 1, m - 1);
        mpz_addmul(acc.get_mpz_t(), table.r_seq[m].get_mpz_t(), c.get_mpz_t());
    }
    return acc == table.i_seq[n];
}

inline Integer bgp_upper_bound(std::size_t n)
{
    Integer b = factorial(2 * n);
    mpz_fdiv_q_2exp(b.get_mpz_t(), b.get_mpz_t(), n);
    return b;
}

// l_n <= (2n)! / 2^n
inline bool bgp_upper_check(std::size_t n, const CountTable &table)
{
    if (n == 0 || n > table.max_n) {
        throw std::out_of_range("bgp_upper_check: need 1 <= n <= max_n");
    }
    return table.l_seq[n] <= bgp_upper_bound(n);
}

} // namespace intord

#endif
