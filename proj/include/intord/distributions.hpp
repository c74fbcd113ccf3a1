#ifndef INTORD_DISTRIBUTIONS_HPP
#define INTORD_DISTRIBUTIONS_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include <intord/asymptotics.hpp>
#include <intord/counts.hpp>
#include <intord/numeric.hpp>

namespace intord
{

enum class Model { unlabelled, labelled };

inline const char *to_string(Model m)
{
    return m == Model::unlabelled ? "unlabelled" : "labelled";
}

// Finite law on {support_offset, support_offset + 1, ...} with exact masses.
// `defect` is probability deliberately left unassigned; masses + defect == 1.
struct Pmf {
    std::size_t support_offset = 0;
    std::vector<Rational> masses;
    Rational defect;

    [[nodiscard]] Rational total() const
    {
        Rational t = defect;
        for (const auto &m : masses) {
            t += m;
        }
        return t;
    }

    [[nodiscard]] Rational mass_at(std::size_t value) const
    {
        if (value < support_offset || value - support_offset >= masses.size()) {
            return Rational{0};
        }
        return masses[value - support_offset];
    }
};

namespace detail
{

inline void check_pmf_range(std::size_t n, const CountTable &table)
{
    if (n == 0 || n > table.max_n) {
        throw std::out_of_range("pmf: need 1 <= n <= max_n");
    }
}

inline Rational exact_ratio(const Integer &num, const Integer &den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace detail

// Law of the size m of the rigid reduction of a uniform random order:
//   unlabelled: r_m C(n-1, m-1) / i_n
//   labelled:   r_m m! S(n, m) / l_n
inline Pmf reduction_size_pmf(Model model, std::size_t n, const CountTable &table)
{
    detail::check_pmf_range(n, table);
    Pmf p;
    p.support_offset = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        if (model == Model::unlabelled) {
            p.masses.push_back(detail::exact_ratio(table.r_seq[m] * binomial(n - 1, m - 1), table.i_seq[n]));
        } else {
            p.masses.push_back(detail::exact_ratio(table.r_seq[m] * surjections(n, m, table), table.l_seq[n]));
        }
    }
    p.defect = Rational(1) - p.total();
    return p;
}

// Law of the number j of duplicated pairs, restricted to orders where no
// three elements share holdings. Mass at j counts reductions on n-j points
// with exactly j doubled points:
//   unlabelled: r_{n-j} C(n-j, j) / i_n
//   labelled:   r_{n-j} (n-j)! M(n, j) / l_n,  M = matchings_lower
// Orders with a triple of equal holdings are carried in `defect`.
inline Pmf pair_pmf(Model model, std::size_t n, const CountTable &table)
{
    detail::check_pmf_range(n, table);
    Pmf p;
    p.support_offset = 0;
    for (std::size_t j = 0; 2 * j <= n; ++j) {
        const std::size_t m = n - j;
        if (model == Model::unlabelled) {
            p.masses.push_back(detail::exact_ratio(table.r_seq[m] * binomial(m, j), table.i_seq[n]));
        } else {
            p.masses.push_back(
                detail::exact_ratio(table.r_seq[m] * table.factorials[m] * matchings_lower(n, j), table.l_seq[n]));
        }
    }
    p.defect = Rational(1) - p.total();
    return p;
}

// e^{-lambda} lambda^j / j! for j = 0..j_max.
inline std::vector<Real> poisson_pmf(const Real &lambda, std::size_t j_max)
{
    if (!(lambda > Real(0, lambda.precision()))) {
        throw std::invalid_argument("poisson_pmf: lambda must be positive");
    }
    std::vector<Real> q;
    q.reserve(j_max + 1);
    Real term = exp(-lambda);
    q.push_back(term);
    for (std::size_t j = 1; j <= j_max; ++j) {
        term = term * lambda / Real(static_cast<long>(j), lambda.precision());
        q.push_back(term);
    }
    return q;
}

// 1/2 sum_j |p_j - q_j| + 1/2 (defect of p + mass of q beyond its last entry).
inline Real tv_distance(const Pmf &p, std::span<const Real> q)
{
    if (q.empty()) {
        throw std::invalid_argument("tv_distance: empty reference law");
    }
    const mpfr_prec_t w = q.front().precision();
    const std::size_t p_end = p.support_offset + p.masses.size();
    if (p_end > q.size()) {
        throw std::invalid_argument("tv_distance: reference law does not cover the support");
    }
    Real l1(w);
    Real q_total(w);
    for (std::size_t j = 0; j < q.size(); ++j) {
        l1 += abs(Real(p.mass_at(j), w) - q[j]);
        q_total += q[j];
    }
    Real tail = Real(1, w) - q_total;
    if (tail < Real(0, w)) {
        tail = Real(w);
    }
    return (l1 + Real(p.defect, w) + tail) / Real(2, w);
}

inline Real poisson_mean(Model model, const AsymptoticConstants &k)
{
    return model == Model::unlabelled ? k.lambda_unlabelled : k.lambda_labelled;
}

} // namespace intord

#endif
