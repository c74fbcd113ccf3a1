#ifndef INTORD_ASYMPTOTICS_HPP
#define INTORD_ASYMPTOTICS_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <intord/counts.hpp>
#include <intord/numeric.hpp>

namespace intord
{

inline constexpr mpfr_prec_t kGuardBits = 16;

// Leading constants of the three expansions
//   i_n ~ n! sqrt(n) (6/pi^2)^n     (c0 + ...)
//   r_n ~ n! sqrt(n) (6/pi^2)^n     (d0 + ...)
//   l_n ~ (n!)^2 sqrt(n) (6/pi^2)^n (e0 + ...)
// and the Poisson means of the duplicated-pair counts.
struct AsymptoticConstants {
    mpfr_prec_t precision_bits = Real::default_precision;
    Real pi;
    Real c0;                 // 12 sqrt(3) pi^{-5/2} e^{pi^2/12}
    Real d0;                 // 12 sqrt(3) pi^{-5/2} e^{-pi^2/12}
    Real e0;                 // 12 sqrt(3) pi^{-5/2}
    Real exp_neg_pi2_over_6; // e^{-pi^2/6}
    Real exp_pi2_over_12;    // e^{pi^2/12}
    Real lambda_unlabelled;  // pi^2/6
    Real lambda_labelled;    // pi^2/12
};

inline AsymptoticConstants constants(mpfr_prec_t precision_bits = Real::default_precision)
{
    if (precision_bits < 64) {
        throw std::invalid_argument("constants: precision_bits must be at least 64");
    }
    const mpfr_prec_t w = precision_bits + kGuardBits;
    const Real pi = Real::pi(w);
    const Real pi2 = pi * pi;
    const Real e0 = Real(12, w) * sqrt(Real(3, w)) / pow(pi, Real(Rational(5, 2), w));
    const Real exp_pi2_12 = exp(pi2 / Real(12, w));
    const Real exp_neg_pi2_6 = exp(-(pi2 / Real(6, w)));

    AsymptoticConstants k;
    k.precision_bits = precision_bits;
    k.pi = pi.rounded(precision_bits);
    k.e0 = e0.rounded(precision_bits);
    k.c0 = (e0 * exp_pi2_12).rounded(precision_bits);
    k.d0 = (e0 / exp_pi2_12).rounded(precision_bits);
    k.exp_neg_pi2_over_6 = exp_neg_pi2_6.rounded(precision_bits);
    k.exp_pi2_over_12 = exp_pi2_12.rounded(precision_bits);
    k.lambda_unlabelled = (pi2 / Real(6, w)).rounded(precision_bits);
    k.lambda_labelled = (pi2 / Real(12, w)).rounded(precision_bits);
    return k;
}

inline Real relative_error(const Real &value, const Real &reference)
{
    return abs((value - reference) / reference);
}

enum class CountKind { unlabelled, rigid, labelled };

inline const char *to_string(CountKind kind)
{
    switch (kind) {
        case CountKind::unlabelled:
            return "unlabelled";
        case CountKind::rigid:
            return "rigid";
        case CountKind::labelled:
            return "labelled";
    }
    return "?";
}

inline const Integer &count_of(CountKind kind, std::size_t n, const CountTable &table)
{
    switch (kind) {
        case CountKind::unlabelled:
            return table.i_seq.at(n);
        case CountKind::rigid:
            return table.r_seq.at(n);
        case CountKind::labelled:
            return table.l_seq.at(n);
    }
    throw std::invalid_argument("count_of: unknown kind");
}

// count / (n! sqrt(n) (6/pi^2)^n), with an extra 1/n! for the labelled kind.
// The factorials are divided out exactly before rounding.
inline Real scaled_ratio(CountKind kind, std::size_t n, const CountTable &table,
                         mpfr_prec_t precision_bits = Real::default_precision)
{
    if (n == 0 || n > table.max_n) {
        throw std::out_of_range("scaled_ratio: need 1 <= n <= max_n");
    }
    const mpfr_prec_t w = precision_bits + kGuardBits;
    Integer denom = table.factorials[n];
    if (kind == CountKind::labelled) {
        denom *= table.factorials[n];
    }
    const Rational exact(count_of(kind, n, table), denom);
    const Real pi = Real::pi(w);
    const Real growth = pow(Real(6, w) / (pi * pi), static_cast<long>(n));
    const Real nn(static_cast<long>(n), w);
    return (Real(exact, w) / (sqrt(nn) * growth)).rounded(precision_bits);
}

// ratio(n) ~ a0 + a1/n + a2/n^2 over the sample points.
struct FitResult {
    Real a0;
    Real a1;
    Real a2;
    std::vector<std::size_t> sample_points;
    Real residual; // max |fit(n) - ratio(n)| over sample_points
};

namespace detail
{

// Gaussian elimination with partial pivoting on a small dense system.
inline std::vector<Real> solve_dense(std::vector<std::vector<Real>> a, std::vector<Real> b)
{
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (abs(a[r][col]) > abs(a[piv][col])) {
                piv = r;
            }
        }
        if (mpfr_zero_p(a[piv][col].get()) != 0) {
            throw std::invalid_argument("extrapolate: singular system");
        }
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Real f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    std::vector<Real> x(n, Real(b[0].precision()));
    for (std::size_t i = n; i-- > 0;) {
        Real s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) {
            s -= a[i][c] * x[c];
        }
        x[i] = s / a[i][i];
    }
    return x;
}

} // namespace detail

// Fits a0 + a1/n + a2/n^2 to (n, value) samples: exact interpolation for
// three points, least squares (normal equations) beyond that.
inline FitResult fit_expansion(std::span<const std::pair<std::size_t, Real>> samples,
                               mpfr_prec_t precision_bits = Real::default_precision)
{
    if (samples.size() < 3) {
        throw std::invalid_argument("extrapolate: need at least 3 sample points");
    }
    std::vector<std::size_t> points;
    for (const auto &s : samples) {
        if (s.first == 0) {
            throw std::invalid_argument("extrapolate: sample point n must be positive");
        }
        points.push_back(s.first);
    }
    std::vector<std::size_t> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("extrapolate: duplicate sample points make the system singular");
    }

    // Normal equations at doubled precision; for three points they reduce
    // to the interpolation system up to rounding.
    const mpfr_prec_t w = 2 * precision_bits + kGuardBits;
    auto basis = [w](std::size_t n) {
        const Real inv = Real(1, w) / Real(static_cast<long>(n), w);
        return std::vector<Real>{Real(1, w), inv, inv * inv};
    };

    std::vector<Real> coef;
    if (samples.size() == 3) {
        std::vector<std::vector<Real>> a;
        std::vector<Real> b;
        for (const auto &[n, v] : samples) {
            a.push_back(basis(n));
            b.push_back(v.rounded(w));
        }
        coef = detail::solve_dense(std::move(a), std::move(b));
    } else {
        std::vector<std::vector<Real>> ata(3, std::vector<Real>(3, Real(w)));
        std::vector<Real> atb(3, Real(w));
        for (const auto &[n, v] : samples) {
            const auto row = basis(n);
            for (std::size_t i = 0; i < 3; ++i) {
                for (std::size_t j = 0; j < 3; ++j) {
                    ata[i][j] += row[i] * row[j];
                }
                atb[i] += row[i] * v;
            }
        }
        coef = detail::solve_dense(std::move(ata), std::move(atb));
    }

    FitResult fit{coef[0].rounded(precision_bits), coef[1].rounded(precision_bits), coef[2].rounded(precision_bits),
                  points, Real(precision_bits)};
    for (const auto &[n, v] : samples) {
        const auto row = basis(n);
        const Real model = coef[0] * row[0] + coef[1] * row[1] + coef[2] * row[2];
        const Real dev = abs(model - v).rounded(precision_bits);
        if (dev > fit.residual) {
            fit.residual = dev;
        }
    }
    return fit;
}

inline FitResult extrapolate(CountKind kind, std::span<const std::size_t> n_points, const CountTable &table,
                             mpfr_prec_t precision_bits = Real::default_precision)
{
    std::vector<std::pair<std::size_t, Real>> samples;
    for (std::size_t n : n_points) {
        if (n == 0 || n > table.max_n) {
            throw std::out_of_range("extrapolate: sample point outside 1..max_n");
        }
    }
    // duplicates are rejected by fit_expansion
    for (std::size_t n : n_points) {
        samples.emplace_back(n, scaled_ratio(kind, n, table, precision_bits));
    }
    return fit_expansion(samples, precision_bits);
}

struct D1Consistency {
    Real predicted_d1; // (C1 + pi^2/4 C0) e^{-pi^2/6}, C1 taken from the unlabelled fit
    Real observed_d1;  // a1 of the rigid fit
    Real relative_gap; // |predicted - observed| / |observed|
};

inline D1Consistency d1_consistency(const FitResult &c_fit, const FitResult &r_fit, const AsymptoticConstants &k)
{
    if (c_fit.sample_points != r_fit.sample_points) {
        throw std::invalid_argument("d1_consistency: fits must share sample points");
    }
    const mpfr_prec_t w = k.precision_bits;
    const Real predicted = (c_fit.a1 + k.pi * k.pi / Real(4, w) * k.c0) * k.exp_neg_pi2_over_6;
    Real gap = abs(predicted - r_fit.a1);
    if (mpfr_zero_p(r_fit.a1.get()) == 0) {
        gap /= abs(r_fit.a1);
    }
    return {predicted, r_fit.a1, gap};
}

// Leading and first-corrected ratios of the fixed-j Stirling expansion
//   S(n, n-j) ~ (n-j)^{2j} / (j! 2^j) (1 + f1(j)/(n-j) + ...),  f1(j) = j(2j+1)/3.
// Both are exact rationals.
struct HsuRatios {
    Rational ratio_leading;
    Rational ratio_corrected;
};

inline Rational hsu_f1(std::size_t j)
{
    Rational f(static_cast<long>(j * (2 * j + 1)), 3);
    f.canonicalize();
    return f;
}

inline HsuRatios hsu_check(std::size_t n, std::size_t j, const CountTable &table)
{
    if (j >= n || n > table.max_n) {
        throw std::out_of_range("hsu_check: need 0 <= j < n <= max_n");
    }
    const std::size_t m = n - j;
    Integer num = table.S(n, m) * factorial(j);
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), j);
    Rational leading(num, pow_ui(Integer(static_cast<unsigned long>(m)), 2 * j));
    leading.canonicalize();
    Rational correction = Rational(1) + hsu_f1(j) / Rational(static_cast<long>(m));
    Rational corrected = leading / correction;
    corrected.canonicalize();
    return {leading, corrected};
}

// Partitions of [n] into n-j blocks of size at most 2:
//   n (n-1) ... (n-2j+1) / (j! 2^j).
inline Integer matchings_lower(std::size_t n, std::size_t j)
{
    if (2 * j > n) {
        return Integer{0};
    }
    Integer r = falling_factorial(n, 2 * j);
    r /= factorial(j);
    mpz_fdiv_q_2exp(r.get_mpz_t(), r.get_mpz_t(), j);
    return r;
}

} // namespace intord

#endif
