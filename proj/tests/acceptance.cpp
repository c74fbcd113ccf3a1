// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <intord/cli.hpp>
#include <intord/intord.hpp>

using namespace intord;

namespace
{

constexpr std::size_t kMaxN = 200;
constexpr mpfr_prec_t kBits = 256;
constexpr double kOracleSeconds = 30.0;
constexpr double kIdentitySeconds = 120.0;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const CountTable &table()
{
    static const CountTable t = build(kMaxN);
    return t;
}

Outcome oracle_equivalence()
{
    const auto t0 = std::chrono::steady_clock::now();
    const CountTable small = build(5);
    bool ok = true;
    std::ostringstream d;
    for (std::size_t n = 0; n <= 5; ++n) {
        const OracleCensus c = oracle_census(n);
        ok = ok && Integer(static_cast<unsigned long>(c.unlabelled_interval)) == small.i_seq[n]
             && Integer(static_cast<unsigned long>(c.rigid_unlabelled)) == small.r_seq[n]
             && Integer(static_cast<unsigned long>(c.labelled_interval)) == small.l_seq[n];
        d << "n=" << n << " (" << c.unlabelled_interval << "," << c.rigid_unlabelled << "," << c.labelled_interval
          << ") ";
    }
    const std::array<long, 6> i_ref{1, 1, 2, 5, 15, 53};
    const std::array<long, 6> r_ref{1, 1, 1, 2, 5, 16};
    const std::array<long, 5> l_ref{1, 1, 3, 19, 207};
    for (std::size_t n = 0; n <= 5; ++n) {
        ok = ok && small.i_seq[n] == i_ref[n] && small.r_seq[n] == r_ref[n];
        if (n < l_ref.size()) {
            ok = ok && small.l_seq[n] == l_ref[n];
        }
    }
    const double secs = seconds_since(t0);
    ok = ok && secs < kOracleSeconds;
    d << "time " << secs << "s";
    return {ok, d.str()};
}

Outcome identity_suite()
{
    const auto t0 = std::chrono::steady_clock::now();
    const CountTable t = build(kMaxN);
    const TruncSeries I(kMaxN, t.i_seq);
    const TruncSeries R(kMaxN, t.r_seq);

    bool round_trip = substitute_moebius(R, Sign::minus) == I && substitute_moebius(I, Sign::plus) == R;
    for (std::size_t order = 0; order <= kMaxN && round_trip; ++order) {
        for (const TruncSeries *s : {&I, &R}) {
            const TruncSeries base = s->truncated(order);
            round_trip = round_trip
                         && substitute_moebius(substitute_moebius(base, Sign::minus), Sign::plus) == base
                         && substitute_moebius(substitute_moebius(base, Sign::plus), Sign::minus) == base;
        }
    }
    bool transform = true, multiplicity = true, upper = true;
    for (std::size_t n = 1; n <= kMaxN; ++n) {
        transform = transform && rigid_by_transform(n, t.i_seq) == t.r_seq[n];
        multiplicity = multiplicity && multiplicity_identity_check(n, t);
        upper = upper && bgp_upper_check(n, t);
    }
    const double secs = seconds_since(t0);
    std::ostringstream d;
    d << "round_trip=" << round_trip << " transform=" << transform << " multiplicity=" << multiplicity
      << " upper_bound=" << upper << " time " << secs << "s";
    return {round_trip && transform && multiplicity && upper && secs < kIdentitySeconds, d.str()};
}

Outcome constant_convergence()
{
    const AsymptoticConstants k = constants(kBits);
    const auto &pts = tolerance::fit_points;
    const Real eu = relative_error(extrapolate(CountKind::unlabelled, pts, table(), kBits).a0, k.c0);
    const Real er = relative_error(extrapolate(CountKind::rigid, pts, table(), kBits).a0, k.d0);
    const Real el = relative_error(extrapolate(CountKind::labelled, pts, table(), kBits).a0, k.e0);
    const double tol = tolerance::leading_constant_rel;
    // closed forms against the rounded reference values
    const bool refs = std::abs(k.c0.to_double() - 2.70433) < 5e-6 && std::abs(k.d0.to_double() - 0.52200) < 5e-6
                      && std::abs(k.e0.to_double() - 1.18814) < 5e-6;
    std::ostringstream d;
    d << "rel err c0=" << eu.str(4) << " d0=" << er.str(4) << " e0=" << el.str(4) << " (tol " << tol << ")";
    return {refs && eu.to_double() <= tol && er.to_double() <= tol && el.to_double() <= tol, d.str()};
}

Outcome rigid_proportion()
{
    const AsymptoticConstants k = constants(kBits);
    auto gap = [&](std::size_t n) {
        return abs(Real(Rational(table().r_seq[n], table().i_seq[n]), kBits) - k.exp_neg_pi2_over_6);
    };
    const Real g100 = gap(100);
    const Real g200 = gap(200);
    const bool reference_value = std::abs(k.exp_neg_pi2_over_6.to_double() - 0.193025) < 5e-7;
    std::ostringstream d;
    d << "gap(100)=" << g100.str(6) << " gap(200)=" << g200.str(6);
    return {reference_value && g200.to_double() <= tolerance::rigid_proportion_abs && g200 < g100, d.str()};
}

Outcome d1_consistency_check()
{
    const AsymptoticConstants k = constants(kBits);
    const auto &pts = tolerance::fit_points;
    const D1Consistency r = d1_consistency(extrapolate(CountKind::unlabelled, pts, table(), kBits),
                                           extrapolate(CountKind::rigid, pts, table(), kBits), k);
    std::ostringstream d;
    d << "predicted=" << r.predicted_d1.str(8) << " observed=" << r.observed_d1.str(8)
      << " gap=" << r.relative_gap.str(4);
    return {r.relative_gap.to_double() <= tolerance::d1_rel_gap, d.str()};
}

Outcome hsu_suite()
{
    const CountTable &t = table();
    bool diag = true, j1 = true;
    for (std::size_t n = 2; n <= kMaxN; ++n) {
        diag = diag && t.S(n, n - 1) == binomial(n, 2);
        j1 = j1 && hsu_check(n, 1, t).ratio_corrected == 1;
    }
    bool improve = true;
    std::ostringstream d;
    for (std::size_t j : {2U, 3U}) {
        const HsuRatios h = hsu_check(kMaxN, j, t);
        const Rational lead = abs(Rational(h.ratio_leading - 1));
        const Rational corr = abs(Rational(h.ratio_corrected - 1));
        improve = improve && corr * tolerance::hsu_improvement_factor <= lead;
        d << "j=" << j << " err " << lead.get_d() << " -> " << corr.get_d() << "; ";
    }
    bool matchings = true;
    for (std::size_t j = 0; j <= 3; ++j) {
        const double ratio = Rational(matchings_lower(kMaxN, j), t.S(kMaxN, kMaxN - j)).get_d();
        matchings = matchings && std::abs(ratio - 1.0) <= tolerance::matchings_rel;
        d << "M/S(j=" << j << ")=" << ratio << " ";
    }
    d << "diag=" << diag << " j1_exact=" << j1;
    return {diag && j1 && improve && matchings, d.str()};
}

Outcome poisson_limits()
{
    const CountTable &t = table();
    const AsymptoticConstants k = constants(kBits);
    bool ok = true;
    std::ostringstream d;
    for (Model m : {Model::unlabelled, Model::labelled}) {
        const Real lambda = poisson_mean(m, k);
        Real prev_tv(kBits);
        Rational prev_defect;
        d << to_string(m) << ":";
        for (std::size_t idx = 0; idx < tolerance::trend_points.size(); ++idx) {
            const std::size_t n = tolerance::trend_points[idx];
            const Pmf p = pair_pmf(m, n, t);
            const Real tv = tv_distance(p, poisson_pmf(lambda, n));
            if (idx > 0) {
                ok = ok && tv < prev_tv;
                ok = ok && p.defect <= Rational(3, 4) * prev_defect;
            }
            d << " tv(" << n << ")=" << tv.str(4);
            prev_tv = tv;
            prev_defect = p.defect;
        }
        d << "; ";
    }
    bool one_pair = true;
    for (std::size_t n = 1; n <= kMaxN; ++n) {
        const Pmf p = pair_pmf(Model::unlabelled, n, t);
        one_pair = one_pair
                   && Rational(p.mass_at(1) * t.i_seq[n]) == Rational(t.r_seq[n - 1] * static_cast<unsigned long>(n - 1));
    }
    d << "one_pair_exact=" << one_pair;
    return {ok && one_pair, d.str()};
}

Outcome determinism()
{
    cli::RunConfig cfg;
    std::ostringstream a, b, ea, eb;
    const int sa = cli::cmd_verify(cfg, a, ea);
    const int sb = cli::cmd_verify(cfg, b, eb);
    std::ostringstream d;
    d << "exit " << sa << "/" << sb << ", " << a.str().size() << " bytes";
    return {sa == 0 && sb == 0 && a.str() == b.str() && ea.str() == eb.str(), d.str()};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 oracle equivalence n<=5", oracle_equivalence},
        {"2 identity suite max_n=200", identity_suite},
        {"3 leading constant convergence", constant_convergence},
        {"4 rigid proportion", rigid_proportion},
        {"5 D1 consistency", d1_consistency_check},
        {"6 Stirling near-diagonal suite", hsu_suite},
        {"7 Poisson limit laws", poisson_limits},
        {"8 verify determinism", determinism},
    };
    int failures = 0;
    for (const auto &[name, fn] : criteria) {
        Outcome o{false, ""};
        try {
            o = fn();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %s :: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
