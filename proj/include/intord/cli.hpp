#ifndef INTORD_CLI_HPP
#define INTORD_CLI_HPP

// Subcommand bodies for the `intord` tool. Each writes its report to the
// given stream and returns the process exit status, so tests can drive
// them without spawning processes.

#include <algorithm>
#include <cstddef>
#include <iostream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include <intord/asymptotics.hpp>
#include <intord/counts.hpp>
#include <intord/distributions.hpp>
#include <intord/oracle.hpp>
#include <intord/series.hpp>
#include <intord/tolerances.hpp>

namespace intord::cli
{

using Json = nlohmann::ordered_json;
using intord::to_string;

enum class Format { csv, json, bfile };
enum class Sequence { i, r, l };

struct RunConfig {
    std::size_t max_n = 200;
    long precision_bits = 256;
    Format format = Format::csv;
    Sequence seq = Sequence::i;
    std::size_t oracle_max_n = kOracleMaxPoints;
    Model model = Model::unlabelled;
    std::size_t n = 10;
    // verify only: use the r_n transform with the extra leading i_0 term
    bool transform_with_i0 = false;
};

inline void validate(const RunConfig &cfg)
{
    if (cfg.precision_bits < 64) {
        throw std::invalid_argument("--precision-bits must be at least 64");
    }
    if (cfg.oracle_max_n > kOracleMaxPoints) {
        throw std::invalid_argument("--oracle-max-n must be at most " + std::to_string(kOracleMaxPoints));
    }
}

inline const char *to_string(Format f)
{
    switch (f) {
        case Format::csv:
            return "csv";
        case Format::json:
            return "json";
        case Format::bfile:
            return "bfile";
    }
    return "?";
}

inline const char *to_string(Sequence s)
{
    switch (s) {
        case Sequence::i:
            return "i";
        case Sequence::r:
            return "r";
        case Sequence::l:
            return "l";
    }
    return "?";
}

inline Json config_json(const RunConfig &cfg)
{
    return Json{{"max_n", cfg.max_n},
                {"precision_bits", cfg.precision_bits},
                {"format", to_string(cfg.format)},
                {"seq", to_string(cfg.seq)},
                {"oracle_max_n", cfg.oracle_max_n},
                {"model", to_string(cfg.model)},
                {"n", cfg.n},
                {"transform_with_i0", cfg.transform_with_i0}};
}

inline std::string real_str(const Real &x, int digits = 0)
{
    return x.str(digits);
}

class CheckList
{
public:
    void add(std::string name, std::string anchor, bool pass, std::string detail)
    {
        if (!pass && !m_first_failure) {
            m_first_failure = name;
        }
        m_checks.push_back(Json{{"name", std::move(name)},
                                {"paper_anchor", std::move(anchor)},
                                {"pass", pass},
                                {"detail", std::move(detail)}});
    }
    [[nodiscard]] bool all_pass() const
    {
        return !m_first_failure.has_value();
    }
    [[nodiscard]] const std::optional<std::string> &first_failure() const
    {
        return m_first_failure;
    }
    [[nodiscard]] const Json &json() const
    {
        return m_checks;
    }

private:
    Json m_checks = Json::array();
    std::optional<std::string> m_first_failure;
};

// ---------------------------------------------------------------- counts

inline int cmd_counts(const RunConfig &cfg, std::ostream &out)
{
    validate(cfg);
    const CountTable t = build(cfg.max_n);
    switch (cfg.format) {
        case Format::csv:
            out << "n,i,r,l\n";
            for (std::size_t n = 0; n <= t.max_n; ++n) {
                out << n << ',' << t.i_seq[n] << ',' << t.r_seq[n] << ',' << t.l_seq[n] << '\n';
            }
            break;
        case Format::bfile: {
            const auto &seq = cfg.seq == Sequence::i ? t.i_seq : cfg.seq == Sequence::r ? t.r_seq : t.l_seq;
            for (std::size_t n = 0; n <= t.max_n; ++n) {
                out << n << ' ' << seq[n] << '\n';
            }
            break;
        }
        case Format::json: {
            Json rows = Json::array();
            for (std::size_t n = 0; n <= t.max_n; ++n) {
                rows.push_back(Json{{"n", n},
                                    {"i", to_string(t.i_seq[n])},
                                    {"r", to_string(t.r_seq[n])},
                                    {"l", to_string(t.l_seq[n])}});
            }
            Json doc{{"config", config_json(cfg)}, {"results", Json{{"rows", rows}}}, {"checks", Json::array()}};
            out << doc.dump(2) << '\n';
            break;
        }
    }
    return 0;
}

// ---------------------------------------------------------------- verify

namespace detail
{

inline void oracle_checks(const RunConfig &cfg, const CountTable &t, CheckList &checks)
{
    for (std::size_t n = 0; n <= cfg.oracle_max_n; ++n) {
        OracleCensus c;
        try {
            c = oracle_census(n);
        } catch (const std::logic_error &e) {
            checks.add("oracle_census_n" + std::to_string(n), "interval order: down-sets nested", false, e.what());
            continue;
        }
        const bool counts_ok = Integer(static_cast<unsigned long>(c.unlabelled_interval)) == t.i_seq[n]
                               && Integer(static_cast<unsigned long>(c.rigid_unlabelled)) == t.r_seq[n]
                               && Integer(static_cast<unsigned long>(c.labelled_interval)) == t.l_seq[n];
        std::ostringstream d;
        d << "oracle (i,r,l)=(" << c.unlabelled_interval << ',' << c.rigid_unlabelled << ',' << c.labelled_interval
          << ") formula=(" << t.i_seq[n] << ',' << t.r_seq[n] << ',' << t.l_seq[n] << ')';
        checks.add("oracle_census_n" + std::to_string(n), "I(x), R(x), l_n = sum r_k k! S(n,k)", counts_ok, d.str());

        // classes whose reduction has parts <= 2: r_{n-j} C(n-j, j)
        bool pairs_ok = true;
        std::ostringstream pd;
        for (std::size_t j = 0; n > 0 && 2 * j <= n; ++j) {
            const Integer expected = t.r_seq[n - j] * binomial(n - j, j);
            const auto it = c.pair_histogram_parts_le2.find(j);
            const std::size_t got = it == c.pair_histogram_parts_le2.end() ? 0 : it->second;
            pd << "j=" << j << ":" << got << "/" << expected << ' ';
            pairs_ok = pairs_ok && Integer(static_cast<unsigned long>(got)) == expected;
        }
        if (n >= 1) {
            const auto it = c.pair_histogram.find(1);
            const std::size_t one_pair = it == c.pair_histogram.end() ? 0 : it->second;
            const Integer expected = t.r_seq[n - 1] * static_cast<unsigned long>(n - 1);
            pd << "exactly_one_pair:" << one_pair << "/" << expected;
            pairs_ok = pairs_ok && Integer(static_cast<unsigned long>(one_pair)) == expected;
        }
        if (n == 0) {
            pd << "empty ground set, no pairs";
        }
        checks.add("oracle_pair_counts_n" + std::to_string(n), "exactly k pairs: r_{n-k} C(n-k,k); one pair: r_{n-1}(n-1)",
                   pairs_ok, pd.str());
        checks.add("oracle_rigidity_n" + std::to_string(n), "rigid iff no duplicated holdings",
                   c.rigidity_matches_automorphisms, "trivial automorphism group <=> zero duplicated pairs");
    }
}

} // namespace detail

inline int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err = std::cerr)
{
    validate(cfg);
    const std::size_t N = std::max(cfg.max_n, cfg.oracle_max_n);
    const CountTable t = build(N);
    CheckList checks;

    detail::oracle_checks(cfg, t, checks);

    const TruncSeries I(N, t.i_seq);
    const TruncSeries R(N, t.r_seq);
    checks.add("substitution_R_to_I", "I(x) = R(x/(1-x))", substitute_moebius(R, Sign::minus) == I,
               "order " + std::to_string(N));
    checks.add("substitution_I_to_R", "R(x) = I(x/(1+x))", substitute_moebius(I, Sign::plus) == R,
               "order " + std::to_string(N));
    {
        bool ok = true;
        std::size_t bad = 0;
        for (std::size_t order = 0; order <= N && ok; ++order) {
            for (const TruncSeries *s : {&I, &R}) {
                const TruncSeries base = s->truncated(order);
                const bool trip = substitute_moebius(substitute_moebius(base, Sign::minus), Sign::plus) == base
                                  && substitute_moebius(substitute_moebius(base, Sign::plus), Sign::minus) == base;
                if (!trip) {
                    ok = false;
                    bad = order;
                }
            }
        }
        checks.add("substitution_round_trip", "x/(1-x) and x/(1+x) are inverse substitutions", ok,
                   ok ? "all orders 0.." + std::to_string(N) : "fails at order " + std::to_string(bad));
    }
    {
        bool ok = true;
        std::set<std::string> discrepancies;
        for (std::size_t n = 1; n <= N; ++n) {
            const Integer via = cfg.transform_with_i0 ? rigid_by_transform_with_i0(n, t.i_seq)
                                                      : rigid_by_transform(n, t.i_seq);
            if (via != t.r_seq[n]) {
                ok = false;
                discrepancies.insert(to_string(Integer(via - t.r_seq[n])));
            }
        }
        std::string detail = ok ? "agree for n = 1.." + std::to_string(N) : "transform - gf discrepancies: {";
        if (!ok) {
            bool first = true;
            for (const auto &s : discrepancies) {
                detail += (first ? "" : ",") + s;
                first = false;
            }
            detail += "} over n = 1.." + std::to_string(N);
        }
        checks.add("rigid_gf_vs_transform", "r_n = sum_k (-1)^k C(n-1,k) i_{n-k}", ok, detail);
    }
    {
        bool ok = true;
        for (std::size_t n = 1; n <= N && ok; ++n) {
            ok = multiplicity_identity_check(n, t);
        }
        checks.add("multiplicity_identity", "i_n = sum_m r_m C(n-1,m-1)", ok, "n = 1.." + std::to_string(N));
    }
    {
        bool ok = true;
        for (std::size_t n = 1; n <= N && ok; ++n) {
            ok = bgp_upper_check(n, t);
        }
        checks.add("labelled_upper_bound", "l_n <= (2n)!/2^n", ok, "n = 1.." + std::to_string(N));
    }
    {
        bool ok = true;
        for (std::size_t n = 1; n <= N && ok; ++n) {
            Integer acc;
            for (std::size_t k = 1; k <= n; ++k) {
                acc += t.r_seq[k] * surjections(n, k, t);
            }
            ok = acc == t.l_seq[n];
        }
        checks.add("labelled_decomposition", "l_n = sum r_k k! S(n,k)", ok, "n = 1.." + std::to_string(N));
    }
    {
        bool ok = true;
        for (std::size_t n = 1; n <= N && ok; ++n) {
            ok = t.i_seq[n] > 0 && t.r_seq[n] > 0 && t.r_seq[n] <= t.i_seq[n] && t.i_seq[n] <= t.l_seq[n];
        }
        checks.add("count_ordering", "0 < r_n <= i_n <= l_n", ok, "n = 1.." + std::to_string(N));
    }
    {
        bool ok = true;
        for (std::size_t n = 2; n <= N && ok; ++n) {
            ok = t.S(n, n - 1) == binomial(n, 2);
        }
        checks.add("stirling_near_diagonal", "S(n,n-1) = C(n,2)", ok, "n = 2.." + std::to_string(N));
    }
    {
        bool ok = true;
        for (std::size_t n = 1; n <= N && ok; ++n) {
            for (Model m : {Model::unlabelled, Model::labelled}) {
                const Pmf p = reduction_size_pmf(m, n, t);
                ok = ok && p.defect == 0 && p.total() == 1;
            }
        }
        checks.add("reduction_pmf_normalized", "reduction size laws sum to 1", ok, "n = 1.." + std::to_string(N));
    }

    Json doc{{"config", config_json(cfg)},
             {"results",
              Json{{"table_max_n", N},
                   {"i_max", to_string(t.i_seq[N])},
                   {"r_max", to_string(t.r_seq[N])},
                   {"l_max", to_string(t.l_seq[N])}}},
             {"checks", checks.json()}};
    out << doc.dump(2) << '\n';
    if (!checks.all_pass()) {
        err << "verify: first failing check: " << *checks.first_failure() << '\n';
        return 1;
    }
    return 0;
}

// ---------------------------------------------------------------- asympt

inline std::vector<std::size_t> default_fit_points(std::size_t max_n)
{
    const auto &p = tolerance::fit_points;
    if (max_n >= p.back()) {
        return {p.begin(), p.end()};
    }
    // same 2:3:4 spacing scaled into range
    return {std::max<std::size_t>(1, max_n / 2), std::max<std::size_t>(2, 3 * max_n / 4), std::max<std::size_t>(3, max_n)};
}

inline int cmd_asympt(const RunConfig &cfg, std::ostream &out)
{
    validate(cfg);
    if (cfg.max_n < 3) {
        throw std::invalid_argument("asympt needs --max-n >= 3");
    }
    const auto bits = static_cast<mpfr_prec_t>(cfg.precision_bits);
    const CountTable t = build(cfg.max_n);
    const AsymptoticConstants k = constants(bits);
    CheckList checks;

    Json consts{{"c0", real_str(k.c0)},
                {"d0", real_str(k.d0)},
                {"e0", real_str(k.e0)},
                {"exp_neg_pi2_over_6", real_str(k.exp_neg_pi2_over_6)},
                {"lambda_unlabelled", real_str(k.lambda_unlabelled)},
                {"lambda_labelled", real_str(k.lambda_labelled)}};

    const std::vector<std::size_t> points = default_fit_points(cfg.max_n);
    Json ratios = Json::array();
    std::set<std::size_t> ratio_points{points.begin(), points.end()};
    for (std::size_t n : {std::size_t{10}, std::size_t{25}, std::size_t{50}}) {
        if (n <= cfg.max_n) {
            ratio_points.insert(n);
        }
    }
    for (std::size_t n : ratio_points) {
        ratios.push_back(Json{{"n", n},
                              {"unlabelled", real_str(scaled_ratio(CountKind::unlabelled, n, t, bits), 20)},
                              {"rigid", real_str(scaled_ratio(CountKind::rigid, n, t, bits), 20)},
                              {"labelled", real_str(scaled_ratio(CountKind::labelled, n, t, bits), 20)}});
    }

    Json fits = Json::object();
    FitResult c_fit = extrapolate(CountKind::unlabelled, points, t, bits);
    FitResult r_fit = extrapolate(CountKind::rigid, points, t, bits);
    FitResult l_fit = extrapolate(CountKind::labelled, points, t, bits);
    auto add_fit = [&](const char *name, const FitResult &f, const Real &target, const char *target_name,
                       const char *anchor) {
        const Real rel = relative_error(f.a0, target);
        fits[name] = Json{{"a0", real_str(f.a0, 20)},
                          {"a1", real_str(f.a1, 20)},
                          {"a2", real_str(f.a2, 20)},
                          {"sample_points", f.sample_points},
                          {"residual", real_str(f.residual, 6)},
                          {"a0_relative_error", real_str(rel, 6)}};
        checks.add(std::string("fit_a0_") + name, anchor, rel.to_double() <= tolerance::leading_constant_rel,
                   std::string("a0 vs ") + target_name + " relative error " + real_str(rel, 6));
    };
    add_fit("unlabelled", c_fit, k.c0, "c0", "C_0 = 12 sqrt(3) pi^{-5/2} e^{pi^2/12}");
    add_fit("rigid", r_fit, k.d0, "d0", "D_0 = C_0 e^{-pi^2/6}");
    add_fit("labelled", l_fit, k.e0, "e0", "E_0 = 12 sqrt(3) pi^{-5/2}");

    const D1Consistency d1 = d1_consistency(c_fit, r_fit, k);
    Json d1_json{{"predicted_d1", real_str(d1.predicted_d1, 20)},
                 {"observed_d1", real_str(d1.observed_d1, 20)},
                 {"relative_gap", real_str(d1.relative_gap, 6)}};
    checks.add("d1_consistency", "D_1 = (C_1 + pi^2 C_0 / 4) e^{-pi^2/6}",
               d1.relative_gap.to_double() <= tolerance::d1_rel_gap, "relative gap " + real_str(d1.relative_gap, 6));

    Json proportion = Json::array();
    std::vector<std::pair<std::size_t, double>> gaps;
    for (std::size_t n : {std::size_t{25}, std::size_t{50}, std::size_t{100}, std::size_t{150}, std::size_t{200}}) {
        if (n > cfg.max_n) {
            continue;
        }
        const Real ratio(Rational(t.r_seq[n], t.i_seq[n]), bits);
        const Real gap = abs(ratio - k.exp_neg_pi2_over_6);
        gaps.emplace_back(n, gap.to_double());
        proportion.push_back(
            Json{{"n", n}, {"ratio_rigid_over_unlabelled", real_str(ratio, 20)}, {"gap", real_str(gap, 6)}});
    }
    if (!gaps.empty()) {
        bool decreasing = true;
        for (std::size_t a = 1; a < gaps.size(); ++a) {
            decreasing = decreasing && gaps[a].second < gaps[a - 1].second;
        }
        const bool close = gaps.back().second <= tolerance::rigid_proportion_abs;
        checks.add("rigid_proportion", "r_n / i_n -> e^{-pi^2/6} ~ 0.193025", decreasing && close,
                   "gap at n=" + std::to_string(gaps.back().first) + " is " + std::to_string(gaps.back().second)
                       + (decreasing ? ", decreasing" : ", not decreasing"));
    }

    Json doc{{"config", config_json(cfg)},
             {"results",
              Json{{"constants", consts},
                   {"scaled_ratios", ratios},
                   {"fits", fits},
                   {"d1_consistency", d1_json},
                   {"rigid_proportion", proportion}}},
             {"checks", checks.json()}};
    out << doc.dump(2) << '\n';
    return 0;
}

// ---------------------------------------------------------------- dist

inline Json pmf_json(const Pmf &p)
{
    Json masses = Json::array();
    for (std::size_t idx = 0; idx < p.masses.size(); ++idx) {
        masses.push_back(Json{{"value", p.support_offset + idx}, {"mass", to_string(p.masses[idx])}});
    }
    return Json{{"masses", masses}, {"defect", to_string(p.defect)}};
}

inline int cmd_dist(const RunConfig &cfg, std::ostream &out)
{
    validate(cfg);
    if (cfg.n < 1 || cfg.n > cfg.max_n) {
        throw std::invalid_argument("dist needs 1 <= --n <= --max-n");
    }
    const auto bits = static_cast<mpfr_prec_t>(cfg.precision_bits);
    const CountTable t = build(cfg.max_n);
    const AsymptoticConstants k = constants(bits);
    const Real lambda = poisson_mean(cfg.model, k);
    CheckList checks;

    auto tv_at = [&](std::size_t n) {
        const Pmf p = pair_pmf(cfg.model, n, t);
        const auto q = poisson_pmf(lambda, n);
        return std::make_pair(p, tv_distance(p, q));
    };

    const auto [pairs, tv] = tv_at(cfg.n);
    const Pmf reduction = reduction_size_pmf(cfg.model, cfg.n, t);
    const auto q = poisson_pmf(lambda, cfg.n);
    Json poisson = Json::array();
    for (const Real &v : q) {
        poisson.push_back(real_str(v, 20));
    }

    Json trend = Json::array();
    std::vector<std::size_t> pts;
    for (std::size_t n : tolerance::trend_points) {
        if (n <= cfg.max_n) {
            pts.push_back(n);
        }
    }
    std::string trend_status = "skipped";
    if (pts.size() >= 2) {
        bool tv_decreasing = true;
        bool defect_ok = true;
        Real prev_tv(bits);
        Rational prev_defect;
        for (std::size_t a = 0; a < pts.size(); ++a) {
            const auto [p, d] = tv_at(pts[a]);
            trend.push_back(Json{{"n", pts[a]}, {"tv", real_str(d, 20)}, {"defect", real_str(Real(p.defect, bits), 20)}});
            if (a > 0) {
                tv_decreasing = tv_decreasing && d < prev_tv;
                if (pts[a] == 2 * pts[a - 1]) {
                    defect_ok = defect_ok && p.defect <= Rational(3, 4) * prev_defect;
                }
            }
            prev_tv = d;
            prev_defect = p.defect;
        }
        trend_status = tv_decreasing && defect_ok ? "pass" : "fail";
        checks.add("poisson_trend", std::string("pairs ~ Poisson(") + (cfg.model == Model::unlabelled ? "pi^2/6" : "pi^2/12") + ")",
                   tv_decreasing, "tv decreasing over trend points");
        checks.add("defect_halving", "triples of equal holdings: O(1/n)", defect_ok, "defect(2n) <= 0.75 defect(n)");
    }

    Json doc{{"config", config_json(cfg)},
             {"results",
              Json{{"model", to_string(cfg.model)},
                   {"n", cfg.n},
                   {"pair_pmf", pmf_json(pairs)},
                   {"reduction_size_pmf", pmf_json(reduction)},
                   {"poisson_lambda", real_str(lambda, 20)},
                   {"poisson_reference", poisson},
                   {"tv_distance", real_str(tv, 20)},
                   {"trend_points", trend},
                   {"trend", trend_status}}},
             {"checks", checks.json()}};
    out << doc.dump(2) << '\n';
    return 0;
}

} // namespace intord::cli

#endif
