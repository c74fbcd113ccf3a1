#include <exception>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include <intord/cli.hpp>

int main(int argc, char **argv)
{
    using namespace intord;
    using namespace intord::cli;

    CLI::App app{"Exact and asymptotic enumeration of interval orders"};
    app.require_subcommand(1);

    RunConfig cfg;
    const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}, {"bfile", Format::bfile}};
    const std::map<std::string, Sequence> seqs{{"i", Sequence::i}, {"r", Sequence::r}, {"l", Sequence::l}};
    const std::map<std::string, Model> models{{"unlabelled", Model::unlabelled}, {"labelled", Model::labelled}};

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--max-n", cfg.max_n, "largest n to tabulate")->check(CLI::NonNegativeNumber);
        sub->add_option("--precision-bits", cfg.precision_bits, "working precision for real arithmetic")
            ->check(CLI::Range(64L, 1L << 20));
    };

    auto *counts = app.add_subcommand("counts", "print i_n, r_n, l_n");
    add_common(counts);
    counts->add_option("--format", cfg.format, "csv | json | bfile")->transform(CLI::CheckedTransformer(formats));
    counts->add_option("--seq", cfg.seq, "sequence for bfile output: i | r | l")
        ->transform(CLI::CheckedTransformer(seqs));

    auto *verify = app.add_subcommand("verify", "run exact identity and oracle checks");
    add_common(verify);
    verify->add_option("--oracle-max-n", cfg.oracle_max_n, "brute-force census up to this n (max 5)")
        ->check(CLI::Range(0, static_cast<int>(kOracleMaxPoints)));
    verify->add_flag("--transform-with-i0", cfg.transform_with_i0,
                     "debug: add the leading i_0 term to the rigid binomial transform");

    auto *asympt = app.add_subcommand("asympt", "asymptotic constants, fits and convergence report");
    add_common(asympt);

    auto *dist = app.add_subcommand("dist", "duplicated-pair and reduction-size laws vs Poisson");
    add_common(dist);
    dist->add_option("--model", cfg.model, "unlabelled | labelled")->transform(CLI::CheckedTransformer(models));
    dist->add_option("--n", cfg.n, "ground-set size")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (counts->parsed()) {
            return cmd_counts(cfg, std::cout);
        }
        if (verify->parsed()) {
            return cmd_verify(cfg, std::cout, std::cerr);
        }
        if (asympt->parsed()) {
            return cmd_asympt(cfg, std::cout);
        }
        if (dist->parsed()) {
            return cmd_dist(cfg, std::cout);
        }
    } catch (const std::invalid_argument &e) {
        std::cerr << "intord: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
