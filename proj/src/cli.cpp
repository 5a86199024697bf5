#include "wseq/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "wseq/assoc.hpp"
#include "wseq/conditions.hpp"
#include "wseq/conjugation.hpp"
#include "wseq/families.hpp"
#include "wseq/harness.hpp"
#include "wseq/indices.hpp"
#include "wseq/io.hpp"

namespace wseq {

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A path to a JSON file, or an inline family spec such as "gevrey:s=2".
json json_or_spec(const std::string& s) {
    if (std::filesystem::exists(s)) return read_json_file(s);
    return to_json(parse_descriptor(s));
}

WeightSequence load_sequence(const std::string& s, int J) {
    json j = json_or_spec(s);
    return sequence_from_json(j, j.contains("id") ? J : 0);
}

// Weights: weight JSON, weight/sequence descriptor, or a serialized sequence (its omega_M).
WeightFunction load_weight(const std::string& s, const Config& cfg) {
    json j = json_or_spec(s);
    if (j.contains("log_values")) return associated_weight(sequence_from_json(j));
    return weight_from_json(j, cfg);
}

WeightMatrix load_matrix(const std::string& s, const Config& cfg) {
    json j = json_or_spec(s);
    if (j.contains("log_values")) return make_matrix({1.0}, {sequence_from_json(j)}, "single");
    return matrix_from_json(j, cfg);
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::size_t p = 0;
    while (p <= s.size()) {
        std::size_t q = s.find(',', p);
        if (q == std::string::npos) q = s.size();
        const std::string tok = s.substr(p, q - p);
        try {
            std::size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw Usage("bad number '" + tok + "' in list '" + s + "'");
        }
        p = q + 1;
    }
    return out;
}

int exit_for(Verdict v) { return v == Verdict::Inconclusive ? 2 : 0; }

}  // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"Weight sequences, weight functions and weight matrices: tabulation, conjugation, "
                 "mixed growth conditions and indices"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string format = "json", out;
    int J = 0;
    bool no_ext = false;
    auto common = [&](CLI::App* s) {
        s->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        s->add_option("--out", out, "output path (stdout when omitted)");
        s->add_option("--J", J, "truncation length")->check(CLI::Range(2, 1 << 20));
        s->add_flag("--no-extension", no_ext, "skip the 2J extension check");
    };

    std::string family, seq_in, weight_in, matrix_in, cond, type, kind, m_in, n_in, which, suite, subject;
    std::string lgrid, xgrid;
    double tmin = 0, tmax = 0, xmax = 64;
    int points = 512;

    auto* tab = app.add_subcommand("tabulate", "tabulate a sequence family");
    tab->add_option("--family", family, "family spec, e.g. gevrey:s=1")->required();
    common(tab);

    auto* as = app.add_subcommand("assoc", "associated weight table omega_M");
    auto* as_src = as->add_option_group("source");
    as_src->add_option("--family", family, "sequence family spec");
    as_src->add_option("--seq", seq_in, "sequence JSON file");
    as_src->require_option(1);
    as->add_option("--tmin", tmin, "smallest t (default 1)");
    as->add_option("--tmax", tmax, "largest t (default mu_{J-2})");
    as->add_option("--points", points, "grid points")->check(CLI::Range(16, 1 << 16));
    common(as);

    auto* cj = app.add_subcommand("conjugate", "Young conjugate phi*_omega on a grid");
    cj->add_option("--weight", weight_in, "weight JSON file or spec, e.g. power:rho=0.5")->required();
    cj->add_option("--x", xgrid, "comma-separated arguments");
    cj->add_option("--xmax", xmax, "uniform grid [0, xmax] when --x is absent");
    cj->add_option("--points", points, "grid points")->check(CLI::Range(2, 1 << 16));
    common(cj);

    auto* mx = app.add_subcommand("matrix", "weight matrix from a weight function or a matrix family");
    auto* mx_src = mx->add_option_group("source");
    mx_src->add_option("--weight", weight_in, "weight JSON file or spec (associated matrix Omega)");
    mx_src->add_option("--family", family, "matrix family spec, e.g. gevrey-matrix:xs=1,2");
    mx_src->require_option(1);
    mx->add_option("--lgrid", lgrid, "comma-separated l values");
    common(mx);

    auto* ck = app.add_subcommand("check", "evaluate one condition");
    ck->add_option("--cond", cond, "condition id (see --help-all)")->required();
    ck->add_option("--matrix", matrix_in, "matrix JSON file or spec");
    ck->add_option("--seq", seq_in, "sequence JSON file or spec (lc, mg)");
    ck->add_option("--weight", weight_in, "weight JSON file or spec (omega1, omega3, omega4, omega6)");
    ck->add_option("--type", type, "roumieu or beurling for ids without a type")
        ->check(CLI::IsMember({"roumieu", "beurling"}));
    common(ck);

    auto* ix = app.add_subcommand("index", "mixed growth index");
    ix->add_option("--kind", kind, "beta-L | alpha-omega1 | alpha-mg | beta-omega6")
        ->required()
        ->check(CLI::IsMember({"beta-L", "alpha-omega1", "alpha-mg", "beta-omega6"}));
    ix->add_option("--M", m_in, "smaller sequence (file or spec)")->required();
    ix->add_option("--N", n_in, "larger sequence (file or spec)")->required();
    common(ix);

    auto* rc = app.add_subcommand("reciprocity", "compare an index with the reciprocal of its partner");
    rc->add_option("--which", which, "L or mg")->required()->check(CLI::IsMember({"L", "mg"}));
    rc->add_option("--M", m_in, "smaller sequence (file or spec)")->required();
    rc->add_option("--N", n_in, "larger sequence (file or spec)")->required();
    common(rc);

    auto* hs = app.add_subcommand("harness", "run an equivalence suite");
    hs->add_option("--suite", suite, "lemma31 | thm32 | prop41 | thm39 | thm44 | thm52 | thm56 [-I|-II]")
        ->required();
    hs->add_option("--subject", subject, "family spec or descriptor JSON file")->required();
    common(hs);

    auto* cat = app.add_subcommand("catalog", "list the family catalog");
    common(cat);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e);
        std::cout << "\ncondition ids:\n";
        for (const auto& id : condition_ids()) std::cout << "  " << id << '\n';
        std::cout << "  lc mg omega1 omega3 omega4 omega6\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    Config cfg = default_config();
    if (J > 0) cfg.J = J;
    if (no_ext) cfg.extension_check = false;
    const bool csv = format == "csv";
    auto emit = [&](const json& j) { write_text(out, dump_json(j)); };
    auto json_only = [&] {
        if (csv) throw Usage("CSV output is only available for tabular payloads");
    };

    try {
        if (*tab) {
            WeightSequence M = make_sequence(family, cfg.J);
            if (csv) {
                std::vector<double> js;
                for (int j = 0; j <= M.J(); ++j) js.push_back(j);
                write_text(out, csv_table({"j", "log_M"}, {js, M.log_values}));
            } else {
                emit(to_json(M));
            }
            return 0;
        }
        if (*as) {
            WeightSequence M = family.empty() ? load_sequence(seq_in, cfg.J) : make_sequence(family, cfg.J);
            AssociatedWeightTable t;
            if (tmin > 0 || tmax > 0) {
                const double lo = tmin > 0 ? tmin : 1.0;
                const double hi = tmax > 0 ? tmax : std::exp(quotients(M).log_mu[std::size_t(M.J() - 2)]);
                t = omega_M_table(M, lo, hi, points);
            } else {
                t = omega_M_table(M);
            }
            if (csv)
                write_text(out, csv_table({"t", "omega"}, {t.t_grid, t.values}));
            else
                emit(to_json(t));
            return 0;
        }
        if (*cj) {
            WeightFunction w = load_weight(weight_in, cfg);
            std::vector<double> xs;
            if (!xgrid.empty()) {
                xs = parse_list(xgrid);
            } else {
                for (int i = 0; i < points; ++i) xs.push_back(xmax * i / (points - 1));
            }
            ConjugateTable t = conjugate_table(w, xs);
            if (csv)
                write_text(out, csv_table({"x", "phi_star"}, {t.x_grid, t.values}));
            else
                emit(to_json(t));
            return 0;
        }
        if (*mx) {
            json_only();
            WeightMatrix M;
            if (!family.empty()) {
                FamilyDescriptor d = parse_descriptor(family);
                if (!lgrid.empty() && d.id == "bmt-matrix") d.params["ls"] = parse_list(lgrid);
                M = make_weight_matrix(d, cfg);
            } else {
                M = associated_matrix(load_weight(weight_in, cfg), lgrid.empty() ? cfg.l_grid : parse_list(lgrid),
                                      cfg.J);
            }
            emit(to_json(M));
            return 0;
        }
        if (*ck) {
            json_only();
            ConditionVerdict v;
            if (cond == "lc" || (cond == "mg" && matrix_in.empty())) {
                if (seq_in.empty()) throw Usage("--cond " + cond + " needs --seq");
                WeightSequence M = load_sequence(seq_in, cfg.J);
                v = cond == "lc" ? check_lc(M, cfg) : check_mg_single(M, cfg);
            } else if (cond.rfind("omega", 0) == 0) {
                if (weight_in.empty()) throw Usage("--cond " + cond + " needs --weight");
                WeightFunction w = load_weight(weight_in, cfg);
                if (cond == "omega1") v = check_omega1(w, cfg);
                else if (cond == "omega3") v = check_omega3(w, cfg);
                else if (cond == "omega4") v = check_omega4(w, cfg);
                else if (cond == "omega6") v = check_omega6(w, cfg);
                else throw Usage("unknown condition '" + cond + "'");
            } else {
                if (matrix_in.empty()) throw Usage("--cond " + cond + " needs --matrix");
                std::string id = cond;
                if (id == "L" || id == "mg" || id == "mixed-omega1") {
                    if (type.empty()) throw Usage("--cond " + cond + " needs --type");
                    id += "-" + type;
                }
                MatrixContext ctx(load_matrix(matrix_in, cfg), cfg);
                v = check_condition(id, ctx);
            }
            emit(to_json(v));
            return exit_for(v.verdict);
        }
        if (*ix) {
            json_only();
            WeightSequence M = load_sequence(m_in, cfg.J), N = load_sequence(n_in, cfg.J);
            IndexEstimate e;
            if (kind == "beta-L") {
                e = beta_L(M, N, cfg);
            } else if (kind == "alpha-mg") {
                e = alpha_mg(N, M, cfg);
            } else {
                WeightFunction wM = index_weight(M, cfg), wN = index_weight(N, cfg);
                e = kind == "alpha-omega1" ? alpha_omega1(wM, wN, cfg) : beta_omega6(wN, wM, cfg);
            }
            emit(to_json(e));
            return 0;
        }
        if (*rc) {
            json_only();
            WeightSequence M = load_sequence(m_in, cfg.J), N = load_sequence(n_in, cfg.J);
            ReciprocityReport r = which == "L" ? verify_reciprocity_L(M, N, cfg) : verify_reciprocity_mg(M, N, cfg);
            emit(to_json(r));
            return exit_for(r.verdict);
        }
        if (*hs) {
            json_only();
            FamilyDescriptor d = std::filesystem::exists(subject) ? descriptor_from_json(read_json_file(subject))
                                                                   : parse_descriptor(subject);
            SuiteReport r = run_suite(suite, d, cfg);
            emit(to_json(r));
            return exit_for(r.agreement);
        }
        if (*cat) {
            json_only();
            json a = json::array();
            for (const auto& d : catalog_list()) a.push_back({{"spec", to_string(d)}, {"kind", d.kind()}, {"descriptor", to_json(d)}});
            emit(a);
            return 0;
        }
    } catch (const HorizonError& e) {
        std::cerr << "inconclusive: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

int cli_main(const std::vector<std::string>& args) {
    std::vector<std::string> all = {"wseq"};
    all.insert(all.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : all) argv.push_back(s.data());
    return cli_main(int(argv.size()), argv.data());
}

}  // namespace wseq
