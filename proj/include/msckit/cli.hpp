#ifndef MSCKIT_CLI_HPP
#define MSCKIT_CLI_HPP

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "msckit/json_io.hpp"

namespace msc::cli {

inline FieldSpec parse_field_arg(std::string s) {
    if (s == "Q" || s == "q") return FieldSpec::rationals();
    if (s.rfind("GF", 0) == 0) {
        std::string num = s.substr(2);
        if (!num.empty() && num.front() == '(') num = num.substr(1);
        if (!num.empty() && num.back() == ')') num.pop_back();
        try {
            return FieldSpec::prime(std::stoull(num));
        } catch (const std::invalid_argument&) {
        } catch (const std::out_of_range&) {
        }
    }
    throw ValidationError("bad field '" + s + "'; use Q or GFp (e.g. GF5)");
}

namespace detail {

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ValidationError("bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

/// Field of an input file, with optional --field override.
inline FieldSpec input_field(const Json& j, const std::optional<std::string>& override_) {
    if (override_) return parse_field_arg(*override_);
    if (!j.contains("field")) throw ValidationError("MSC file lacks \"field\"");
    return field_from_json(j["field"]);
}

template <class F>
Vec<F> parse_vec_arg(const F& field, const std::string& csv, std::size_t n) {
    Vec<F> v;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(field.parse(item));
    if (v.size() != n)
        throw ValidationError("vector '" + csv + "' must have " + std::to_string(n) + " entries");
    return v;
}

struct SampleCount {
    bool exhaustive = false;
    std::uint64_t count = 0;
};

inline SampleCount parse_samples(const std::string& s) {
    if (s == "exhaustive") return {true, 0};
    try {
        return {false, std::stoull(s)};
    } catch (const std::exception&) {
        throw ValidationError("bad --samples '" + s + "' (number or 'exhaustive')");
    }
}

}  // namespace detail

/// Batch front end. JSON result on stdout or --out; messages on stderr.
/// Exit codes: 0 success (negative mathematical verdicts included),
/// 2 usage error, 3 validation error, 4 budget exceeded.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations on algebras given by structure constants"};
    app.require_subcommand(1);

    std::string in_path, in2_path, out_path, field_arg, u_arg, v_arg, c_arg = "0,0,0,0";
    std::string property_arg, samples_arg, mode_arg = "trivial", csv_path;
    std::optional<std::string> field_override;
    unsigned long long budget = kDefaultBudget;
    std::uint64_t seed = 0;
    bool have_seed = false;
    std::size_t workers = 1, target_n = 3, nn = 2;

    auto add_common = [&](CLI::App* cmd, bool needs_in) {
        if (needs_in) cmd->add_option("--in", in_path, "input MSC JSON file")->required();
        cmd->add_option("--out", out_path, "write the JSON result to this file");
        cmd->add_option("--budget", budget, "work budget for exhaustive enumerations");
        cmd->add_option("--workers", workers, "worker threads for scans");
    };

    auto* mul = app.add_subcommand("mul", "multiply two coordinate vectors");
    add_common(mul, true);
    mul->add_option("--u", u_arg, "left factor, comma-separated scalars")->required();
    mul->add_option("--v", v_arg, "right factor, comma-separated scalars")->required();
    mul->add_option("--field", field_arg, "field override (Q or GFp)");

    auto* der = app.add_subcommand("der", "derivation space report");
    add_common(der, true);
    der->add_option("--field", field_arg, "field override");

    auto* aut = app.add_subcommand("aut", "automorphism triviality report");
    add_common(aut, true);
    aut->add_option("--field", field_arg, "field override");

    auto* simple = app.add_subcommand("simple", "simplicity verdict");
    add_common(simple, true);
    simple->add_option("--field", field_arg, "field override");

    auto* iso = app.add_subcommand("iso", "isomorphism test over GF(p)");
    add_common(iso, true);
    iso->add_option("--in2", in2_path, "second MSC JSON file")->required();
    iso->add_option("--field", field_arg, "field override");

    auto* construct = app.add_subcommand("construct", "build an extension tower from a seed");
    add_common(construct, false);
    construct->add_option("--field", field_arg, "ground field (Q or GFp)")->required();
    construct->add_option("--target-n", target_n, "dimension to reach")->required();
    construct->add_option("--mode", mode_arg, "trivial | simple");
    construct->add_option("--c", c_arg, "seed parameters a1,a2,a4,b1");
    construct->add_option("--seed", seed, "rng seed for the parameter search")
        ->required();

    auto* classify = app.add_subcommand("classify", "list classification families");
    add_common(classify, false);
    classify->add_option("--field", field_arg, "ground field")->required();
    classify->add_option("--property", property_arg,
                         "trivder | trivaut | simple | star | dernotaut | autnotder")
        ->required();

    auto* audit = app.add_subcommand("audit", "exhaustive completeness audit over GF(p)");
    add_common(audit, false);
    audit->add_option("--field", field_arg, "GF(p) with p^8 within budget")->required();
    audit->add_option("--property", property_arg, "property table to audit")->required();

    auto* density = app.add_subcommand("density", "census of the three properties");
    add_common(density, false);
    density->add_option("--field", field_arg, "GF(p)")->required();
    density->add_option("--n", nn, "algebra dimension");
    density->add_option("--samples", samples_arg, "sample count or 'exhaustive'")->required();
    auto* seed_opt = density->add_option("--seed", seed, "sampling seed");
    density->add_option("--csv", csv_path, "append a plot-ready CSV row to this file");

    auto* inclusion = app.add_subcommand("inclusion", "TrivAut vs TrivDer difference census");
    add_common(inclusion, false);
    inclusion->add_option("--field", field_arg, "GF(p)")->required();
    inclusion->add_option("--samples", samples_arg, "sample count or 'exhaustive'")->required();
    auto* seed_opt2 = inclusion->add_option("--seed", seed, "sampling seed");

    args.insert(args.begin(), "msckit");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    auto emit = [&](const Json& j) {
        std::string text = j.dump(2) + "\n";
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            if (!f) throw ValidationError("cannot write '" + out_path + "'");
            f << text;
        } else {
            out << text;
        }
    };

    if (!field_arg.empty()) field_override = field_arg;

    try {
        if (mul->parsed() || der->parsed() || aut->parsed() || simple->parsed()) {
            Json j = detail::load_json_file(in_path);
            FieldSpec spec = detail::input_field(j, field_override);
            Json result = with_field(spec, [&](auto field) -> Json {
                auto A = msc_from_json(j, field);
                if (mul->parsed()) {
                    auto u = detail::parse_vec_arg(field, u_arg, A.dim());
                    auto v = detail::parse_vec_arg(field, v_arg, A.dim());
                    return Json{{"product", vec_to_json(field, multiply(A, u, v))}};
                }
                if (der->parsed()) return der_report_to_json(A);
                if (aut->parsed()) {
                    auto verdict = decide_trivial_aut(A, budget);
                    using FT = decltype(field);
                    if constexpr (std::is_same_v<std::decay_t<FT>, PrimeField>) {
                        if (gl_order(A.dim(), field.size()) <= budget)
                            verdict.order = enumerate_automorphisms(A, budget).size();
                    }
                    return aut_verdict_to_json(verdict);
                }
                return simple_verdict_to_json(decide_simple(A));
            });
            emit(result);
            return 0;
        }

        if (iso->parsed()) {
            Json j1 = detail::load_json_file(in_path);
            Json j2 = detail::load_json_file(in2_path);
            FieldSpec spec = detail::input_field(j1, field_override);
            FieldSpec spec2 = detail::input_field(j2, field_override);
            if (!(spec == spec2)) throw ValidationError("iso: the two files use different fields");
            if (spec.kind != FieldSpec::Kind::PrimeField)
                throw ValidationError("iso requires GF(p)");
            PrimeField field(spec.p);
            auto A = msc_from_json(j1, field);
            auto B = msc_from_json(j2, field);
            auto witness = are_isomorphic(A, B, budget);
            Json result{{"isomorphic", witness.has_value()}};
            if (witness) result["witness"] = matrix_to_json(*witness);
            emit(result);
            return 0;
        }

        if (construct->parsed()) {
            FieldSpec spec = parse_field_arg(field_arg);
            ChainMode mode;
            if (mode_arg == "trivial") {
                mode = ChainMode::TrivialOnly;
            } else if (mode_arg == "simple") {
                mode = ChainMode::SimpleToo;
            } else {
                err << "usage error: --mode must be trivial or simple\n";
                return 2;
            }
            Json result = with_field(spec, [&](auto field) -> Json {
                using FT = std::decay_t<decltype(field)>;
                auto cvals = detail::parse_vec_arg(field, c_arg, 4);
                SeedParams<FT> c{cvals[0], cvals[1], cvals[2], cvals[3]};
                Rng rng(seed);
                auto tower = chain(c, field, target_n, mode, rng, 1000, budget);
                return chain_to_json(tower);
            });
            emit(result);
            return 0;
        }

        if (classify->parsed() || audit->parsed()) {
            FieldSpec spec = parse_field_arg(field_arg);
            auto prop = prop_from_name(property_arg);
            if (!prop) {
                err << "usage error: unknown property '" << property_arg << "'\n";
                return 2;
            }
            if (classify->parsed()) {
                Json fams = Json::array();
                for (const auto& fam : table(spec, *prop)) {
                    Json fj = family_to_json(fam);
                    if (spec.kind == FieldSpec::Kind::PrimeField) {
                        PrimeField field(spec.p);
                        fj["instance_count"] = enumerate_instances(fam, field, budget).size();
                    }
                    fams.push_back(std::move(fj));
                }
                emit(Json{{"field", field_to_json(spec)},
                          {"property", prop_name(*prop)},
                          {"families", fams}});
                return 0;
            }
            if (spec.kind != FieldSpec::Kind::PrimeField)
                throw ValidationError("audit requires GF(p)");
            emit(audit_report_to_json(audit_completeness(PrimeField(spec.p), *prop, budget)));
            return 0;
        }

        if (density->parsed() || inclusion->parsed()) {
            FieldSpec spec = parse_field_arg(field_arg);
            if (spec.kind != FieldSpec::Kind::PrimeField)
                throw ValidationError("scans require GF(p); over Q there is no uniform measure");
            PrimeField field(spec.p);
            auto samples = detail::parse_samples(samples_arg);
            have_seed = density->parsed() ? seed_opt->count() > 0 : seed_opt2->count() > 0;
            if (!samples.exhaustive && !have_seed) {
                err << "usage error: sampled scans need an explicit --seed\n";
                return 2;
            }
            if (density->parsed()) {
                auto rep = samples.exhaustive
                               ? density_scan(field, nn, Exhaustive{}, workers, budget)
                               : density_scan(field, nn, samples.count, seed, workers, budget);
                if (!csv_path.empty()) {
                    std::ofstream csv(csv_path, std::ios::app);
                    if (!csv) throw ValidationError("cannot write '" + csv_path + "'");
                    csv.seekp(0, std::ios::end);
                    if (csv.tellp() == 0) csv << density_csv_header();
                    csv << density_csv_row(rep);
                }
                emit(density_report_to_json(rep));
            } else {
                auto rep = samples.exhaustive ? inclusion_scan(field, Exhaustive{}, budget)
                                              : inclusion_scan(field, samples.count, seed, workers);
                emit(inclusion_report_to_json(rep));
            }
            return 0;
        }
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 4;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace msc::cli

#endif  // MSCKIT_CLI_HPP
