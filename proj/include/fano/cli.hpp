#pragma once

#include <cctype>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "fano/construct.hpp"
#include "fano/serialize.hpp"

namespace fano {
namespace cli {

namespace detail {

inline std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::domain_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

// Largest var index + 1, keyed on letter-then-digits (exponent digits follow
// '^', so they never match).
inline int infer_nvars(const std::string& text) {
    int max_index = -1;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (!std::isalpha(static_cast<unsigned char>(text[i]))) continue;
        std::size_t j = i + 1;
        long long idx = -1;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
            idx = (idx < 0 ? 0 : idx) * 10 + (text[j] - '0');
            ++j;
        }
        if (idx > max_index) max_index = static_cast<int>(idx);
        i = j - 1;
    }
    if (max_index < 0) throw std::domain_error("cannot infer the variable count; pass --n");
    return max_index + 1;
}

template <typename Fn>
json with_field_ops(const FieldSpec& fs, Fn&& fn) {
    if (fs.rational) return fn(RationalFieldOps{});
    return fn(PrimeFieldOps(fs.p));
}

// certify/tangent input: AmbientForm JSON or bare text plus an explicit frame.
inline ParsedAmbient load_ambient(const std::string& path, bool have_frame, int r, int e,
                                  long long n, const std::string& field_str) {
    std::string text = slurp(path);
    if (looks_like_json(text)) return ambient_from_json(json::parse(text));
    if (!have_frame)
        throw std::domain_error("bare polynomial input needs --r, --e and --n");
    VeroneseFrame frame(r, e, n);
    ParsedAmbient pa;
    pa.form = AmbientForm<Rational>(frame, parse_form(text, frame.scheme()));
    pa.field = FieldSpec::parse(field_str);
    return pa;
}

template <typename Fn>
auto over_parsed_field(const ParsedAmbient& pa, Fn&& fn) {
    if (pa.field.rational) return fn(pa.form);
    FpCtx F(pa.field.p);
    return fn(AmbientForm<Fp>(pa.form.frame, to_prime_field(pa.form.poly, F)));
}

}  // namespace detail

// Full command dispatcher; returns the process exit status.
//   0  success (help included)
//   1  domain/range errors, failed searches (message on err)
//   2  internal cross-check failures
//   64 unknown subcommand/flags, missing required flags (usage on err)
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fano schemes of linear spaces and Veronese varieties in hypersurfaces"};
    app.name("fano");
    app.require_subcommand(1);

    std::string out_path, format = "json";
    int threads = 1;
    app.add_option("--out", out_path, "write the report to this file instead of stdout");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--threads", threads, "worker cap (validated; execution is sequential)")
        ->check(CLI::Range(1, 1 << 16));

    json result;
    bool produced = false;
    auto emit = [&](json j) {
        result = std::move(j);
        produced = true;
    };
    auto sub = [](CLI::App* parent, const std::string& name, const std::string& desc) {
        CLI::App* s = parent->add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    // ---- bounds ----------------------------------------------------------
    int bo_r = 1, bo_d = 1, bo_e = 1;
    long long bo_n = 0;
    CLI::App* bounds_cmd = sub(&app, "bounds", "numerology report for (r, d, e[, n])");
    bounds_cmd->add_option("--r", bo_r, "projective dimension of the source space")->required();
    bounds_cmd->add_option("--d", bo_d, "hypersurface degree")->required();
    bounds_cmd->add_option("--e", bo_e, "Veronese degree");
    bounds_cmd->add_option("--n", bo_n, "ambient projective dimension");
    bounds_cmd->callback([&] {
        std::optional<long long> n_opt;
        if (bounds_cmd->count("--n")) n_opt = bo_n;
        emit(bounds_json(compute_bounds(bo_r, bo_d, bo_e, n_opt)));
    });

    // ---- construct -------------------------------------------------------
    CLI::App* construct_cmd = sub(&app, "construct", "seeded hypersurface constructions");
    construct_cmd->require_subcommand(1);
    std::string co_field = "2147483647";
    std::uint64_t co_seed = 0;
    int co_r = 1, co_d = 3, co_e = 2;
    long long co_n = 0, co_a = 1, co_b = 0;
    auto add_construct_common = [&](CLI::App* s) {
        s->add_option("--field", co_field, "coefficient field: Q or a prime");
        s->add_option("--seed", co_seed, "RNG seed");
    };

    CLI::App* waldron_cmd =
        sub(construct_cmd, "waldron", "degree-d form smooth along a linear space");
    waldron_cmd->add_option("--r", co_r)->required();
    waldron_cmd->add_option("--d", co_d)->required();
    waldron_cmd->add_option("--n", co_n)->required();
    add_construct_common(waldron_cmd);
    waldron_cmd->callback([&] {
        emit(detail::with_field_ops(FieldSpec::parse(co_field), [&](const auto& ops) {
            auto G = waldron_form(ops, co_r, co_d, static_cast<int>(co_n), co_seed);
            Certificate cert = certify_smooth_point(G);
            long long tangent = tangent_dim_linear(G);
            long long expected = fano_expected_dim(co_n, co_r, co_d, 1);
            if (!cert.e_generating || tangent != expected)
                throw internal_error("construct waldron: certificate re-verification failed");
            json j = ambient_json(G, ops.spec());
            j["seed"] = co_seed;
            j["certificate"] = certificate_json(cert);
            j["tangent_dim"] = tangent;
            j["expected_dim"] = expected;
            return j;
        }));
    });

    CLI::App* nenashev_cmd =
        sub(construct_cmd, "nenashev", "degree-de form smooth along a Veronese variety");
    nenashev_cmd->add_option("--r", co_r)->required();
    nenashev_cmd->add_option("--e", co_e)->required();
    nenashev_cmd->add_option("--d", co_d)->required();
    nenashev_cmd->add_option("--n", co_n)->required();
    add_construct_common(nenashev_cmd);
    nenashev_cmd->callback([&] {
        emit(detail::with_field_ops(FieldSpec::parse(co_field), [&](const auto& ops) {
            auto G = nenashev_form(ops, co_r, co_e, co_d, static_cast<int>(co_n), co_seed);
            Certificate cert = certify_smooth_point(G);
            if (!cert.e_generating)
                throw internal_error("construct nenashev: certificate re-verification failed");
            json j = ambient_json(G, ops.spec());
            j["seed"] = co_seed;
            j["certificate"] = certificate_json(cert);
            return j;
        }));
    });

    CLI::App* pencil_cmd =
        sub(construct_cmd, "pencil", "member G_{a,b} of the universal smooth pencil");
    pencil_cmd->add_option("--r", co_r)->required();
    pencil_cmd->add_option("--d", co_d)->required();
    pencil_cmd->add_option("--n", co_n)->required();
    pencil_cmd->add_option("--a", co_a, "pencil parameter a")->required();
    pencil_cmd->add_option("--b", co_b, "pencil parameter b")->required();
    add_construct_common(pencil_cmd);
    pencil_cmd->callback([&] {
        emit(detail::with_field_ops(FieldSpec::parse(co_field), [&](const auto& ops) {
            auto G = pencil_form(ops, co_r, co_d, static_cast<int>(co_n), co_a, co_b, co_seed);
            Certificate cert = certify_smooth_point(G);
            long long tangent = tangent_dim_linear(G);
            long long expected = fano_expected_dim(co_n, co_r, co_d, 1);
            if (!cert.e_generating || tangent != expected)
                throw internal_error("construct pencil: certificate re-verification failed");
            json j = ambient_json(G, ops.spec());
            j["a"] = co_a;
            j["b"] = co_b;
            j["seed"] = co_seed;
            j["certificate"] = certificate_json(cert);
            j["tangent_dim"] = tangent;
            j["expected_dim"] = expected;
            return j;
        }));
    });

    CLI::App* quadric_cmd =
        sub(construct_cmd, "quadric-veronese", "smooth quadric containing the Veronese variety");
    quadric_cmd->add_option("--r", co_r)->required();
    quadric_cmd->add_option("--e", co_e)->required();
    quadric_cmd->add_option("--n", co_n)->required();
    add_construct_common(quadric_cmd);
    quadric_cmd->callback([&] {
        emit(detail::with_field_ops(FieldSpec::parse(co_field), [&](const auto& ops) {
            auto G = quadric_through_veronese(ops, co_r, co_e, static_cast<int>(co_n), co_seed);
            bool gram_ok = !sc_is_zero(det(gram_matrix(G.poly)));
            bool pullback_zero = veronese_pullback(G.frame, G.poly).is_zero();
            if (!gram_ok || !pullback_zero)
                throw internal_error("construct quadric-veronese: re-verification failed");
            json j = ambient_json(G, ops.spec());
            j["seed"] = co_seed;
            j["checks"] = json{{"gram_nonsingular", gram_ok}, {"pullback_zero", pullback_zero}};
            return j;
        }));
    });

    // ---- certify / tangent ----------------------------------------------
    std::string ce_poly, ce_field = "Q";
    int ce_r = 1, ce_e = 1;
    long long ce_n = 0;
    auto add_ambient_input = [&](CLI::App* s) {
        s->add_option("--poly", ce_poly, "polynomial file (text grammar or serialized form)")
            ->required();
        s->add_option("--r", ce_r, "frame r (bare text input only)");
        s->add_option("--e", ce_e, "frame e (bare text input only)");
        s->add_option("--n", ce_n, "frame n (bare text input only)");
        s->add_option("--field", ce_field, "coefficient field for bare text input");
    };
    auto frame_given = [](CLI::App* s) {
        return s->count("--r") && s->count("--e") && s->count("--n");
    };

    CLI::App* certify_cmd = sub(&app, "certify", "smooth-point certificate for a form");
    add_ambient_input(certify_cmd);
    certify_cmd->callback([&] {
        ParsedAmbient pa =
            detail::load_ambient(ce_poly, frame_given(certify_cmd), ce_r, ce_e, ce_n, ce_field);
        Certificate cert = detail::over_parsed_field(
            pa, [](const auto& G) { return certify_smooth_point(G); });
        emit(certificate_json(cert));
    });

    CLI::App* tangent_cmd = sub(&app, "tangent", "tangent dimension at a linear-space point");
    add_ambient_input(tangent_cmd);
    tangent_cmd->callback([&] {
        ParsedAmbient pa =
            detail::load_ambient(ce_poly, frame_given(tangent_cmd), ce_r, ce_e, ce_n, ce_field);
        long long tangent = detail::over_parsed_field(
            pa, [](const auto& G) { return tangent_dim_linear(G); });
        const VeroneseFrame& fr = pa.form.frame;
        long long expected = fano_expected_dim(fr.n, fr.r, pa.form.degree(), 1);
        emit(json{{"r", fr.r},
                  {"e", fr.e},
                  {"n", fr.n},
                  {"d", pa.form.degree()},
                  {"tangent_dim", tangent},
                  {"expected_dim", expected},
                  {"matches", tangent == expected}});
    });

    // ---- schubert --------------------------------------------------------
    CLI::App* schubert_cmd = sub(&app, "schubert", "intersection-theoretic counts");
    schubert_cmd->require_subcommand(1);
    int sc_r = 1, sc_d = 3, sc_cap = -1;
    long long sc_n = 3;

    CLI::App* count_cmd = sub(schubert_cmd, "count", "number of r-planes when f_1 = 0");
    count_cmd->add_option("--r", sc_r)->required();
    count_cmd->add_option("--n", sc_n)->required();
    count_cmd->add_option("--d", sc_d)->required();
    count_cmd->callback([&] {
        SpaceCount sc = count_linear_spaces(sc_r, static_cast<int>(sc_n), sc_d);
        emit(json{{"r", sc_r},
                  {"n", sc_n},
                  {"d", sc_d},
                  {"f1", fano_expected_dim(sc_n, sc_r, sc_d, 1)},
                  {"count", sc.count.str()},
                  {"d_power", big_pow(BigInt(sc_d), static_cast<unsigned>(sc_r + 1)).str()},
                  {"quotient", sc.quotient.str()}});
    });

    CLI::App* degree_cmd = sub(schubert_cmd, "degree", "Pluecker degree of the Fano scheme");
    degree_cmd->add_option("--r", sc_r)->required();
    degree_cmd->add_option("--n", sc_n)->required();
    degree_cmd->add_option("--d", sc_d)->required();
    degree_cmd->callback([&] {
        BigInt deg = fano_degree(sc_r, static_cast<int>(sc_n), sc_d);
        emit(json{{"r", sc_r},
                  {"n", sc_n},
                  {"d", sc_d},
                  {"f1", fano_expected_dim(sc_n, sc_r, sc_d, 1)},
                  {"degree", deg.str()}});
    });

    CLI::App* poly_cmd = sub(schubert_cmd, "poly", "expanded top Chern class in Chern roots");
    poly_cmd->add_option("--r", sc_r)->required();
    poly_cmd->add_option("--d", sc_d)->required();
    poly_cmd->add_option("--cap", sc_cap, "truncate exponents above this bound");
    poly_cmd->callback([&] {
        SymPoly p = poly_cmd->count("--cap") ? chern_top_poly(sc_r, sc_d, sc_cap)
                                             : chern_top_poly(sc_r, sc_d);
        json j = sym_poly_json(p);
        j["r"] = sc_r;
        j["d"] = sc_d;
        emit(j);
    });

    // ---- enumerate -------------------------------------------------------
    CLI::App* enumerate_cmd = sub(&app, "enumerate", "exhaustive finite-field counts");
    enumerate_cmd->require_subcommand(1);
    std::uint64_t en_q = 0;
    int en_r = 1;
    long long en_n = 0;
    std::string en_poly;

    CLI::App* fano_cmd = sub(enumerate_cmd, "fano", "r-planes on a hypersurface over F_q");
    fano_cmd->add_option("--q", en_q, "prime field order")->required();
    fano_cmd->add_option("--r", en_r)->required();
    fano_cmd->add_option("--poly", en_poly, "polynomial file (text grammar)")->required();
    fano_cmd->add_option("--n", en_n, "ambient projective dimension (else inferred)");
    fano_cmd->callback([&] {
        std::string text = detail::slurp(en_poly);
        int nvars = fano_cmd->count("--n") ? static_cast<int>(en_n) + 1
                                           : detail::infer_nvars(text);
        GradedForm<Rational> f = parse_form(text, VarScheme::plain(nvars));
        FpCtx F(en_q);
        long long count = count_fano_points(to_prime_field(f, F), en_r, en_q);
        emit(json{{"q", en_q}, {"r", en_r}, {"count", count}});
    });

    CLI::App* planes_cmd = sub(enumerate_cmd, "planes", "all r-planes in P^n over F_q");
    planes_cmd->add_option("--n", en_n)->required();
    planes_cmd->add_option("--r", en_r)->required();
    planes_cmd->add_option("--q", en_q)->required();
    planes_cmd->callback([&] {
        long long seen = 0;
        enumerate_planes(static_cast<int>(en_n), en_r, en_q, [&](const PlaneRep&) { ++seen; });
        BigInt expected = plane_count(static_cast<int>(en_n), en_r, en_q);
        if (BigInt(seen) != expected)
            throw internal_error("enumerate planes: stream disagrees with the Gaussian binomial");
        emit(json{{"q", en_q}, {"r", en_r}, {"n", en_n}, {"count", expected.str()}});
    });

    CLI::App* families_cmd =
        sub(enumerate_cmd, "quadric-families", "two families of r-planes on the split quadric");
    families_cmd->add_option("--r", en_r)->required();
    families_cmd->add_option("--q", en_q)->required();
    families_cmd->callback([&] {
        QuadricFamilies qf = quadric_families(en_r, en_q);
        emit(json{{"r", en_r},
                  {"q", en_q},
                  {"family_sizes",
                   json::array({qf.family_sizes.first, qf.family_sizes.second})},
                  {"checks", json{{"cross_intersection_ok", qf.cross_intersection_ok},
                                  {"pairwise_consistent", qf.pairwise_consistent},
                                  {"lambda_same_family", qf.lambda_same_family},
                                  {"gamma_same_family", qf.gamma_same_family}}}});
    });

    // ---- generators ------------------------------------------------------
    CLI::App* generators_cmd = sub(&app, "generators", "c-generating linear systems");
    generators_cmd->require_subcommand(1);
    GeneratorRequest ge_req;
    std::string ge_field = "2147483647";

    CLI::App* find_cmd = sub(generators_cmd, "find", "search for a c-generating system");
    find_cmd->add_option("--r", ge_req.r)->required();
    find_cmd->add_option("--b", ge_req.b, "member degree")->required();
    find_cmd->add_option("--m", ge_req.m, "member count")->required();
    find_cmd->add_option("--c", ge_req.c, "generation order")->required();
    find_cmd->add_option("--field", ge_field, "coefficient field: Q or a prime");
    find_cmd->add_option("--seed", ge_req.seed, "RNG seed");
    find_cmd->callback([&] {
        ge_req.field = FieldSpec::parse(ge_field);
        json j{{"r", ge_req.r}, {"b", ge_req.b},
               {"m", ge_req.m}, {"c", ge_req.c},
               {"field", ge_req.field.str()}, {"seed", ge_req.seed}};
        if (ge_req.field.rational) {
            GeneratorResult<Rational> res = find_generating_system_q(ge_req);
            j["attempts_used"] = res.attempts_used;
            j["system"] = system_json(res.system);
        } else {
            GeneratorResult<Fp> res = find_generating_system_fp(ge_req);
            j["attempts_used"] = res.attempts_used;
            j["system"] = system_json(res.system);
        }
        emit(j);
    });

    // ---- parse + dispatch ------------------------------------------------
    try {
        app.parse(argc, argv);
        if (produced) {
            std::string rendered = render(result, format);
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                if (!f) throw std::domain_error("cannot open '" + out_path + "' for writing");
                f << rendered;
            } else {
                out << rendered;
            }
        }
        return 0;
    } catch (const CLI::CallForHelp&) {
        const CLI::App* cur = &app;
        while (!cur->get_subcommands().empty()) cur = cur->get_subcommands().front();
        out << cur->help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << "\n\n" << app.help();
        return 64;
    } catch (const internal_error& ex) {
        err << "internal error: " << ex.what() << "\n";
        return 2;
    } catch (const search_failure& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    } catch (const json::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::logic_error& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::runtime_error& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    }
}

}  // namespace cli
}  // namespace fano
