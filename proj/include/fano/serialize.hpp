#pragma once

#include <fstream>
#include <string>

#include "json.hpp"

#include "fano/bounds.hpp"
#include "fano/generators.hpp"
#include "fano/planes.hpp"
#include "fano/schubert.hpp"
#include "fano/smoothness.hpp"
#include "fano/veronese.hpp"

namespace fano {

using json = nlohmann::json;

inline json bounds_json(const BoundsReport& b) {
    json j;
    j["r"] = b.r;
    j["e"] = b.e;
    j["d"] = b.d;
    if (b.n) j["n"] = *b.n;
    j["p_r_e"] = b.p_r_e;
    j["n_e_r"] = b.n_e_r;
    if (b.f_e_nr) j["f_e_nr"] = *b.f_e_nr;
    if (b.f_e_nrd) j["f_e_nrd"] = *b.f_e_nrd;
    j["N_e"] = b.N_e;
    j["M_e"] = b.M_e;
    if (b.N_tilde) j["N_tilde"] = *b.N_tilde;
    if (b.N_1_waldron) j["N_1_waldron"] = *b.N_1_waldron;
    j["threshold_nonempty"] = b.threshold_nonempty;
    if (b.n1_prime_min) j["n1_prime_min"] = *b.n1_prime_min;
    if (b.n1_prime_max) j["n1_prime_max"] = *b.n1_prime_max;
    if (b.rho_fiber) j["rho_fiber_dim"] = *b.rho_fiber;
    j["flag_threshold"] = b.flag_thresh;
    if (b.flag_fiber_dim) j["flag_fiber_dim"] = *b.flag_fiber_dim;
    if (b.flag) {
        j["flag_excess"] = b.flag->excess;
        j["flag_empty"] = b.flag->empty;
        j["flag_connected"] = b.flag->connected;
        j["flag_boundary_disconnected"] = b.flag->boundary_disconnected;
    }
    return j;
}

inline json certificate_json(const Certificate& c) {
    json j;
    j["r"] = c.r;
    j["e"] = c.e;
    j["n"] = c.n;
    j["d"] = c.d;
    j["e_generating"] = c.e_generating;
    if (c.image_smooth_c) j["image_smooth_c"] = *c.image_smooth_c;
    if (c.span_smooth_c) j["span_smooth_c"] = *c.span_smooth_c;
    j["c_max"] = c.c_max;
    j["span_c_max"] = c.span_c_max;
    auto trace = [](const std::vector<RankTraceEntry>& t) {
        json arr = json::array();
        for (const auto& e : t) arr.push_back(json{{"c", e.c}, {"rank", e.rank}, {"target", e.target}});
        return arr;
    };
    j["ranks"] = trace(c.ranks);
    j["span_ranks"] = trace(c.span_ranks);
    return j;
}

template <typename T>
json ambient_json(const AmbientForm<T>& G, const FieldSpec& field) {
    json j;
    j["frame"] = json{{"r", G.frame.r}, {"e", G.frame.e}, {"n", G.frame.n}};
    j["degree"] = G.degree();
    j["poly"] = to_text(G.poly, G.frame.scheme());
    j["field"] = field.str();
    return j;
}

// Parsed ambient form: rational coefficients plus the field the file declared.
struct ParsedAmbient {
    AmbientForm<Rational> form;
    FieldSpec field = FieldSpec::Q();
};

inline ParsedAmbient ambient_from_json(const json& j) {
    if (!j.contains("frame") || !j.contains("poly"))
        throw std::domain_error("ambient form JSON needs 'frame' and 'poly'");
    const json& fr = j.at("frame");
    VeroneseFrame frame(fr.at("r").get<int>(), fr.at("e").get<int>(), fr.at("n").get<long long>());
    int degree = j.contains("degree") ? j.at("degree").get<int>() : -1;
    GradedForm<Rational> poly = parse_form(j.at("poly").get<std::string>(), frame.scheme(), degree);
    ParsedAmbient out{AmbientForm<Rational>(frame, std::move(poly)), FieldSpec::Q()};
    if (j.contains("field")) out.field = FieldSpec::parse(j.at("field").get<std::string>());
    return out;
}

inline json generator_request_json(const GeneratorRequest& req) {
    return json{{"r", req.r}, {"b", req.b},         {"m", req.m},
                {"c", req.c}, {"field", req.field.str()}, {"seed", req.seed}};
}

template <typename T>
json system_json(const LinearSystem<T>& sys) {
    json j;
    j["nvars"] = sys.nvars;
    j["degree"] = sys.degree;
    json members = json::array();
    VarScheme scheme = VarScheme::plain(sys.nvars);
    for (const auto& f : sys.members) members.push_back(to_text(f, scheme));
    j["members"] = members;
    return j;
}

inline json sym_poly_json(const SymPoly& p) {
    json terms = json::array();
    std::string text;
    for (const auto& [e, c] : p.terms()) {
        json exps = json::array();
        for (int x : e) exps.push_back(x);
        terms.push_back(json{{"exponents", exps}, {"coeff", c.str()}});
        if (!text.empty()) text += " + ";
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "u" + std::to_string(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (c == 1 && !mono.empty())
            text += mono;
        else
            text += c.str() + (mono.empty() ? "" : "*" + mono);
    }
    json j;
    j["nroots"] = p.nroots();
    j["cap"] = p.cap();
    j["terms"] = terms;
    j["poly"] = text.empty() ? "0" : text;
    return j;
}

// key\tvalue lines with dotted paths, rendered from the (sorted) JSON tree
inline void flatten_tsv(const json& j, const std::string& prefix, std::string& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten_tsv(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_array()) {
        std::size_t idx = 0;
        for (const auto& v : j) flatten_tsv(v, prefix + "." + std::to_string(idx++), out);
    } else {
        out += prefix;
        out += '\t';
        out += j.is_string() ? j.get<std::string>() : j.dump();
        out += '\n';
    }
}

inline std::string render(const json& j, const std::string& format) {
    if (format == "json") return j.dump(2) + "\n";
    if (format == "tsv") {
        std::string out;
        flatten_tsv(j, "", out);
        return out;
    }
    throw std::domain_error("unknown output format '" + format + "'");
}

}  // namespace fano
