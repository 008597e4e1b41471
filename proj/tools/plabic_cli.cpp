// Copyright 2026 The plabic authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end for the plabic shared library. Talks to the C API
// only; all heavy lifting happens behind the opaque network handle.
#include "plabic.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

struct NetDeleter {
    void operator()(plabic_network* n) const { plabic_network_free(n); }
};
using NetPtr = std::unique_ptr<plabic_network, NetDeleter>;

struct StrDeleter {
    void operator()(char* s) const { plabic_string_free(s); }
};
using StrPtr = std::unique_ptr<char, StrDeleter>;

int exit_code_for(plabic_status st) {
    switch (st) {
        case PLABIC_OK: return 0;
        case PLABIC_ERR_FAILED: return 1;
        case PLABIC_ERR_INVALID: return 1;
        case PLABIC_ERR_PARSE: return 2;
        case PLABIC_ERR_ARG: return 2;
    }
    return 2;
}

int bail(plabic_status st) {
    std::cerr << "error: " << plabic_last_error() << "\n";
    return exit_code_for(st);
}

NetPtr load_network(const std::string& input, const std::string& builtin,
                    const std::string& weights, plabic_status* st) {
    plabic_network* raw = nullptr;
    if (!builtin.empty()) {
        *st = plabic_network_builtin(builtin.c_str(), weights.empty() ? nullptr : weights.c_str(),
                                     &raw);
        return NetPtr(raw);
    }
    std::ifstream in(input);
    if (!in) {
        *st = PLABIC_ERR_PARSE;
        return nullptr;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    *st = plabic_network_parse(buf.str().c_str(), &raw);
    NetPtr net(raw);
    if (*st == PLABIC_OK && !weights.empty()) {
        plabic_network* rw = nullptr;
        *st = plabic_network_reweight(net.get(), weights.c_str(), &rw);
        if (*st == PLABIC_OK) net.reset(rw);
    }
    return net;
}

int emit(const char* text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 2;
    }
    out << text << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"plabic: planar bicolored networks, boundary measurement, KP divisors"};
    app.require_subcommand(1);

    std::string input, builtin, weights, out_path, ray, kappa, t0 = "auto", times, format = "json";
    unsigned long seed = 1;
    double tol = 1e-9;
    (void)tol;

    auto add_common = [&](CLI::App* sub, bool needs_input = true) {
        if (needs_input) {
            sub->add_option("input", input, "network JSON file");
            sub->add_option("--builtin", builtin,
                            "built-in network (gr13_tp, gr24_s34, gr24_tp, gr25_tp, gr23_tp, "
                            "gr12_pocket, gr12_cyclic, gr24_par)");
        }
        sub->add_option("--weights", weights, "comma-separated edge weights (rationals)");
        sub->add_option("--out", out_path, "write the result to a file");
        sub->add_option("--ray", ray, "gauge ray slope p/q (direction (1, p/q))");
        sub->add_option("--seed", seed, "seed for randomized suites");
        sub->add_option("--tol", tol, "numeric tolerance (informational)");
        sub->add_option("--format", format, "json|csv where applicable");
    };

    auto* c_validate = app.add_subcommand("validate", "check the network contract");
    add_common(c_validate);
    auto* c_faces = app.add_subcommand("faces", "faces of the disk and the genus");
    add_common(c_faces);
    auto* c_orient = app.add_subcommand("orientations", "perfect orientations and the matroid");
    add_common(c_orient);
    int cap = 0;
    c_orient->add_option("--cap", cap, "stop after this many orientations");
    auto* c_measure = app.add_subcommand("measure", "boundary measurement matrix and minors");
    add_common(c_measure);
    auto* c_vectors = app.add_subcommand("vectors", "edge vector system");
    add_common(c_vectors);
    auto* c_sig = app.add_subcommand("signature", "geometric edge signature and face parity");
    add_common(c_sig);
    auto* c_divisor = app.add_subcommand("divisor", "KP divisor on the dual curve");
    add_common(c_divisor);
    c_divisor->add_option("--kappa", kappa, "phases kappa_1<...<kappa_n")->required();
    c_divisor->add_option("--t0", t0, "reference time x0 or 'auto'");
    auto* c_soliton = app.add_subcommand("soliton", "tau/u samples and Sato roots");
    add_common(c_soliton);
    c_soliton->add_option("--kappa", kappa, "phases")->required();
    c_soliton->add_option("--times", times, "y,t values (default 0,0)");
    double x_min = -5, x_max = 5;
    int samples = 101;
    c_soliton->add_option("--x-min", x_min, "grid start");
    c_soliton->add_option("--x-max", x_max, "grid end");
    c_soliton->add_option("--samples", samples, "grid size");
    auto* c_move = app.add_subcommand("move", "apply a move or reduction");
    add_common(c_move);
    std::string kind, site, params, other_input, other_builtin;
    c_move->add_option("--kind", kind, "M1|M2|M3-insert|M3-remove|R1|R2|R3|unR1|sum|defrost")
        ->required();
    c_move->add_option("--site", site, "vertex ids (comma separated) or pair index");
    c_move->add_option("--params", params, "move parameters (unR1: p,q; sum: nested,gap)");
    c_move->add_option("--other", other_input, "second network file for sum");
    c_move->add_option("--other-builtin", other_builtin, "second builtin network for sum");
    auto* c_verify = app.add_subcommand("verify", "run the invariant suite");
    add_common(c_verify);
    auto* c_sites = app.add_subcommand("find-sites", "list candidate move sites");
    add_common(c_sites);
    auto* c_fixture = app.add_subcommand("fixture", "print a builtin network as JSON");
    add_common(c_fixture);
    auto* c_le = app.add_subcommand("build-le", "build the Le-diagram network");
    std::string le_json;
    c_le->add_option("diagram", le_json, "Le-diagram JSON file")->required();
    c_le->add_option("--out", out_path, "write the result to a file");

    CLI11_PARSE(app, argc, argv);

    plabic_status st = PLABIC_OK;
    auto need_net = [&]() -> NetPtr {
        auto net = load_network(input, builtin, weights, &st);
        if (!net && st == PLABIC_ERR_PARSE && builtin.empty() && input.empty())
            std::cerr << "error: provide a network file or --builtin\n";
        return net;
    };

    if (c_le->parsed()) {
        std::ifstream in(le_json);
        if (!in) {
            std::cerr << "error: cannot read " << le_json << "\n";
            return 2;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        plabic_network* raw = nullptr;
        st = plabic_build_le(buf.str().c_str(), &raw);
        if (st != PLABIC_OK) return bail(st);
        NetPtr net(raw);
        char* js = nullptr;
        st = plabic_network_to_json(net.get(), &js);
        if (st != PLABIC_OK) return bail(st);
        StrPtr s(js);
        return emit(s.get(), out_path);
    }

    auto net = need_net();
    if (!net) return st == PLABIC_OK ? 2 : exit_code_for(st);
    if (st != PLABIC_OK) return bail(st);

    char* js = nullptr;
    if (c_validate->parsed()) {
        st = plabic_validate(net.get(), &js);
        if (st != PLABIC_OK) return bail(st);
        StrPtr s(js);
        int rc = emit(s.get(), out_path);
        if (rc) return rc;
        return std::string(s.get()).find("\"ok\": true") != std::string::npos ? 0 : 1;
    }
    if (c_faces->parsed()) st = plabic_faces(net.get(), &js);
    else if (c_orient->parsed()) st = plabic_orientations(net.get(), cap, &js);
    else if (c_measure->parsed()) st = plabic_measure(net.get(), ray.empty() ? nullptr : ray.c_str(), &js);
    else if (c_vectors->parsed()) st = plabic_vectors(net.get(), ray.empty() ? nullptr : ray.c_str(), &js);
    else if (c_sig->parsed()) st = plabic_signature(net.get(), ray.empty() ? nullptr : ray.c_str(), &js);
    else if (c_divisor->parsed())
        st = plabic_divisor(net.get(), kappa.c_str(), ray.empty() ? nullptr : ray.c_str(),
                            t0.c_str(), &js);
    else if (c_soliton->parsed())
        st = plabic_soliton(net.get(), kappa.c_str(), times.empty() ? nullptr : times.c_str(),
                            x_min, x_max, samples, &js);
    else if (c_sites->parsed()) st = plabic_find_sites(net.get(), &js);
    else if (c_fixture->parsed()) st = plabic_network_to_json(net.get(), &js);
    else if (c_verify->parsed()) {
        st = plabic_verify(net.get(), seed, &js);
        StrPtr s(js);
        if (js) emit(s.get(), out_path);
        if (st != PLABIC_OK) {
            std::cerr << "error: " << plabic_last_error() << "\n";
            return exit_code_for(st);
        }
        return 0;
    } else if (c_move->parsed()) {
        NetPtr other;
        if (!other_input.empty() || !other_builtin.empty()) {
            plabic_status st2 = PLABIC_OK;
            std::string no_weights;
            other = load_network(other_input, other_builtin, no_weights, &st2);
            if (st2 != PLABIC_OK) return bail(st2);
        }
        plabic_network* res = nullptr;
        char* delta = nullptr;
        st = plabic_move(net.get(), kind.c_str(), site.empty() ? nullptr : site.c_str(),
                         params.empty() ? nullptr : params.c_str(), other.get(), &res, &delta);
        if (st != PLABIC_OK) return bail(st);
        NetPtr result(res);
        StrPtr d(delta);
        char* gjs = nullptr;
        st = plabic_network_to_json(result.get(), &gjs);
        if (st != PLABIC_OK) return bail(st);
        StrPtr g(gjs);
        std::string combined = std::string("{\"delta\": ") + d.get() +
                               ",\n\"network\": " + g.get() + "}";
        return emit(combined.c_str(), out_path);
    }

    if (st != PLABIC_OK) return bail(st);
    StrPtr s(js);
    if (format == "csv" && c_soliton->parsed()) {
        // Flatten the soliton grid to x,tau,u lines.
        std::string text = s.get();
        std::ostringstream csv;
        csv << "x,tau,u";
        size_t pos = 0;
        auto grab = [&](const char* key, size_t from) -> std::pair<std::string, size_t> {
            std::string needle = std::string("\"") + key + "\": \"";
            auto at = text.find(needle, from);
            if (at == std::string::npos) return {"", std::string::npos};
            at += needle.size();
            auto end = text.find('"', at);
            return {text.substr(at, end - at), end};
        };
        while (true) {
            auto [x, p1] = grab("x", pos);
            if (p1 == std::string::npos) break;
            auto [tau, p2] = grab("tau", p1);
            auto [u, p3] = grab("u", p2);
            csv << "\n" << x << "," << tau << "," << u;
            pos = p3;
        }
        return emit(csv.str().c_str(), out_path);
    }
    return emit(s.get(), out_path);
}
