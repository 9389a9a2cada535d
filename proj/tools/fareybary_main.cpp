// fareybary: exact-arithmetic CLI for the Farey/bary triangle partitions,
// the delta map, periodic-sequence solvers, and the singularity lab.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fareybary/algebraic.hpp"
#include "fareybary/bary.hpp"
#include "fareybary/delta.hpp"
#include "fareybary/farey.hpp"
#include "fareybary/minkowski.hpp"
#include "fareybary/render.hpp"
#include "fareybary/singularity.hpp"

using json = nlohmann::json;
using namespace fareybary;

namespace {

json sequence_json(const ExpansionSequence& seq) {
    json j;
    j["steps"] = format_sequence(seq);
    j["raw_depth"] = seq.raw_length().get_str();
    switch (seq.termination) {
        case Termination::Running: j["termination"] = "running"; break;
        case Termination::VertexHit:
            j["termination"] = "vertex_hit";
            j["vertex_depth"] = seq.vertex_depth;
            break;
        case Termination::DepthLimit: j["termination"] = "depth_limit"; break;
    }
    j["boundary"] = seq.touched_boundary;
    return j;
}

json point_json(const PlanePoint& p) {
    json j;
    j["value"] = format_point(p);
    j["x"] = format_rat(p.x);
    j["y"] = format_rat(p.y);
    j["approx"] = {p.x.get_d(), p.y.get_d()};
    return j;
}

json delta_json(const DeltaResult& r) {
    json j = point_json(r.value);
    j["error_bound"] = format_rat(r.error_bound);
    j["depth_used"] = r.depth_used;
    j["exact"] = r.exact;
    j["boundary"] = r.boundary;
    return j;
}

json poly_json(const IntPoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.c) coeffs.push_back(c.get_str());
    return {{"coefficients", coeffs}, {"text", p.to_string()}};
}

json algebraic_json(const AlgebraicNumber& a) {
    json j;
    j["min_poly"] = poly_json(a.min_poly());
    j["degree"] = a.degree();
    auto iv = a.interval();
    j["interval"] = {format_rat(iv.lo), format_rat(iv.hi)};
    j["approx"] = a.approx();
    return j;
}

ExpansionSequence parse_seq_arg(const std::string& text) {
    ExpansionSequence seq = parse_sequence(text);
    if (seq.steps.empty()) throw DomainError("empty sequence");
    return seq;
}

void run_expand(const std::string& point, long depth, const std::string& partition) {
    PlanePoint p = parse_point(point);
    ExpansionSequence seq;
    if (partition == "farey") {
        seq = expand(p, depth);
    } else if (partition == "bary") {
        seq = bary_expand(p, depth);
    } else {
        throw DomainError("partition must be farey or bary");
    }
    std::cout << sequence_json(seq).dump() << "\n";
}

void run_delta(const std::string& point, std::optional<long> depth, const std::string& tol) {
    PlanePoint p = parse_point(point);
    if (depth) {
        PlanePoint v = delta_n(p, *depth);
        json j = point_json(v);
        j["depth_used"] = *depth;
        std::cout << j.dump() << "\n";
        return;
    }
    Rat t = parse_rat(tol);
    std::cout << delta_json(delta(p, t)).dump() << "\n";
}

void run_inverse(const std::string& point, const std::string& tol) {
    PlanePoint q = parse_point(point);
    std::cout << delta_json(delta_inverse(q, parse_rat(tol))).dump() << "\n";
}

void run_periodic_cubic(const std::string& period, const std::string& preperiod) {
    PeriodicSpec spec;
    spec.period = parse_seq_arg(period);
    if (!preperiod.empty()) spec.preperiod = parse_sequence(preperiod);
    CubicPairResult res = periodic_to_cubic(spec);
    json j;
    j["field_poly"] = poly_json(res.field_poly);
    j["field_degree"] = res.field_degree;
    j["lambda"] = algebraic_json(res.lambda);
    j["alpha"] = algebraic_json(res.alpha);
    j["beta"] = algebraic_json(res.beta);
    j["point_box"] = {{"x", {format_rat(res.alpha_box.lo), format_rat(res.alpha_box.hi)}},
                      {"y", {format_rat(res.beta_box.lo), format_rat(res.beta_box.hi)}}};
    j["point_approx"] = {res.point.approx_x(), res.point.approx_y()};
    std::cout << j.dump() << "\n";
}

void run_periodic_rational(const std::string& period, const std::string& preperiod) {
    PeriodicSpec spec;
    spec.period = parse_seq_arg(period);
    if (!preperiod.empty()) spec.preperiod = parse_sequence(preperiod);
    std::cout << point_json(periodic_to_rational(spec)).dump() << "\n";
}

void run_ratio(const std::string& seq_text, const std::string& point, long depth) {
    ExpansionSequence seq;
    if (!seq_text.empty()) {
        seq = parse_sequence(seq_text);
    } else if (!point.empty()) {
        seq = expand(parse_point(point), depth);
    } else {
        throw DomainError("ratio needs --seq or --point");
    }
    for (const auto& rec : ratio_series(seq)) {
        json j;
        j["n"] = rec.n;
        j["s_n"] = rec.s_n.get_str();
        j["radii_product"] = rec.radii_product.get_str();
        j["ratio"] = format_rat(rec.ratio);
        j["log3_ratio"] =
            rec.n == 0 ? 0.0 : log2_approx(rec.radii_product) / std::log2(3.0) - rec.s_n.get_d();
        std::cout << j.dump() << "\n";
    }
}

json quantiles_json(const Quantiles& q) {
    return {{"min", q.min}, {"q25", q.q25}, {"median", q.median}, {"q75", q.q75}, {"max", q.max}};
}

void run_mc(std::optional<std::uint64_t> samples, std::optional<long> depth,
            std::optional<std::uint64_t> seed, const std::string& config) {
    std::uint64_t n = 1000, sd = 0;
    long d = 40;
    if (!config.empty()) {
        std::ifstream in(config);
        if (!in) throw DomainError("cannot open config file: " + config);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            auto eq = line.find('=');
            if (eq == std::string::npos) throw DomainError("config line needs key=value: " + line);
            std::string key = line.substr(0, eq), val = line.substr(eq + 1);
            try {
                if (key == "samples") {
                    n = std::stoull(val);
                } else if (key == "depth") {
                    d = std::stol(val);
                } else if (key == "seed") {
                    sd = std::stoull(val);
                } else {
                    throw DomainError("unknown config key: " + key);
                }
            } catch (const std::invalid_argument&) {
                throw DomainError("bad config value: " + line);
            } catch (const std::out_of_range&) {
                throw DomainError("config value out of range: " + line);
            }
        }
    }
    if (samples) n = *samples;
    if (depth) d = *depth;
    if (seed) sd = *seed;
    StatSummary s = monte_carlo(n, d, sd);
    json j;
    j["samples"] = s.samples;
    j["raw_depth"] = s.raw_depth;
    j["seed"] = s.seed;
    j["s_over_k"] = quantiles_json(s.s_over_k);
    j["log3_ratio"] = quantiles_json(s.log3_ratio);
    std::cout << j.dump() << "\n";
}

void run_lemma(const std::vector<std::string>& tuples, long random_count, long max_xyz, long max_L,
               std::uint64_t seed) {
    auto emit = [](const Int& x, const Int& y, const Int& z, const Rat& L) {
        bool holds = lemma_inequality_check(x, y, z, L);
        json j;
        j["x"] = x.get_str();
        j["y"] = y.get_str();
        j["z"] = z.get_str();
        j["L"] = format_rat(L);
        j["holds"] = holds;
        std::cout << j.dump() << "\n";
        return holds;
    };
    bool all = true;
    for (const auto& t : tuples) {
        std::vector<std::string> parts;
        std::string cur;
        for (char ch : t) {
            if (ch == ',') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        parts.push_back(cur);
        if (parts.size() != 4) throw DomainError("lemma tuple must be x,y,z,L: " + t);
        all = emit(parse_rat(parts[0]).get_num(), parse_rat(parts[1]).get_num(),
                   parse_rat(parts[2]).get_num(), parse_rat(parts[3])) &&
              all;
    }
    if (random_count > 0) {
        std::mt19937_64 eng(seed);
        std::uniform_int_distribution<long> dxyz(1, max_xyz), dl(1, max_L);
        for (long i = 0; i < random_count; ++i)
            all = emit(Int(dxyz(eng)), Int(dxyz(eng)), Int(dxyz(eng)), Rat(dl(eng))) && all;
    }
    if (!all) throw DomainError("lemma inequality failed (unexpected for L >= 1)");
}

void run_render(const std::string& kind, int depth, int scale, const std::string& out_path) {
    std::string svg = render_partition(partition_kind_from_name(kind), depth, scale);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw DomainError("cannot open output file: " + out_path);
    out << svg;
    long triangles = 1;
    for (int i = 0; i < depth; ++i) triangles *= 3;
    json j;
    j["file"] = out_path;
    j["kind"] = kind;
    j["depth"] = depth;
    j["triangles"] = triangles;
    j["bytes"] = static_cast<long>(svg.size());
    std::cout << j.dump() << "\n";
}

void run_question(const std::string& x, long depth) {
    Rat v = minkowski_q(parse_rat(x), depth);
    json j;
    j["value"] = format_rat(v);
    j["approx"] = v.get_d();
    std::cout << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for the Farey-Bary triangle map"};
    app.require_subcommand(1);

    std::string point, tol = "1/1000000000", partition = "farey";
    std::string period, preperiod, seq_text, config, kind, out_path;
    std::string qx;
    long depth = 64;
    std::optional<long> delta_depth;
    int render_depth = 2, scale = 720;
    std::optional<std::uint64_t> mc_samples, mc_seed;
    std::optional<long> mc_depth;
    std::vector<std::string> tuples;
    long random_count = 0, max_xyz = 1000000, max_L = 10;
    std::uint64_t lemma_seed = 1;

    auto* cmd_expand = app.add_subcommand("expand", "Expansion sequence of a rational point");
    cmd_expand->add_option("--point", point, "rational point x,y")->required();
    cmd_expand->add_option("--depth", depth, "maximum raw depth");
    cmd_expand->add_option("--partition", partition, "farey (default) or bary");

    auto* cmd_delta = app.add_subcommand("delta", "Evaluate the Farey-Bary map");
    cmd_delta->add_option("--point", point)->required();
    cmd_delta->add_option("--depth", delta_depth, "evaluate the stage map delta_n instead");
    cmd_delta->add_option("--tol", tol, "rational tolerance for the limit map");

    auto* cmd_inverse = app.add_subcommand("inverse", "Evaluate the inverse map");
    cmd_inverse->add_option("--point", point)->required();
    cmd_inverse->add_option("--tol", tol);

    auto* cmd_pc = app.add_subcommand("periodic-cubic", "Cubic data of a periodic Farey sequence");
    cmd_pc->add_option("--period", period)->required();
    cmd_pc->add_option("--preperiod", preperiod);

    auto* cmd_pr =
        app.add_subcommand("periodic-rational", "Exact fixed point of a periodic bary sequence");
    cmd_pr->add_option("--period", period)->required();
    cmd_pr->add_option("--preperiod", preperiod);

    auto* cmd_ratio = app.add_subcommand("ratio", "Area-ratio series along a sequence");
    cmd_ratio->add_option("--seq", seq_text, "sequence, e.g. 2(III),1(II) or raw:I,II");
    cmd_ratio->add_option("--point", point, "expand this point instead");
    cmd_ratio->add_option("--depth", depth, "raw depth when expanding a point");

    auto* cmd_mc = app.add_subcommand("mc", "Monte Carlo singularity statistics");
    cmd_mc->add_option("--samples", mc_samples);
    cmd_mc->add_option("--depth", mc_depth, "raw expansion depth");
    cmd_mc->add_option("--seed", mc_seed);
    cmd_mc->add_option("--config", config, "key=value file: samples, depth, seed");

    auto* cmd_lemma = app.add_subcommand("lemma", "Exact T_L lemma inequality checks");
    cmd_lemma->add_option("--tuple", tuples, "x,y,z,L (repeatable; L may be rational)");
    cmd_lemma->add_option("--random", random_count, "number of random tuples");
    cmd_lemma->add_option("--max", max_xyz, "max for random x,y,z");
    cmd_lemma->add_option("--max-l", max_L, "max for random integer L");
    cmd_lemma->add_option("--seed", lemma_seed);

    auto* cmd_render = app.add_subcommand("render", "Deterministic SVG of a partition");
    cmd_render->add_option("--kind", kind, "farey or bary")->required();
    cmd_render->add_option("--depth", render_depth)->required();
    cmd_render->add_option("--scale", scale, "pixel size of the unit square");
    cmd_render->add_option("--out", out_path)->required();

    auto* cmd_q = app.add_subcommand("question", "Classical ?(x) reference oracle");
    cmd_q->add_option("--x", qx, "rational in [0,1]")->required();
    cmd_q->add_option("--depth", depth, "bisection depth");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_expand->parsed()) run_expand(point, depth, partition);
        if (cmd_delta->parsed()) run_delta(point, delta_depth, tol);
        if (cmd_inverse->parsed()) run_inverse(point, tol);
        if (cmd_pc->parsed()) run_periodic_cubic(period, preperiod);
        if (cmd_pr->parsed()) run_periodic_rational(period, preperiod);
        if (cmd_ratio->parsed()) run_ratio(seq_text, point, depth);
        if (cmd_mc->parsed()) run_mc(mc_samples, mc_depth, mc_seed, config);
        if (cmd_lemma->parsed()) run_lemma(tuples, random_count, max_xyz, max_L, lemma_seed);
        if (cmd_render->parsed()) run_render(kind, render_depth, scale, out_path);
        if (cmd_q->parsed()) run_question(qx, depth);
    } catch (const NotDominantError& e) {
        std::cerr << json{{"error", e.what()}, {"kind", "not-dominant"}}.dump() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << json{{"error", e.what()}, {"kind", "domain"}}.dump() << "\n";
        return 2;
    }
    return 0;
}
