#include "flipdist/cli.hpp"

#include "flipdist/error.hpp"
#include "flipdist/formats.hpp"
#include "flipdist/generate.hpp"
#include "flipdist/lemmas.hpp"
#include "flipdist/morph.hpp"
#include "flipdist/oracle.hpp"
#include "flipdist/svg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <ostream>

namespace flipdist {

namespace {

// Raised for bad flag values discovered after CLI11 has parsed the line.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(std::ostream& out, const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        out << text;
    } else {
        write_file(path, text);
    }
}

Priority parse_priority(const std::string& s) {
    if (s == "lex") return Priority::lexicographic();
    const std::string prefix = "random:";
    if (s.rfind(prefix, 0) == 0 && s.size() > prefix.size()) {
        const std::string digits = s.substr(prefix.size());
        if (std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }) &&
            digits.size() <= 19) {
            return Priority::random(std::stoull(digits));
        }
    }
    throw UsageError("--priority expects lex or random:SEED, got '" + s + "'");
}

Shape parse_shape(const std::string& s) {
    for (Shape shape : {Shape::convex_gon, Shape::random_simple_border, Shape::with_holes}) {
        if (s == to_string(shape)) return shape;
    }
    throw UsageError("--shape expects convex_gon, random_simple_border or with_holes, got '" + s + "'");
}

std::string edge_lines(std::span<const Edge> edges) {
    std::string s;
    for (const Edge& e : edges) s += (s.empty() ? "" : " ") + to_string(e);
    return s + "\n";
}

struct Options {
    std::string instance, tri1, tri2, output, priority = "lex", overlay, sequence, method = "graph", shape = "convex_gon";
    bool list = false, json = false;
    std::uint64_t seed = 0, seed2 = 0;
    std::size_t points = 0, holes = 0, interior = 0, max_nodes = kMaxFlipGraphNodes;
    std::string pair1, pair2;
};

int cmd_validate(const Options& o, std::ostream& out) {
    Instance inst;
    try {
        inst = load_instance(o.instance);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::InvariantViolation) throw;
        out << "invalid instance\n" << e.what() << "\n";
        return kExitDomain;
    }
    out << "instance ok: n=" << inst.n() << " n_b=" << inst.n_border() << " h=" << inst.holes()
        << " interior_edges=" << interior_edge_count(inst) << "\n";
    if (is_pinched(inst)) out << "note: border polygons share a vertex (pinched region)\n";
    if (o.tri1.empty()) return kExitOk;

    const Triangulation t = load_triangulation(o.tri1, Load::raw);
    if (!(t.instance() == inst)) throw Error(ErrorKind::InstanceMismatch, o.tri1 + " is over a different instance");
    const auto violations = validate(t);
    if (violations.empty()) {
        out << "triangulation ok: " << t.size() << " edges\n";
        return kExitOk;
    }
    out << "invalid triangulation: " << violations.size() << " violation(s)\n";
    for (const auto& v : violations) out << to_string(v.kind) << ": " << v.message << "\n";
    return kExitDomain;
}

int cmd_triangulate(const Options& o, std::ostream& out) {
    const auto inst = std::make_shared<const Instance>(load_instance(o.instance));
    emit(out, o.output, serialize_triangulation(greedy_triangulate(inst, parse_priority(o.priority))));
    return kExitOk;
}

int cmd_count(const Options& o, std::ostream& out) {
    const Triangulation t1 = load_triangulation(o.tri1);
    const Triangulation t2 = load_triangulation(o.tri2);
    const CrossingReport r = count_pair(t1, t2);
    out << "#(T1,T2)=" << r.total << "\n";
    for (const auto& [e, c] : r.per_edge) {
        if (c > 0) out << "#(" << to_string(e) << ",T2)=" << c << "\n";
    }
    if (r.total > 0) out << "max=" << r.max_count << " on " << edge_lines(r.max_edges);
    return kExitOk;
}

int cmd_morph(const Options& o, std::ostream& out) {
    const Triangulation t1 = load_triangulation(o.tri1);
    const Triangulation t2 = load_triangulation(o.tri2);
    const FlipSequence seq = morph(t1, t2);
    if (const auto v = sequence_violations(seq); !v.empty()) {
        throw Error(ErrorKind::LemmaViolation, "produced sequence fails replay: " + v.front());
    }
    const Count crossings = count_pair(t1, t2).total;
    if (!o.output.empty()) write_file(o.output, serialize_sequence(seq));
    out << "steps=" << seq.steps.size() << " crossings=" << crossings << " bound=" << intersection_upper_bound(t1.instance())
        << "\n";
    return kExitOk;
}

int cmd_distance(const Options& o, std::ostream& out) {
    const Triangulation t1 = load_triangulation(o.tri1);
    const Triangulation t2 = load_triangulation(o.tri2);
    require_same_instance(t1, t2);
    std::size_t d = 0;
    if (!(t1 == t2)) {
        const FlipGraph g = build_flip_graph(t1, o.max_nodes);
        const auto target = g.find(t2);
        if (!target) throw Error(ErrorKind::PreconditionFailed, "target is not reachable by flips");
        d = g.distances_from(0)[*target];
    }
    out << "distance=" << d << "\n";
    return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    const auto inst = std::make_shared<const Instance>(load_instance(o.instance));
    std::vector<EdgeSet> all;
    if (o.method == "direct") {
        all = enumerate_triangulations_direct(*inst);
    } else if (o.method == "graph") {
        all = build_flip_graph(greedy_triangulate(inst), o.max_nodes).nodes();
        std::sort(all.begin(), all.end());
    } else {
        throw UsageError("--method expects graph or direct, got '" + o.method + "'");
    }
    out << all.size() << " triangulations\n";
    if (o.list) {
        for (const EdgeSet& edges : all) out << edge_lines(edges);
    }
    return kExitOk;
}

int cmd_audit(const Options& o, std::ostream& out) {
    const Triangulation t1 = load_triangulation(o.tri1);
    const Triangulation t2 = load_triangulation(o.tri2);
    const AuditReport report = audit_all(t1, t2);
    out << (o.json ? serialize_audit_report(report) : format_report(report));
    return report.ok() ? kExitOk : kExitDomain;
}

int cmd_render(const Options& o, std::ostream& out) {
    const Triangulation t = load_triangulation(o.tri1);
    if (!o.overlay.empty() && !o.sequence.empty()) throw UsageError("--overlay and --sequence are exclusive");
    std::string svg;
    if (!o.sequence.empty()) {
        const FlipSequence seq = load_sequence(o.sequence);
        if (!(seq.start == t)) throw Error(ErrorKind::InstanceMismatch, "the sequence does not start at " + o.tri1);
        svg = render_sequence(seq);
    } else if (!o.overlay.empty()) {
        svg = render_overlay(t, load_triangulation(o.overlay));
    } else {
        svg = render_triangulation(t);
    }
    emit(out, o.output, svg);
    return kExitOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
    GenSpec spec{o.seed, o.points, parse_shape(o.shape), o.holes, o.interior};
    if (o.pair1.empty() != o.pair2.empty()) throw UsageError("--t1 and --t2 go together");
    if (!o.pair1.empty()) {
        const auto [t1, t2] = generate_pair(spec, o.seed2);
        write_file(o.pair1, serialize_triangulation(t1));
        write_file(o.pair2, serialize_triangulation(t2));
        if (!o.output.empty()) write_file(o.output, serialize_instance(t1.instance()));
        return kExitOk;
    }
    emit(out, o.output, serialize_instance(generate_instance(spec)));
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Flip sequences between constrained triangulations", "flipdist"};
    app.require_subcommand(1);
    Options o;
    std::function<int(const Options&, std::ostream&)> action;

    auto sub = [&](const char* name, const char* help, auto fn) {
        CLI::App* s = app.add_subcommand(name, help);
        s->callback([&action, fn] { action = fn; });
        return s;
    };
    auto pair_args = [&](CLI::App* s) {
        s->add_option("tri1", o.tri1, "first triangulation file")->required();
        s->add_option("tri2", o.tri2, "second triangulation file")->required();
    };

    CLI::App* validate_cmd = sub("validate", "check an instance and optionally a triangulation of it", cmd_validate);
    validate_cmd->add_option("instance", o.instance, "instance file")->required();
    validate_cmd->add_option("tri", o.tri1, "triangulation file");

    CLI::App* tri_cmd = sub("triangulate", "greedy triangulation of an instance", cmd_triangulate);
    tri_cmd->add_option("instance", o.instance, "instance file")->required();
    tri_cmd->add_option("--priority", o.priority, "lex or random:SEED");
    tri_cmd->add_option("-o,--output", o.output, "output file (default stdout)");

    pair_args(sub("count", "crossing counts between two triangulations", cmd_count));

    CLI::App* morph_cmd = sub("morph", "flip sequence from tri1 to tri2", cmd_morph);
    pair_args(morph_cmd);
    morph_cmd->add_option("-o,--output", o.output, "sequence file to write");

    CLI::App* dist_cmd = sub("distance", "exact flip distance by breadth-first search", cmd_distance);
    pair_args(dist_cmd);
    dist_cmd->add_option("--max-nodes", o.max_nodes, "flip graph size limit");

    CLI::App* enum_cmd = sub("enumerate", "count all triangulations of an instance", cmd_enumerate);
    enum_cmd->add_option("instance", o.instance, "instance file")->required();
    enum_cmd->add_flag("--list", o.list, "print every triangulation");
    enum_cmd->add_option("--method", o.method, "graph or direct");
    enum_cmd->add_option("--max-nodes", o.max_nodes, "flip graph size limit");

    CLI::App* audit_cmd = sub("audit", "check the structural properties on a pair", cmd_audit);
    pair_args(audit_cmd);
    audit_cmd->add_flag("--json", o.json, "machine-readable report");

    CLI::App* render_cmd = sub("render", "SVG drawing", cmd_render);
    render_cmd->add_option("tri", o.tri1, "triangulation file")->required();
    render_cmd->add_option("--overlay", o.overlay, "second triangulation drawn in red");
    render_cmd->add_option("--sequence", o.sequence, "sequence file, one frame per step");
    render_cmd->add_option("-o,--output", o.output, "output file (default stdout)");

    CLI::App* gen_cmd = sub("gen", "seeded random instance, or a triangulation pair", cmd_gen);
    gen_cmd->add_option("--seed", o.seed, "instance seed");
    gen_cmd->add_option("--points", o.points, "total number of points")->required();
    gen_cmd->add_option("--shape", o.shape, "convex_gon, random_simple_border or with_holes");
    gen_cmd->add_option("--holes", o.holes, "number of triangular holes (with_holes)");
    gen_cmd->add_option("--interior", o.interior, "number of interior points");
    gen_cmd->add_option("--pair-seed", o.seed2, "seed for the pair's priorities");
    gen_cmd->add_option("--t1", o.pair1, "write the first triangulation of a pair");
    gen_cmd->add_option("--t2", o.pair2, "write the second triangulation of a pair");
    gen_cmd->add_option("-o,--output", o.output, "instance output (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        return action(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::ParseError ? kExitUsage : kExitDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}

}  // namespace flipdist
