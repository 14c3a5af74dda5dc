#include "flipdist/formats.hpp"

#include "flipdist/error.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <sstream>

namespace flipdist {

using nlohmann::json;

namespace {

[[noreturn]] void fail_at(const std::string& where, const std::string& what) {
    throw Error(ErrorKind::ParseError, "at " + where + ": " + what);
}

json parse_document(std::string_view doc) {
    try {
        return json::parse(doc.begin(), doc.end());
    } catch (const json::parse_error& e) {
        std::size_t line = 1, column = 1;
        const std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, doc.size());
        for (std::size_t i = 0; i < limit; ++i) {
            if (doc[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        const std::string what = e.what();
        const auto colon = what.rfind(": ");
        fail_at("line " + std::to_string(line) + ", column " + std::to_string(column),
                colon == std::string::npos ? what : what.substr(colon + 2));
    }
}

void expect_keys(const json& j, const std::string& where, std::initializer_list<std::string_view> required,
                 std::initializer_list<std::string_view> optional = {}) {
    if (!j.is_object()) fail_at(where, "expected an object");
    for (auto key : required) {
        if (!j.contains(key)) fail_at(where, "missing field \"" + std::string(key) + "\"");
    }
    for (const auto& [key, _] : j.items()) {
        bool known = false;
        for (auto k : required) known = known || key == k;
        for (auto k : optional) known = known || key == k;
        if (!known) fail_at(where, "unknown field \"" + key + "\"");
    }
}

void expect_header(const json& j, const std::string& where, std::string_view format) {
    const json& f = j.at("format");
    if (!f.is_string() || f.get<std::string>() != format) {
        fail_at(where + ".format", "expected \"" + std::string(format) + "\"");
    }
    const json& v = j.at("version");
    if (!v.is_number_integer() || v.get<std::int64_t>() != kFormatVersion) {
        fail_at(where + ".version", "expected " + std::to_string(kFormatVersion));
    }
}

std::int64_t read_int(const json& j, const std::string& where, std::int64_t lo, std::int64_t hi) {
    if (!j.is_number_integer()) fail_at(where, "expected an integer");
    std::int64_t value = 0;
    if (j.is_number_unsigned()) {
        const auto u = j.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) fail_at(where, "integer out of range");
        value = static_cast<std::int64_t>(u);
    } else {
        value = j.get<std::int64_t>();
    }
    if (value < lo || value > hi) {
        fail_at(where, std::to_string(value) + " is outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return value;
}

const json& read_array(const json& j, const std::string& where) {
    if (!j.is_array()) fail_at(where, "expected an array");
    return j;
}

std::string index_path(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

Instance instance_from_json(const json& j, const std::string& where) {
    expect_keys(j, where, {"format", "version", "points", "border"});
    expect_header(j, where, kInstanceFormat);
    Instance inst;
    const std::string pw = where + ".points";
    const json& points = read_array(j.at("points"), pw);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const std::string at = index_path(pw, i);
        const json& p = read_array(points[i], at);
        if (p.size() != 2) fail_at(at, "expected [x, y]");
        const auto lo = -kCoordLimit, hi = kCoordLimit;
        inst.points.push_back({read_int(p[0], index_path(at, 0), lo, hi), read_int(p[1], index_path(at, 1), lo, hi)});
    }
    const std::string bw = where + ".border";
    const json& border = read_array(j.at("border"), bw);
    if (border.empty()) fail_at(bw, "expected at least the outer polygon");
    const auto max_id = static_cast<std::int64_t>(inst.points.size()) - 1;
    for (std::size_t i = 0; i < border.size(); ++i) {
        const std::string at = index_path(bw, i);
        const json& poly = read_array(border[i], at);
        std::vector<VertexId> ids;
        for (std::size_t k = 0; k < poly.size(); ++k) {
            ids.push_back(static_cast<VertexId>(read_int(poly[k], index_path(at, k), 0, max_id)));
        }
        inst.border.push_back(std::move(ids));
    }
    if (const auto violations = instance_violations(inst); !violations.empty()) {
        std::string msg = where + " violates instance invariants:";
        for (const auto& v : violations) msg += "\n  " + v;
        throw Error(ErrorKind::InvariantViolation, msg);
    }
    return inst;
}

InstancePtr resolve_instance(const json& j, const std::string& where, const std::filesystem::path& base_dir) {
    if (j.is_string()) {
        std::filesystem::path p = j.get<std::string>();
        if (p.is_relative()) p = base_dir / p;
        return std::make_shared<const Instance>(load_instance(p));
    }
    return std::make_shared<const Instance>(instance_from_json(j, where));
}

std::vector<Edge> edges_from_json(const json& j, const std::string& where, std::size_t n) {
    const json& list = read_array(j, where);
    std::vector<Edge> edges;
    const auto max_id = static_cast<std::int64_t>(n) - 1;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string at = index_path(where, i);
        const json& e = read_array(list[i], at);
        if (e.size() != 2) fail_at(at, "expected [u, v]");
        const auto u = read_int(e[0], index_path(at, 0), 0, max_id);
        const auto v = read_int(e[1], index_path(at, 1), 0, max_id);
        if (!(u < v)) throw Error(ErrorKind::InvariantViolation, at + ": edge must be written [min_id, max_id]");
        const Edge edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
        if (!edges.empty() && !(edges.back() < edge)) {
            throw Error(ErrorKind::InvariantViolation, at + ": edges must be sorted without duplicates");
        }
        edges.push_back(edge);
    }
    return edges;
}

Edge edge_field(const json& j, const std::string& where, std::size_t n) {
    const json& e = read_array(j, where);
    if (e.size() != 2) fail_at(where, "expected [u, v]");
    const auto max_id = static_cast<std::int64_t>(n) - 1;
    const auto u = read_int(e[0], index_path(where, 0), 0, max_id);
    const auto v = read_int(e[1], index_path(where, 1), 0, max_id);
    if (u == v) fail_at(where, "edge endpoints coincide");
    return Edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
}

void require_valid_triangulation(const Triangulation& t, const std::string& what) {
    const auto violations = validate(t);
    if (violations.empty()) return;
    std::string msg = what + " is not a valid triangulation:";
    for (const auto& v : violations) msg += "\n  " + v.message;
    throw Error(ErrorKind::InvariantViolation, msg);
}

// Canonical writer: two-space indent, fixed key order, short arrays on one line.
class Writer {
public:
    std::string str() const { return out_.str(); }

    void instance_object(const Instance& inst, int depth) {
        open(depth);
        key(depth, "format") << quoted(kInstanceFormat) << ",\n";
        key(depth, "version") << kFormatVersion << ",\n";
        key(depth, "points") << "[";
        for (std::size_t i = 0; i < inst.points.size(); ++i) {
            out_ << (i ? ",\n" : "\n") << pad(depth + 2) << "[" << inst.points[i].x << ", " << inst.points[i].y << "]";
        }
        out_ << (inst.points.empty() ? "" : "\n" + pad(depth + 1)) << "],\n";
        key(depth, "border") << "[";
        for (std::size_t i = 0; i < inst.border.size(); ++i) {
            out_ << (i ? ",\n" : "\n") << pad(depth + 2) << "[";
            for (std::size_t k = 0; k < inst.border[i].size(); ++k) out_ << (k ? ", " : "") << inst.border[i][k];
            out_ << "]";
        }
        out_ << (inst.border.empty() ? "" : "\n" + pad(depth + 1)) << "]\n";
        close(depth);
    }

    void edge_list(std::span<const Edge> edges, int depth) {
        out_ << "[";
        for (std::size_t i = 0; i < edges.size(); ++i) {
            out_ << (i ? ",\n" : "\n") << pad(depth + 1) << "[" << edges[i].u << ", " << edges[i].v << "]";
        }
        out_ << (edges.empty() ? "" : "\n" + pad(depth)) << "]";
    }

    std::ostringstream& key(int depth, std::string_view name) {
        out_ << pad(depth + 1) << quoted(name) << ": ";
        return out_;
    }

    void open(int) { out_ << "{\n"; }
    void close(int depth) { out_ << pad(depth) << "}"; }

    std::ostringstream& raw() { return out_; }

    static std::string quoted(std::string_view s) { return json(std::string(s)).dump(); }
    static std::string pad(int depth) { return std::string(static_cast<std::size_t>(depth) * 2, ' '); }

private:
    std::ostringstream out_;
};

}  // namespace

Instance parse_instance(std::string_view doc) { return instance_from_json(parse_document(doc), "instance"); }

std::string serialize_instance(const Instance& inst) {
    Writer w;
    w.instance_object(inst, 0);
    return w.str() + "\n";
}

Triangulation parse_triangulation(std::string_view doc, const std::filesystem::path& base_dir, Load mode) {
    const json j = parse_document(doc);
    expect_keys(j, "triangulation", {"format", "version", "instance", "edges"});
    expect_header(j, "triangulation", kTriangulationFormat);
    InstancePtr inst = resolve_instance(j.at("instance"), "triangulation.instance", base_dir);
    auto edges = edges_from_json(j.at("edges"), "triangulation.edges", inst->n());
    Triangulation t(std::move(inst), std::move(edges));
    if (mode == Load::validated) require_valid_triangulation(t, "triangulation");
    return t;
}

std::string serialize_triangulation(const Triangulation& t) {
    Writer w;
    w.open(0);
    w.key(0, "format") << Writer::quoted(kTriangulationFormat) << ",\n";
    w.key(0, "version") << kFormatVersion << ",\n";
    w.key(0, "instance");
    w.instance_object(t.instance(), 1);
    w.raw() << ",\n";
    w.key(0, "edges");
    w.edge_list(t.edges(), 1);
    w.raw() << "\n";
    w.close(0);
    return w.str() + "\n";
}

FlipSequence parse_sequence(std::string_view doc, const std::filesystem::path& base_dir) {
    const json j = parse_document(doc);
    expect_keys(j, "sequence", {"format", "version", "instance", "start", "target", "steps"});
    expect_header(j, "sequence", kSequenceFormat);
    InstancePtr inst = resolve_instance(j.at("instance"), "sequence.instance", base_dir);
    const std::size_t n = inst->n();
    Triangulation start(inst, edges_from_json(j.at("start"), "sequence.start", n));
    Triangulation target(inst, edges_from_json(j.at("target"), "sequence.target", n));
    require_valid_triangulation(start, "sequence.start");
    require_valid_triangulation(target, "sequence.target");

    std::vector<FlipStep> steps;
    const json& list = read_array(j.at("steps"), "sequence.steps");
    const auto big = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string at = index_path("sequence.steps", i);
        const json& s = list[i];
        expect_keys(s, at, {"removed", "added", "before", "after"});
        steps.push_back({edge_field(s.at("removed"), at + ".removed", n), edge_field(s.at("added"), at + ".added", n),
                         read_int(s.at("before"), at + ".before", 0, big), read_int(s.at("after"), at + ".after", 0, big)});
    }
    FlipSequence seq{std::move(start), std::move(target), std::move(steps)};
    if (const auto violations = sequence_violations(seq); !violations.empty()) {
        std::string msg = "sequence fails replay:";
        for (const auto& v : violations) msg += "\n  " + v;
        throw Error(ErrorKind::InvariantViolation, msg);
    }
    return seq;
}

std::string serialize_sequence(const FlipSequence& seq) {
    Writer w;
    w.open(0);
    w.key(0, "format") << Writer::quoted(kSequenceFormat) << ",\n";
    w.key(0, "version") << kFormatVersion << ",\n";
    w.key(0, "instance");
    w.instance_object(seq.start.instance(), 1);
    w.raw() << ",\n";
    w.key(0, "start");
    w.edge_list(seq.start.edges(), 1);
    w.raw() << ",\n";
    w.key(0, "target");
    w.edge_list(seq.target.edges(), 1);
    w.raw() << ",\n";
    w.key(0, "steps") << "[";
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const FlipStep& s = seq.steps[i];
        w.raw() << (i ? ",\n" : "\n") << Writer::pad(2) << "{\"removed\": [" << s.removed.u << ", " << s.removed.v
                << "], \"added\": [" << s.added.u << ", " << s.added.v << "], \"before\": " << s.before
                << ", \"after\": " << s.after << "}";
    }
    w.raw() << (seq.steps.empty() ? "" : "\n" + Writer::pad(1)) << "]\n";
    w.close(0);
    return w.str() + "\n";
}

std::string serialize_audit_report(const AuditReport& report) {
    auto status_name = [](CheckStatus s) -> std::string_view {
        switch (s) {
            case CheckStatus::pass: return "pass";
            case CheckStatus::fail: return "fail";
            case CheckStatus::skipped: return "skipped";
        }
        return "?";
    };
    Writer w;
    w.open(0);
    w.key(0, "format") << Writer::quoted(kAuditFormat) << ",\n";
    w.key(0, "version") << kFormatVersion << ",\n";
    w.key(0, "summary") << "{\"pass\": " << report.count(CheckStatus::pass)
                        << ", \"fail\": " << report.count(CheckStatus::fail)
                        << ", \"skipped\": " << report.count(CheckStatus::skipped) << "},\n";
    w.key(0, "checks") << "[";
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        const Check& c = report.checks[i];
        w.raw() << (i ? ",\n" : "\n") << Writer::pad(2) << "{\"name\": " << Writer::quoted(c.name)
                << ", \"status\": " << Writer::quoted(status_name(c.status))
                << ", \"property\": " << Writer::quoted(c.property) << ", \"witness\": " << Writer::quoted(c.witness)
                << "}";
    }
    w.raw() << (report.checks.empty() ? "" : "\n" + Writer::pad(1)) << "]\n";
    w.close(0);
    return w.str() + "\n";
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::PreconditionFailed, "cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error(ErrorKind::PreconditionFailed, "cannot write " + path.string());
}

namespace {

template <class F>
auto with_path(const std::filesystem::path& path, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        std::string msg = e.what();
        const auto prefix = std::string(to_string(e.kind())) + ": ";
        if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
        throw Error(e.kind(), path.string() + ": " + msg);
    }
}

}  // namespace

Instance load_instance(const std::filesystem::path& path) {
    const std::string doc = read_file(path);
    return with_path(path, [&] { return parse_instance(doc); });
}

Triangulation load_triangulation(const std::filesystem::path& path, Load mode) {
    const std::string doc = read_file(path);
    return with_path(path, [&] { return parse_triangulation(doc, path.parent_path(), mode); });
}

FlipSequence load_sequence(const std::filesystem::path& path) {
    const std::string doc = read_file(path);
    return with_path(path, [&] { return parse_sequence(doc, path.parent_path()); });
}

}  // namespace flipdist
