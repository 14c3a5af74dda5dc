// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "corpus.hpp"

#include "flipdist/cli.hpp"
#include "flipdist/error.hpp"
#include "flipdist/formats.hpp"
#include "flipdist/lemmas.hpp"
#include "flipdist/morph.hpp"
#include "flipdist/oracle.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include <unistd.h>

using namespace flipdist;
using flipdist::testing::corpus_pair_seed;
using flipdist::testing::corpus_spec;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

InstancePtr convex_gon(std::size_t n) {
    return std::make_shared<const Instance>(generate_instance({0, n, Shape::convex_gon, 0, 0}));
}

std::vector<Triangulation> all_triangulations(const InstancePtr& inst) {
    const FlipGraph g = build_flip_graph(greedy_triangulate(inst));
    std::vector<Triangulation> out;
    for (std::size_t i = 0; i < g.size(); ++i) out.push_back(g.triangulation(i));
    return out;
}

struct CorpusPair {
    GenSpec spec;
    Triangulation t1, t2;
};

const std::vector<CorpusPair>& corpus() {
    static const std::vector<CorpusPair> pairs = [] {
        std::vector<CorpusPair> out;
        for (std::uint64_t i = 0; i < 1000; ++i) {
            const GenSpec spec = corpus_spec(i);
            auto [t1, t2] = generate_pair(spec, corpus_pair_seed(i));
            out.push_back({spec, std::move(t1), std::move(t2)});
        }
        return out;
    }();
    return pairs;
}

Outcome sandwich() {
    const auto inst = convex_gon(8);
    const FlipGraph g = build_flip_graph(greedy_triangulate(inst));
    const Count bound = intersection_upper_bound(*inst);
    std::size_t pairs = 0, violations = 0, tight = 0;
    std::string first;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto dist = g.distances_from(i);
        const Triangulation t1 = g.triangulation(i);
        for (std::size_t j = 0; j < g.size(); ++j) {
            const Triangulation t2 = g.triangulation(j);
            const auto steps = static_cast<Count>(morph(t1, t2).steps.size());
            const Count crossings = count_pair(t1, t2).total;
            const auto d = static_cast<Count>(dist[j]);
            ++pairs;
            if (d == steps) ++tight;
            if (!(d <= steps && steps <= crossings && crossings <= bound)) {
                if (++violations == 1) {
                    first = "nodes " + std::to_string(i) + "," + std::to_string(j) + ": d=" + std::to_string(d) +
                            " steps=" + std::to_string(steps) + " crossings=" + std::to_string(crossings);
                }
            }
        }
    }
    std::ostringstream s;
    s << g.size() << " triangulations, " << pairs << " ordered pairs, " << violations << " violations, bound=" << bound
      << ", morph optimal on " << tight << " pairs";
    if (!first.empty()) s << "; first: " << first;
    return {g.size() == 132 && pairs == 132 * 132 && violations == 0, s.str()};
}

Outcome equality_cases() {
    std::vector<std::string> problems;
    const auto square = std::make_shared<const Instance>(Instance{{{0, 0}, {4, 0}, {4, 4}, {0, 4}}, {{0, 1, 2, 3}}});
    const std::vector<Edge> sides{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    auto with = [&](Edge diagonal) {
        auto edges = sides;
        edges.push_back(diagonal);
        return Triangulation(square, edges);
    };
    const Triangulation a = with({0, 2});
    const Triangulation b = with({1, 3});
    const auto d = exact_flip_distance(a, b);
    const auto steps = morph(a, b).steps.size();
    const Count crossings = count_pair(a, b).total;
    if (d != 1 || steps != 1 || crossings != 1) problems.push_back("square");

    const auto triangle = std::make_shared<const Instance>(Instance{{{0, 0}, {7, 1}, {2, 5}}, {{0, 1, 2}}});
    const Triangulation t = greedy_triangulate(triangle);
    const auto d0 = exact_flip_distance(t, t);
    const auto steps0 = morph(t, t).steps.size();
    const Count crossings0 = count_pair(t, t).total;
    const Count bound0 = intersection_upper_bound(*triangle);
    if (d0 != 0 || steps0 != 0 || crossings0 != 0 || bound0 != 0) problems.push_back("triangle");

    std::ostringstream s;
    s << "square: d=" << d << " steps=" << steps << " crossings=" << crossings << "; triangle: d=" << d0
      << " steps=" << steps0 << " crossings=" << crossings0 << " bound=" << bound0;
    return {problems.empty(), s.str()};
}

Outcome strict_decrease() {
    std::size_t sequences = 0, flips = 0, lemma_errors = 0, bad = 0, per_kind[4] = {0, 0, 0, 0};
    std::string first;
    for (std::size_t i = 0; i < corpus().size(); ++i) {
        const CorpusPair& p = corpus()[i];
        ++per_kind[i % 4];
        try {
            const FlipSequence seq = morph(p.t1, p.t2);
            ++sequences;
            flips += seq.steps.size();
            Count previous = count_pair(p.t1, p.t2).total;
            bool ok = sequence_violations(seq).empty();
            for (const FlipStep& s : seq.steps) {
                ok = ok && s.before == previous && s.after < s.before;
                previous = s.after;
            }
            ok = ok && previous == 0;
            if (!ok && ++bad == 1) first = "pair " + std::to_string(i);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::LemmaViolation) ++lemma_errors;
            if (++bad == 1) first = "pair " + std::to_string(i) + ": " + e.what();
        }
    }
    std::ostringstream s;
    s << sequences << " sequences (convex " << per_kind[0] << ", star " << per_kind[1] << ", 1 hole " << per_kind[2]
      << ", 2 holes " << per_kind[3] << "), " << flips << " flips, " << bad << " bad, " << lemma_errors
      << " lemma violations";
    if (!first.empty()) s << "; first: " << first;
    return {sequences == 1000 && bad == 0 && lemma_errors == 0, s.str()};
}

Outcome lemma1() {
    std::size_t checked = 0, failed = 0, skipped_equal = 0;
    std::string first;
    auto run = [&](const Triangulation& t1, const Triangulation& t2) {
        if (t1 == t2) {
            ++skipped_equal;
            return;
        }
        const AuditReport r = audit_lemma1(t1, t2);
        checked += r.count(CheckStatus::pass) + r.count(CheckStatus::fail);
        failed += r.count(CheckStatus::fail);
        if (!r.ok() && first.empty()) first = format_report(r);
    };
    for (const CorpusPair& p : corpus()) run(p.t1, p.t2);
    const auto heptagon = all_triangulations(convex_gon(7));
    for (const auto& t1 : heptagon) {
        for (const auto& t2 : heptagon) run(t1, t2);
    }
    std::ostringstream s;
    s << checked << " maximal edges checked, " << failed << " failures, " << skipped_equal << " equal pairs";
    if (!first.empty()) s << "; first: " << first;
    return {failed == 0 && checked > 0, s.str()};
}

Outcome lemma2() {
    AuditReport two, two_two;
    const auto heptagon = all_triangulations(convex_gon(7));
    for (const auto& t1 : heptagon) {
        for (const auto& t2 : heptagon) {
            if (t1 == t2) continue;
            two.append(audit_lemma2(t1, t2));
            two_two.append(audit_lemma2_2(t1, t2));
        }
    }
    const std::size_t exercised2 = two.count(CheckStatus::pass) + two.count(CheckStatus::fail);
    const std::size_t exercised22 = two_two.count(CheckStatus::pass) + two_two.count(CheckStatus::fail);
    std::ostringstream s;
    s << heptagon.size() << " triangulations; decrease check: " << exercised2 << " non-vacuous, "
      << two.count(CheckStatus::fail) << " failed, " << two.count(CheckStatus::skipped)
      << " without a matching hypothesis; endpoint-crosser check: " << exercised22 << " non-vacuous, "
      << two_two.count(CheckStatus::fail) << " failed";
    return {two.ok() && two_two.ok() && exercised2 >= 100 && exercised22 >= 100, s.str()};
}

// Checks the interior-edge formula exactly as stated, 3n - 2n_b - 3 - 3h. Its
// derivation drops a sign: substituting e = e_int + n_b into 3n - 3e + 2e_int + n_b = 3 - 3h
// gives e_int = 3n - 2n_b - 3 + 3h, so every holed triangulation misses by 6h. The detail
// line reports the corrected count and the library's agreement with it.
Outcome euler() {
    std::size_t checked = 0, stated_fail = 0, corrected_fail = 0, euler_fail = 0, by_holes[3] = {0, 0, 0};
    std::size_t pairs_over_stated_bound = 0;
    std::string first;
    auto check = [&](const Triangulation& t) {
        const Instance& inst = t.instance();
        const auto n = static_cast<std::int64_t>(inst.n());
        const auto nb = static_cast<std::int64_t>(inst.n_border());
        const auto e = static_cast<std::int64_t>(t.size());
        const auto f = static_cast<std::int64_t>(faces(t).size());
        const auto h = static_cast<std::int64_t>(inst.holes());
        const auto e_int = e - nb;
        ++checked;
        if (h <= 2) ++by_holes[h];
        if (!validate(t).empty() || n - e + f != 1 - h) ++euler_fail;
        if (e_int != 3 * n - 2 * nb - 3 + 3 * h || e_int != interior_edge_count(inst)) ++corrected_fail;
        if (e_int != 3 * n - 2 * nb - 3 - 3 * h && ++stated_fail == 1) {
            first = "n=" + std::to_string(n) + " n_b=" + std::to_string(nb) + " h=" + std::to_string(h) +
                    " e_int=" + std::to_string(e_int) + " stated=" + std::to_string(3 * n - 2 * nb - 3 - 3 * h);
        }
    };
    for (const CorpusPair& p : corpus()) {
        check(p.t1);
        check(p.t2);
        const Instance& inst = p.t1.instance();
        const auto stated = static_cast<Count>(3 * inst.n()) - 2 * static_cast<Count>(inst.n_border()) - 3 -
                            3 * static_cast<Count>(inst.holes());
        if (count_pair(p.t1, p.t2).total > stated * stated) ++pairs_over_stated_bound;
    }
    for (const auto& t : all_triangulations(convex_gon(8))) check(t);
    std::ostringstream s;
    s << checked << " triangulations (h=0: " << by_holes[0] << ", h=1: " << by_holes[1] << ", h=2: " << by_holes[2]
      << "); n-e+f=1-h failures: " << euler_fail << "; e_int=3n-2n_b-3-3h failures: " << stated_fail
      << "; e_int=3n-2n_b-3+3h failures: " << corrected_fail << "; corpus pairs above the stated squared bound: "
      << pairs_over_stated_bound;
    if (!first.empty()) s << "; first: " << first;
    return {stated_fail == 0 && euler_fail == 0 && by_holes[1] > 0 && by_holes[2] > 0, s.str()};
}

Outcome oracle() {
    std::vector<std::string> problems;
    std::ostringstream s;
    const std::size_t catalan[] = {2, 5, 14, 42, 132};
    s << "convex counts";
    for (std::size_t n = 4; n <= 8; ++n) {
        const auto inst = convex_gon(n);
        auto graph = build_flip_graph(greedy_triangulate(inst)).nodes();
        std::sort(graph.begin(), graph.end());
        const auto direct = enumerate_triangulations_direct(*inst);
        s << " " << graph.size();
        if (graph != direct || graph.size() != catalan[n - 4]) problems.push_back(std::to_string(n) + "-gon");
    }
    std::size_t holed = 0;
    for (std::uint64_t i = 0; holed < 24; ++i) {
        const GenSpec spec = corpus_spec(i);
        if (spec.shape != Shape::with_holes) continue;
        const auto inst = std::make_shared<const Instance>(generate_instance(spec));
        auto graph = build_flip_graph(greedy_triangulate(inst)).nodes();
        std::sort(graph.begin(), graph.end());
        if (graph != enumerate_triangulations_direct(*inst)) problems.push_back("holed spec " + std::to_string(i));
        ++holed;
    }
    s << "; " << holed << " holed instances compared";
    std::size_t triples = 0, broken = 0;
    for (std::size_t n : {5, 6}) {
        const FlipGraph g = build_flip_graph(greedy_triangulate(convex_gon(n)));
        std::vector<std::vector<std::size_t>> d;
        for (std::size_t i = 0; i < g.size(); ++i) d.push_back(g.distances_from(i));
        for (std::size_t x = 0; x < g.size(); ++x) {
            for (std::size_t y = 0; y < g.size(); ++y) {
                if (d[x][y] == FlipGraph::npos || d[x][y] != d[y][x] || (d[x][y] == 0) != (x == y)) ++broken;
                for (std::size_t z = 0; z < g.size(); ++z) {
                    ++triples;
                    if (d[x][z] > d[x][y] + d[y][z]) ++broken;
                }
            }
        }
    }
    s << "; metric axioms on " << triples << " triples, " << broken << " violations";
    if (broken) problems.push_back("metric");
    for (const auto& p : problems) s << "; mismatch " << p;
    return {problems.empty(), s.str()};
}

#ifndef FLIPDIST_CLI_PATH
#define FLIPDIST_CLI_PATH ""
#endif

Outcome determinism() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("flipdist_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string d = dir.string();
    std::vector<std::string> differ;
    std::size_t compared = 0;

    auto in_process = [&](const std::vector<std::string>& args, const std::string& file) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return std::to_string(code) + "\n" + out.str() + (file.empty() ? "" : read_file(file));
    };
    auto external = [&](const std::string& args, const std::string& file) {
        const std::string cmd = std::string(FLIPDIST_CLI_PATH) + " " + args + " > " + d + "/stdout.txt";
        const int code = std::system(cmd.c_str());
        return std::to_string(code) + "\n" + read_file(d + "/stdout.txt") + (file.empty() ? "" : read_file(file));
    };

    struct Case {
        std::string name;
        std::vector<std::string> args;
        std::string file;
    };
    const std::string t1 = d + "/a.tri", t2 = d + "/b.tri", seq = d + "/s.seq", svg = d + "/r.svg", inst = d + "/g.inst";
    const std::vector<Case> cases{
        {"gen", {"gen", "--seed", "7", "--points", "11", "--shape", "with_holes", "--holes", "2", "--interior", "1", "-o", inst}, inst},
        {"gen pair", {"gen", "--seed", "3", "--points", "10", "--shape", "random_simple_border", "--interior", "2", "--pair-seed", "9", "--t1", t1, "--t2", t2}, t1},
        {"morph", {"morph", t1, t2, "-o", seq}, seq},
        {"render", {"render", t1, "--overlay", t2, "-o", svg}, svg},
        {"render sequence", {"render", t1, "--sequence", seq, "-o", svg}, svg},
    };
    for (const Case& c : cases) {
        const std::string first = in_process(c.args, c.file);
        const std::string second = in_process(c.args, c.file);
        ++compared;
        if (first != second || first.rfind("0\n", 0) != 0) differ.push_back(c.name);
        if (std::string(FLIPDIST_CLI_PATH).empty()) continue;
        std::string joined;
        for (const auto& a : c.args) joined += " '" + a + "'";
        const std::string x1 = external(joined, c.file);
        const std::string x2 = external(joined, c.file);
        ++compared;
        if (x1 != x2 || x1.substr(x1.find('\n')) != first.substr(first.find('\n'))) differ.push_back(c.name + " (process)");
    }
    fs::remove_all(dir);
    std::ostringstream s;
    s << compared << " repeated runs compared, " << differ.size() << " differ";
    for (const auto& x : differ) s << "; " << x;
    return {differ.empty(), s.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 sandwich d <= steps <= crossings <= bound on convex 8-gon", sandwich},
        {"2 equality cases", equality_cases},
        {"3 strict decrease over 1000 seeded pairs", strict_decrease},
        {"4 maximal edges convex", lemma1},
        {"5 vertex-incident crossers and endpoint crossers", lemma2},
        {"6 interior edge count and Euler relation", euler},
        {"7 oracle cross-check and metric axioms", oracle},
        {"8 CLI determinism", determinism},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.ok) ++failures;
        std::printf("%s criterion %s (%.1fs): %s\n", o.ok ? "PASS" : "FAIL", name.c_str(), secs, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
