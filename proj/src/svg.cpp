#include "flipdist/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace flipdist {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

class Canvas {
public:
    explicit Canvas(const Instance& inst) : inst_(inst) {
        if (inst.points.empty()) return;
        Coord min_x = inst.points[0].x, max_x = min_x, min_y = inst.points[0].y, max_y = min_y;
        for (const Point& p : inst.points) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
        const double w = static_cast<double>(max_x - min_x);
        const double h = static_cast<double>(max_y - min_y);
        const double inner = kFrameSize - 2 * kFrameMargin;
        scale_ = inner / std::max({w, h, 1.0});
        origin_x_ = kFrameMargin + (inner - w * scale_) / 2 - static_cast<double>(min_x) * scale_;
        origin_y_ = kFrameMargin + (inner - h * scale_) / 2 - static_cast<double>(min_y) * scale_;
    }

    double x(VertexId v, double shift) const { return shift + origin_x_ + static_cast<double>(inst_.points[v].x) * scale_; }
    double y(VertexId v) const { return kFrameSize - (origin_y_ + static_cast<double>(inst_.points[v].y) * scale_); }

    void edges(std::string& out, std::span<const Edge> list, std::string_view cls, std::string_view color, double width,
               double shift) const {
        for (const Edge& e : list) {
            out += "<line class=\"" + std::string(cls) + "\" x1=\"" + num(x(e.u, shift)) + "\" y1=\"" + num(y(e.u)) +
                   "\" x2=\"" + num(x(e.v, shift)) + "\" y2=\"" + num(y(e.v)) + "\" stroke=\"" + std::string(color) +
                   "\" stroke-width=\"" + num(width) + "\"/>\n";
        }
    }

    void vertices(std::string& out, double shift) const {
        for (VertexId v = 0; v < inst_.n(); ++v) {
            out += "<circle cx=\"" + num(x(v, shift)) + "\" cy=\"" + num(y(v)) + "\" r=\"6.000\" fill=\"black\"/>\n";
            out += "<text x=\"" + num(x(v, shift) + 9) + "\" y=\"" + num(y(v) - 9) +
                   "\" font-family=\"monospace\" font-size=\"20\" fill=\"#333333\">" + std::to_string(v) + "</text>\n";
        }
    }

    void caption(std::string& out, const std::string& text, double shift) const {
        out += "<text x=\"" + num(shift + kFrameMargin) + "\" y=\"" + num(kFrameMargin / 2 + 8) +
               "\" font-family=\"monospace\" font-size=\"22\" fill=\"black\">" + text + "</text>\n";
    }

    void frame(std::string& out, const Triangulation& t, const Triangulation* overlay, double shift) const {
        const auto border = inst_.border_edges();
        std::vector<Edge> interior;
        for (const Edge& e : t.edges()) {
            if (!std::binary_search(border.begin(), border.end(), e)) interior.push_back(e);
        }
        edges(out, border, "border", "black", 4, shift);
        edges(out, interior, "t1", "black", 2, shift);
        if (overlay) {
            std::vector<Edge> extra;
            for (const Edge& e : overlay->edges()) {
                if (!std::binary_search(border.begin(), border.end(), e)) extra.push_back(e);
            }
            edges(out, extra, "t2", "red", 2, shift);
        }
        vertices(out, shift);
    }

private:
    const Instance& inst_;
    double scale_ = 1;
    double origin_x_ = kFrameMargin;
    double origin_y_ = kFrameMargin;
};

std::string header(double width) {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           num(width) + "\" height=\"" + num(kFrameSize) + "\" viewBox=\"0 0 " + num(width) + " " + num(kFrameSize) +
           "\">\n";
}

}  // namespace

std::string render_triangulation(const Triangulation& t) {
    std::string out = header(kFrameSize);
    Canvas(t.instance()).frame(out, t, nullptr, 0);
    return out + "</svg>\n";
}

std::string render_overlay(const Triangulation& t1, const Triangulation& t2) {
    require_same_instance(t1, t2);
    std::string out = header(kFrameSize);
    Canvas(t1.instance()).frame(out, t1, &t2, 0);
    return out + "</svg>\n";
}

std::string render_sequence(const FlipSequence& seq) {
    require_same_instance(seq.start, seq.target);
    const Canvas canvas(seq.start.instance());
    std::string out = header(kFrameSize * static_cast<double>(seq.steps.size() + 1));
    Triangulation current = seq.start;
    for (std::size_t i = 0; i <= seq.steps.size(); ++i) {
        const double shift = kFrameSize * static_cast<double>(i);
        if (i > 0) {
            const FlipStep& s = seq.steps[i - 1];
            current = replay(current, {s});
            canvas.caption(out,
                           "step " + std::to_string(i) + ": " + to_string(s.removed) + " to " + to_string(s.added) +
                               ", crossings " + std::to_string(s.before) + " to " + std::to_string(s.after),
                           shift);
        } else {
            canvas.caption(out, "start, crossings " + std::to_string(count_pair(seq.start, seq.target).total), shift);
        }
        canvas.frame(out, current, &seq.target, shift);
    }
    return out + "</svg>\n";
}

}  // namespace flipdist
