#include "oddgon/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace oddgon {

double round12(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

namespace {

Json point(Vec2 p) { return Json::array({round12(p.x), round12(p.y)}); }

Json edge_json(const Edge& e, const std::string& name) {
    static const char* kinds[] = {"original", "auxiliary", "primed"};
    return {{"label", name},
            {"polygon", polygon_name(e.polygon)},
            {"kind", kinds[static_cast<int>(e.kind)]},
            {"p0", point(e.p0)},
            {"p1", point(e.p1)}};
}

} // namespace

Json to_json(const Surface& surface) {
    const int n = surface.n();
    Json polys = Json::object();
    for (PolygonId p : {PolygonId::Upper, PolygonId::Lower}) {
        Json verts = Json::array();
        for (Vec2 v : surface.vertices(p)) verts.push_back(point(v));
        polys[polygon_name(p)] = verts;
    }
    Json edges = Json::array();
    for (const Edge& e : surface.edges()) edges.push_back(edge_json(e, "S" + std::to_string(e.label)));
    for (const Edge& e : surface.auxiliary()) edges.push_back(edge_json(e, auxiliary_name(n, e.polygon, e.label)));
    for (const PrimedEdge& pe : surface.primed()) {
        for (const Edge& e : pe.pieces) edges.push_back(edge_json(e, "S" + std::to_string(pe.label) + "'"));
    }
    Json ids = Json::array();
    for (int k = 1; k <= n; ++k) {
        const std::string s = "S" + std::to_string(k);
        ids.push_back(Json::array({"upper:" + s, "lower:" + s}));
    }
    return {{"n", n}, {"polygons", polys}, {"edges", edges}, {"identifications", ids}};
}

Json to_json(const Surface& surface, const Trajectory& trajectory) {
    const int n = surface.n();
    Json letters = Json::array();
    for (const Crossing& c : trajectory.crossings) letters.push_back(original_name(n, c.label));
    Json out = {{"n", n},
                {"start", {{"polygon", polygon_name(trajectory.start.polygon)}, {"point", point(trajectory.start.p)}}},
                {"theta", trajectory.direction.theta},
                {"sector_normalized", trajectory.direction.sector_normalized},
                {"letters", letters},
                {"periodic", trajectory.periodic},
                {"period", trajectory.period ? Json(*trajectory.period) : Json(nullptr)}};
    if (auto w = trajectory.cyclic_word()) out["cyclic_word"] = word_name(n, *w);
    return out;
}

Json to_json(const Surface& surface, const Trajectory& trajectory, const DerivedTrajectory& derived) {
    const int n = surface.n();
    Json out = to_json(surface, trajectory);
    Json interior = Json::array();
    for (int l : derived.interior) interior.push_back(original_name(n, l));
    out["derived_letters"] = interior;
    Json crossings = Json::array();
    for (const PrimedCrossing& pc : derived.crossings) {
        crossings.push_back({{"edge", primed_name(n, pc.label)}, {"time", round12(pc.time)}, {"source", pc.source}});
    }
    out["primed_crossings"] = crossings;
    out["derived_cyclic_word"] = derived.cyclic ? Json(word_name(n, *derived.cyclic)) : Json(nullptr);
    return out;
}

Json to_json(const TransitionDiagram& diagram) {
    const int n = diagram.n;
    Json nodes = Json::array();
    for (const Letter& l : diagram.nodes) nodes.push_back(letter_name(n, l));
    Json arrows = Json::array();
    for (const DiagramArrow& a : diagram.arrows) {
        Json arrow = {{"from", letter_name(n, a.from)}, {"to", letter_name(n, a.to)}};
        if (diagram.stage == DiagramStage::Arrows) {
            arrow["label"] = nullptr;
        } else {
            arrow["label"] = a.label.empty() ? Json(nullptr) : Json(word_name(n, a.label));
        }
        if (diagram.stage == DiagramStage::Arrows || diagram.stage == DiagramStage::Augmented) {
            arrow["polygon"] = polygon_name(a.polygon);
        }
        arrows.push_back(arrow);
    }
    return {{"stage", stage_name(diagram.stage)}, {"n", n}, {"nodes", nodes}, {"arrows", arrows}};
}

Json to_json(const VertexGuide& guide) {
    auto row = [](const std::vector<double>& xs) {
        Json a = Json::array();
        for (double x : xs) a.push_back(round12(x));
        return a;
    };
    return {{"n", guide.n},
            {"upper", {{"right", row(guide.upper_right)}, {"left", row(guide.upper_left)}}},
            {"lower", {{"right", row(guide.lower_right)}, {"left", row(guide.lower_left)}}},
            {"copies", guide.copies.size()},
            {"max_bar_drift", guide.max_bar_drift}};
}

Json to_json(const std::vector<Cylinder>& cylinders) {
    Json out = Json::array();
    for (const Cylinder& c : cylinders) {
        out.push_back({{"index", c.index},
                       {"width", round12(c.width)},
                       {"height", round12(c.height)},
                       {"modulus", round12(c.modulus)},
                       {"y", Json::array({round12(c.y_low), round12(c.y_high)})}});
    }
    return out;
}

Json to_json(const TorusTrajectory& trajectory) {
    std::string letters;
    for (const TorusCrossing& c : trajectory.crossings) letters.push_back(c.letter);
    Json out = {{"start", point(trajectory.start)},
                {"velocity", point(trajectory.velocity)},
                {"letters", letters},
                {"period", trajectory.period ? Json(*trajectory.period) : Json(nullptr)}};
    if (auto w = trajectory.cyclic()) out["cyclic_word"] = w->letters;
    return out;
}

Json torus_word_json(const TorusWord& word) {
    return {{"letters", word.letters}, {"topology", word.topology == Topology::Cyclic ? "cyclic" : "window"}};
}

Json derivation_json(int n, const Word& input, const Word& derived, const std::string& method) {
    std::string status = "derived";
    if (derived.letters.empty()) {
        status = "empty";
    } else if (same_word(input, derived)) {
        status = "fixed";
    }
    return {{"n", n},
            {"method", method},
            {"topology", input.topology == Topology::Cyclic ? "cyclic" : "window"},
            {"input", word_name(n, input.letters)},
            {"letters", word_name(n, derived.letters)},
            {"status", status}};
}

std::string to_dot(const TransitionDiagram& diagram) {
    const int n = diagram.n;
    std::ostringstream out;
    out << "digraph " << stage_name(diagram.stage) << " {\n";
    for (const Letter& l : diagram.nodes) out << "  \"" << letter_name(n, l) << "\";\n";
    for (const DiagramArrow& a : diagram.arrows) {
        out << "  \"" << letter_name(n, a.from) << "\" -> \"" << letter_name(n, a.to) << "\"";
        std::vector<std::string> attrs;
        if (!a.label.empty()) attrs.push_back("label=\"" + word_name(n, a.label) + "\"");
        if (diagram.stage == DiagramStage::Arrows || diagram.stage == DiagramStage::Augmented) {
            attrs.push_back(a.polygon == PolygonId::Upper ? "color=black" : "color=gray");
        }
        if (!attrs.empty()) {
            out << " [";
            for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
            out << "]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string render_svg(const Surface& surface, const Trajectory* trajectory, const VertexGuide* guide) {
    double xmin = std::numeric_limits<double>::infinity();
    double ymin = xmin;
    double xmax = -xmin;
    double ymax = -xmin;
    auto grow = [&](Vec2 p) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    };
    for (PolygonId p : {PolygonId::Upper, PolygonId::Lower}) {
        for (Vec2 v : surface.vertices(p)) grow(v);
    }
    if (guide) {
        for (std::size_t k = 0; k < guide->upper_right.size(); ++k) {
            grow({guide->upper_right[k], surface.level_y(PolygonId::Upper, static_cast<int>(k))});
            grow({guide->lower_left[k], surface.level_y(PolygonId::Lower, static_cast<int>(k))});
        }
    }
    constexpr double kScale = 120.0;
    constexpr double kPad = 0.25;
    const double width = (xmax - xmin + 2 * kPad) * kScale;
    const double height = (ymax - ymin + 2 * kPad) * kScale;
    // SVG y grows downward.
    auto sx = [&](double x) { return round12((x - xmin + kPad) * kScale); };
    auto sy = [&](double y) { return round12((ymax - y + kPad) * kScale); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << round12(width) << "\" height=\"" << round12(height)
        << "\" viewBox=\"0 0 " << round12(width) << ' ' << round12(height) << "\">\n";
    for (PolygonId p : {PolygonId::Upper, PolygonId::Lower}) {
        out << "  <polygon points=\"";
        bool first = true;
        for (Vec2 v : surface.vertices(p)) {
            out << (first ? "" : " ") << sx(v.x) << ',' << sy(v.y);
            first = false;
        }
        out << "\" fill=\"" << (p == PolygonId::Lower ? "#d9d9d9" : "none") << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        for (const Edge& e : surface.edges()) {
            if (e.polygon != p) continue;
            const Vec2 m = e.segment().midpoint();
            out << "  <text x=\"" << sx(m.x) << "\" y=\"" << sy(m.y) << "\" font-size=\"12\">"
                << original_name(surface.n(), e.label) << "</text>\n";
        }
    }
    if (trajectory) {
        for (const WalkPiece& piece : trajectory->pieces) {
            out << "  <line x1=\"" << sx(piece.segment.a.x) << "\" y1=\"" << sy(piece.segment.a.y) << "\" x2=\""
                << sx(piece.segment.b.x) << "\" y2=\"" << sy(piece.segment.b.y)
                << "\" stroke=\"#c0392b\" stroke-width=\"1\"/>\n";
        }
    }
    if (guide) {
        auto dots = [&](const std::vector<double>& xs, PolygonId p) {
            for (std::size_t k = 0; k < xs.size(); ++k) {
                out << "  <circle cx=\"" << sx(xs[k]) << "\" cy=\"" << sy(surface.level_y(p, static_cast<int>(k)))
                    << "\" r=\"3\" fill=\"#2c7fb8\"/>\n";
            }
        };
        dots(guide->upper_right, PolygonId::Upper);
        dots(guide->upper_left, PolygonId::Upper);
        dots(guide->lower_right, PolygonId::Lower);
        dots(guide->lower_left, PolygonId::Lower);
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace oddgon
