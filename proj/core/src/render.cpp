#include "fareybary/render.hpp"

#include <cstdlib>
#include <sstream>

#include "fareybary/bary.hpp"
#include "fareybary/farey.hpp"

namespace fareybary {

PartitionKind partition_kind_from_name(const std::string& name) {
    if (name == "farey") return PartitionKind::Farey;
    if (name == "bary") return PartitionKind::Bary;
    throw DomainError("unknown partition kind: " + name);
}

int max_render_depth() {
    if (const char* env = std::getenv("FAREYBARY_MAX_RENDER_DEPTH")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 0 && v <= 12) return static_cast<int>(v);
        throw DomainError("FAREYBARY_MAX_RENDER_DEPTH must be an integer in 0..12");
    }
    return 7;
}

std::vector<TriangleState> partition_triangles(PartitionKind kind, int raw_depth) {
    if (raw_depth < 0) throw DomainError("depth must be nonnegative");
    std::vector<TriangleState> out;
    std::vector<TriangleState> stack{base_triangle()};
    while (!stack.empty()) {
        TriangleState t = stack.back();
        stack.pop_back();
        if (t.depth == raw_depth) {
            out.push_back(t);
            continue;
        }
        Subdivision s = kind == PartitionKind::Farey ? subdivide(t) : bary_subdivide(t);
        // push in reverse so traversal emits I, II, III order
        stack.push_back(s.child_III);
        stack.push_back(s.child_II);
        stack.push_back(s.child_I);
    }
    return out;
}

std::string render_partition(PartitionKind kind, int raw_depth, int scale) {
    if (raw_depth > max_render_depth())
        throw DomainError("render depth exceeds the configured maximum");
    if (scale < 8 || scale > 65536) throw DomainError("scale out of range");
    auto tris = partition_triangles(kind, raw_depth);
    Rat s(scale);
    auto px = [&](const Rat& v) { return to_decimal(v * s, 3); };
    auto py = [&](const Rat& v) { return to_decimal((1 - v) * s, 3); };  // y grows downward in SVG
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << scale
        << "\" height=\"" << scale << "\" viewBox=\"0 0 " << scale << " " << scale << "\">\n"
        << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1\">\n";
    for (const auto& t : tris) {
        auto pts = t.points();
        svg << "<polygon points=\"";
        for (int i = 0; i < 3; ++i) {
            if (i) svg << " ";
            svg << px(pts[i].x) << "," << py(pts[i].y);
        }
        svg << "\"/>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

}  // namespace fareybary
