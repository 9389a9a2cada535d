#include <doctest.h>

#include <cstdlib>

#include "fareybary/render.hpp"

using namespace fareybary;

namespace {

bool has_vertex(const std::vector<TriangleState>& tris, const char* text) {
    PlanePoint p = parse_point(text);
    for (const auto& t : tris)
        for (const auto& v : t.points())
            if (v == p) return true;
    return false;
}

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("partition enumeration") {
    auto farey1 = partition_triangles(PartitionKind::Farey, 1);
    REQUIRE(farey1.size() == 3);
    CHECK(has_vertex(farey1, "2/3,1/3"));

    auto bary0 = partition_triangles(PartitionKind::Bary, 0);
    REQUIRE(bary0.size() == 1);
    CHECK(bary0[0].matrix() == base_matrix());

    auto farey2 = partition_triangles(PartitionKind::Farey, 2);
    REQUIRE(farey2.size() == 9);
    CHECK(has_vertex(farey2, "3/5,1/5"));
    CHECK(has_vertex(farey2, "4/5,2/5"));
    CHECK(has_vertex(farey2, "3/5,2/5"));

    CHECK(partition_triangles(PartitionKind::Bary, 4).size() == 81);
}

TEST_CASE("SVG output is deterministic and structurally sane") {
    std::string a = render_partition(PartitionKind::Farey, 3, 720);
    std::string b = render_partition(PartitionKind::Farey, 3, 720);
    CHECK(a == b);
    CHECK(a.rfind("<?xml", 0) == 0);
    CHECK(count_occurrences(a, "<polygon") == 27);
    CHECK(a.find("</svg>") != std::string::npos);

    std::string bary = render_partition(PartitionKind::Bary, 1, 90);
    CHECK(count_occurrences(bary, "<polygon") == 3);
    // base corners at pixel scale 90: (0,90), (90,90), (90,0)
    CHECK(bary.find("0,90 90,90 60,60") != std::string::npos);
}

TEST_CASE("render depth is capped, env override respected") {
    CHECK(max_render_depth() == 7);
    CHECK_THROWS_AS(render_partition(PartitionKind::Farey, 8, 720), DomainError);

    setenv("FAREYBARY_MAX_RENDER_DEPTH", "2", 1);
    CHECK(max_render_depth() == 2);
    CHECK_THROWS_AS(render_partition(PartitionKind::Farey, 3, 720), DomainError);
    setenv("FAREYBARY_MAX_RENDER_DEPTH", "junk", 1);
    CHECK_THROWS_AS(max_render_depth(), DomainError);
    unsetenv("FAREYBARY_MAX_RENDER_DEPTH");
    CHECK(max_render_depth() == 7);

    CHECK_THROWS_AS(partition_kind_from_name("hex"), DomainError);
    CHECK_THROWS_AS(render_partition(PartitionKind::Farey, 1, 4), DomainError);
}
