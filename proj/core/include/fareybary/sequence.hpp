#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fareybary/rational.hpp"

namespace fareybary {

// Which subtriangle a refinement step descends into.
enum class CaseTag : std::uint8_t { I = 0, II = 1, III = 2 };

const char* case_name(CaseTag c);
CaseTag case_from_name(const std::string& name);

// One compressed step a(case): a 'case' subdivision followed by a-1
// case-I subdivisions. For steps after the first the case must be II
// or III; an initial I-run is written as a(I).
struct CompressedStep {
    Int a;
    CaseTag tag;

    bool operator==(const CompressedStep&) const = default;
};

enum class Termination : std::uint8_t { Running = 0, VertexHit = 1, DepthLimit = 2 };

// A (prefix of a) two-dimensional continued fraction.
struct ExpansionSequence {
    std::vector<CompressedStep> steps;
    Termination termination = Termination::Running;
    long vertex_depth = -1;        // raw depth of the vertex hit, when any
    bool touched_boundary = false; // some step needed the I < II < III tie-break

    Int raw_length() const;
    bool operator==(const ExpansionSequence& o) const {
        return steps == o.steps;  // termination is bookkeeping, not identity
    }
};

// Raw case list <-> compressed form. compress groups a leading I-run as
// a1(I) and otherwise one non-I case plus its following I-run; expand is
// the inverse and rejects case I at step index >= 2.
std::vector<CompressedStep> codec_compress(const std::vector<CaseTag>& raw);
std::vector<CaseTag> codec_expand(const std::vector<CompressedStep>& steps);

ExpansionSequence sequence_from_raw(const std::vector<CaseTag>& raw);
std::vector<CaseTag> to_raw(const ExpansionSequence& seq);

// Text forms: "2(III),1(II)" (compressed) and "raw:III,I,II,I".
ExpansionSequence parse_sequence(const std::string& text);
std::string format_sequence(const ExpansionSequence& seq);

}  // namespace fareybary
