#include "fareybary/sequence.hpp"

#include <sstream>

namespace fareybary {

const char* case_name(CaseTag c) {
    switch (c) {
        case CaseTag::I: return "I";
        case CaseTag::II: return "II";
        default: return "III";
    }
}

CaseTag case_from_name(const std::string& name) {
    if (name == "I") return CaseTag::I;
    if (name == "II") return CaseTag::II;
    if (name == "III") return CaseTag::III;
    throw DomainError("unknown case tag: " + name);
}

Int ExpansionSequence::raw_length() const {
    Int total = 0;
    for (const auto& s : steps) total += s.a;
    return total;
}

std::vector<CompressedStep> codec_compress(const std::vector<CaseTag>& raw) {
    std::vector<CompressedStep> out;
    std::size_t i = 0;
    if (!raw.empty() && raw[0] == CaseTag::I) {
        Int run = 0;
        while (i < raw.size() && raw[i] == CaseTag::I) {
            ++run;
            ++i;
        }
        out.push_back({run, CaseTag::I});
    }
    while (i < raw.size()) {
        CaseTag lead = raw[i++];
        Int a = 1;
        while (i < raw.size() && raw[i] == CaseTag::I) {
            ++a;
            ++i;
        }
        out.push_back({a, lead});
    }
    return out;
}

std::vector<CaseTag> codec_expand(const std::vector<CompressedStep>& steps) {
    std::vector<CaseTag> raw;
    for (std::size_t k = 0; k < steps.size(); ++k) {
        const auto& s = steps[k];
        if (s.a < 1) throw DomainError("compressed step with a < 1");
        if (k > 0 && s.tag == CaseTag::I)
            throw DomainError("case I is only legal as the first compressed step");
        if (!s.a.fits_slong_p()) throw DomainError("compressed step too large to expand");
        long a = s.a.get_si();
        raw.push_back(s.tag);
        for (long j = 1; j < a; ++j) raw.push_back(CaseTag::I);
    }
    return raw;
}

ExpansionSequence sequence_from_raw(const std::vector<CaseTag>& raw) {
    ExpansionSequence seq;
    seq.steps = codec_compress(raw);
    return seq;
}

std::vector<CaseTag> to_raw(const ExpansionSequence& seq) { return codec_expand(seq.steps); }

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace

ExpansionSequence parse_sequence(const std::string& text) {
    ExpansionSequence seq;
    if (text.empty()) return seq;
    if (text.rfind("raw:", 0) == 0) {
        std::vector<CaseTag> raw;
        for (const auto& part : split(text.substr(4), ','))
            raw.push_back(case_from_name(part));
        return sequence_from_raw(raw);
    }
    for (const auto& part : split(text, ',')) {
        auto open = part.find('(');
        if (open == std::string::npos || part.back() != ')')
            throw DomainError("bad sequence step, expected a(CASE): " + part);
        Int a;
        if (a.set_str(part.substr(0, open), 10) != 0 || a < 1)
            throw DomainError("bad step count in: " + part);
        CaseTag tag = case_from_name(part.substr(open + 1, part.size() - open - 2));
        if (!seq.steps.empty() && tag == CaseTag::I) {
            // liberal form: a non-leading a(I) group spells out the I-run of
            // the preceding step, so 2(III),1(II),1(I) reads as 2(III),2(II)
            seq.steps.back().a += a;
        } else {
            seq.steps.push_back({a, tag});
        }
    }
    return seq;
}

std::string format_sequence(const ExpansionSequence& seq) {
    std::ostringstream out;
    for (std::size_t k = 0; k < seq.steps.size(); ++k) {
        if (k) out << ",";
        out << seq.steps[k].a.get_str() << "(" << case_name(seq.steps[k].tag) << ")";
    }
    return out.str();
}

}  // namespace fareybary
