#pragma once

#include "fareybary/farey.hpp"
#include "fareybary/geometry.hpp"
#include "fareybary/sequence.hpp"

namespace fareybary {

// Barycentric step matrix C(case): retained vertices scaled by 3, new
// vertex is the column sum; |det| = 9. The case-II matrix follows the
// geometric rule (the paper's printed middle row is inconsistent with it).
Mat3 bary_step_matrix(CaseTag tag);

// One triadic refinement; every vertex of a depth-n state has r = 3^n.
Subdivision bary_subdivide(const TriangleState& t);

// M0 * C(...) products over the raw expansion of seq.
TriangleState bary_replay(const ExpansionSequence& seq);

// 1 / (2 * 3^(sum of a_k)); equals the shoelace area of bary_replay(seq).
Rat bary_area(const ExpansionSequence& seq);

// Triadic expansion of a rational point, same tie-break as the Farey side.
ExpansionSequence bary_expand(const PlanePoint& p, long max_raw_depth);

// Exact rational point whose bary expansion is preperiod followed by
// period repeated forever. Eigenvalue is 3^(raw length of period) a
// priori; the eigenvector is the exact spectral projection of (1,1,1)
// onto the dominant eigenspace (the limit direction of the period
// matrix's columns), so degenerate pure-I periods resolve too.
PlanePoint periodic_fixed_point(const ExpansionSequence& preperiod, const ExpansionSequence& period);

}  // namespace fareybary
