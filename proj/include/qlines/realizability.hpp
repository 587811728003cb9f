#pragma once

#include <optional>

#include "qlines/betweenness.hpp"

namespace qlines {

enum class Mode { quasimetric, metric };

const char* mode_name(Mode m);
std::optional<Mode> parse_mode(const std::string& s);

enum class Verdict { realizable, infeasible };

struct RealizabilityCertificate {
    Verdict verdict = Verdict::infeasible;
    std::optional<QuasimetricSpace> witness; // present iff realizable

    bool realizable() const { return verdict == Verdict::realizable; }
};

// Decides whether some space in the requested mode has exactly this
// betweenness. Encoded as an exact LP over the distances rho(x,y):
//   rho(x,y) >= 1,
//   rho(x,y) + rho(y,z) - rho(x,z) = 0   for triples in b,
//   rho(x,y) + rho(y,z) - rho(x,z) >= 1  for distinct triples not in b,
//   rho(x,y) = rho(y,x)                  in metric mode.
// Strictness of the excluded triples is encoded by the >= 1 normalization,
// valid because the system is positively homogeneous. A property-(1)
// violation is rejected up front (PropertyViolationError); property (2) is
// left to the LP, which reports such inputs infeasible. On success the
// witness is verified to reproduce b exactly before returning.
RealizabilityCertificate realize(const Betweenness& b, Mode mode);

// betweenness_of(s) == b, both inclusions. Throws SizeMismatchError.
bool verify_witness(const Betweenness& b, const QuasimetricSpace& s);

} // namespace qlines
