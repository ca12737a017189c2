#pragma once

#include <string>

#include "semenc/net.hpp"

namespace semenc::net {

/// Graphviz DOT rendering of the transition diagram. States in X_inf are
/// drawn filled; node order follows the state enumeration, so the output is
/// deterministic.
std::string to_dot(const CandidateNetwork& net, const TransitionReport& report);

}  // namespace semenc::net
