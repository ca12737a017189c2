#include "semenc/dot.hpp"

namespace semenc::net {

std::string to_dot(const CandidateNetwork& net, const TransitionReport& report) {
  (void)net;
  std::string out;
  out += "digraph transitions {\n";
  out += "  rankdir=LR;\n";
  out += "  node [shape=ellipse, fontname=\"Helvetica\"];\n";
  for (std::size_t s = 0; s < report.states.size(); ++s) {
    out += "  \"" + to_string(report.states[s]) + "\"";
    if (report.recurrent[s]) out += " [style=filled, fillcolor=gold]";
    out += ";\n";
  }
  for (std::size_t s = 0; s < report.states.size(); ++s) {
    out += "  \"" + to_string(report.states[s]) + "\" -> \"" +
           to_string(report.states[report.successor[s]]) + "\";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace semenc::net
