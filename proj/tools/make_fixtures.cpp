// Regenerates the example files under fixtures/ from the bundled demo
// systems. Run from the repository root after changing the demos.

#include <iostream>
#include <string>

#include "semenc/demos.hpp"
#include "semenc/io.hpp"

using namespace semenc;

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "fixtures";
  auto path = [&](const std::string& name) { return dir + "/" + name; };

  io::write_file(path("flipflop.net"), io::to_json(demos::flip_flop_pair()));
  io::write_file(path("flipflop.enc"),
                 io::to_json(encoding::Encoding{demos::flip_flop_encoding()}));
  io::write_file(path("flipflop.kb"),
                 "# knowledge-base v1\n(a & b) | (~a & ~b)\n");
  io::write_file(path("conjunction.kb"), "# knowledge-base v1\na & ~b\n");

  io::write_file(path("selector.net"), io::to_json(demos::selector_grid()));
  io::write_file(path("selector.enc"),
                 io::to_json(encoding::Encoding{demos::selector_grid_encoding()}));
  std::string selector_kb = "# knowledge-base v1\n";
  for (const char* z : {"a", "b", "c", "d"})
    selector_kb += "r1(" + std::string(z) + ") <-> r2(" + z + ")\n";
  selector_kb += "r1(a)\nr1(b)\nr1(c)\n~r1(d)\n";
  io::write_file(path("selector.kb"), selector_kb);

  io::write_file(path("chain.kb"), "# knowledge-base v1\nc <- a.\nc <- b.\na.\n");
  io::write_file(path("rotation.net"),
                 io::to_json(demos::three_cycle_rotation(3)));
  io::write_file(path("orchain.net"),
                 io::to_json(demos::feedforward_or_chain()));

  io::write_file(path("interval.kb"),
                 "# knowledge-base v1\n[0.75,1] : a | b\n[0.5,1] : ~a | ~b\n");

  io::write_file(path("pair.snet"),
                 io::to_json(stochastic::StochasticNetwork{demos::stochastic_pair()}));
  io::write_file(path("pair.enc"),
                 io::to_json(encoding::Encoding{demos::stochastic_pair_encoding()}));
  io::write_file(path("pair.kb"), "# knowledge-base v1\nY1 <-> Y2\n");

  io::write_file(path("loss.kb"), "# knowledge-base v1\ny1 | y2\n");
  io::write_file(path("penalty.kb"),
                 "# knowledge-base v1\n1 : a | b\n1 : ~b\n");

  std::cout << "fixtures written to " << dir << "\n";
  return 0;
}
