// Builds H(E,F) for a trace-matched pair and for a mismatched pair, and
// prints both ambiguity reports.
#include "cosov/presentations/builders.hpp"

#include <iostream>

int main() {
  using namespace cosov;
  using namespace cosov::presentations;

  const ScalarMatrix E = ScalarMatrix::diagonal({1, 2});
  const ScalarMatrix F{{1, 0}, {1, 2}};
  const auto good = build_hef(E, F);
  std::cout << diamond::format_report_text(good.system, good.system.check_confluence()) << "\n";

  const ScalarMatrix G = ScalarMatrix::diagonal({4, Scalar(Rational(4, 5))});
  const auto bad = build_hef(E, G, Mode::unchecked);
  std::cout << diamond::format_report_text(bad.system, bad.system.check_confluence()) << "\n";

  const auto hplus = build_hplusq(Scalar::q());
  const auto report = hplus.system.check_confluence(4);
  std::cout << "H+(q): " << report.entries.size() << " ambiguities, "
            << (report.confluent ? "confluent" : "not confluent") << "\n";
}
