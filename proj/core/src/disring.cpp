#include "ury/disring.hpp"

#include <sstream>

namespace ury::disring {

std::string AxiomReport::str() const {
  std::ostringstream os;
  os << "instance " << instance << " (" << (exhaustive ? "exhaustive" : "sampled")
     << ", " << tuples_checked << " tuples)\n";
  for (const auto& a : axioms) {
    os << "  " << (a.holds ? "pass" : "FAIL") << "  " << a.name;
    if (!a.holds) {
      os << "  witness " << a.witness
         << (a.witness_reconfirmed ? "" : "  [witness did not reconfirm]");
    }
    os << "\n";
  }
  return os.str();
}

std::vector<std::string> instance_names() {
  return {"dyadic", "rational", "boolean", "z2", "broken"};
}

AxiomReport check_instance(const std::string& name, std::size_t budget,
                           std::uint64_t seed) {
  if (name == "dyadic") return check_axioms(DyadicInstance{}, budget, seed);
  if (name == "rational") return check_axioms(RationalInstance{}, budget, seed);
  if (name == "boolean") return check_axioms(BoolLatticeInstance{}, budget, seed);
  if (name == "z2") return check_axioms(XorGroupInstance{}, budget, seed);
  if (name == "broken") return check_axioms(BrokenDisInstance{}, budget, seed);
  throw Error("unknown-instance", "no disring instance named '" + name + "'");
}

}  // namespace ury::disring
