#include "chevh1/lattice.hpp"

namespace chevh1 {

namespace {

template <class Tag>
std::string label(const LatticeVector<Tag>& v, char symbol) {
  std::string out;
  for (Index i = 0; i < v.size(); ++i) {
    const Integer& c = v[i];
    if (c == 0) continue;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    Integer mag = abs(c);
    if (mag != 1) out += mag.get_str();
    out += symbol;
    out += std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string weight_label(const Weight& w) { return label(w, 'w'); }

std::string root_label(const RootCombo& r) { return label(r, 'a'); }

}  // namespace chevh1
