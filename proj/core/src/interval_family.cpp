#include "mixedweak/interval_family.hpp"

namespace mixedweak {

IntervalFamily parse_family(const std::string& text, std::size_t n_cells) {
  if (text == "all") return IntervalFamily::all(n_cells);
  if (text == "dyadic") return IntervalFamily::dyadic(n_cells);
  const std::string prefix = "windowed:";
  if (text.rfind(prefix, 0) == 0) {
    const auto arg = text.substr(prefix.size());
    std::size_t pos = 0;
    unsigned long L = 0;
    try {
      L = std::stoul(arg, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != arg.size() || L == 0) {
      throw ValidationError("family: bad window length '" + arg + "'");
    }
    return IntervalFamily::windowed(n_cells, L);
  }
  throw ValidationError("unknown family '" + text +
                        "' (expected all, dyadic, windowed:<len>)");
}

}  // namespace mixedweak
