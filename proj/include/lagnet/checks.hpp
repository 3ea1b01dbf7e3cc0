#ifndef LAGNET_CHECKS_HPP
#define LAGNET_CHECKS_HPP

#include <json.hpp>

namespace lagnet {

// Result of an identity check. On failure, `witness` carries the first
// failing identity with its indices and both side values so reports stay
// machine-readable.
struct CheckOutcome {
  bool ok = true;
  nlohmann::json witness = nlohmann::json::object();

  static CheckOutcome pass() { return {}; }
  static CheckOutcome fail(nlohmann::json w) { return {false, std::move(w)}; }
};

}  // namespace lagnet

#endif
