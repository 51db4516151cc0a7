#pragma once

#include <string>

#include "vcyc/dim_engine.hpp"

namespace vcyc::dim {

struct WitnessCheck {
  bool ok = true;
  std::string reason;  // empty when ok
};

/// Re-derives the stated property of a witness from the group data alone, without
/// going through the dispatcher. `tag` is the case the witness supports.
WitnessCheck verify_witness(const GroupSpec& spec, CaseTag tag, const Witness& w);

}  // namespace vcyc::dim
