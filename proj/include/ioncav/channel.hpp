#pragma once

#include <string>

#include "ioncav/operators.hpp"

namespace ioncav {

/// A Lindblad jump operator with its rate (2pi MHz). The dissipator is
/// rate * (C rho C^+ - {C^+ C, rho} / 2).
struct JumpChannel {
    std::string label;
    double rate = 0;
    LinearOp op;
};

}  // namespace ioncav
