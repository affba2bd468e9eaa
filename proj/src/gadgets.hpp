#pragma once

#include <utility>

#include "xor_system.hpp"

namespace gapkit {

// x_j^a lives at index 2j+a.
struct GadgetVarMap {
    int original_vars = 0;
    int index(int j, int a) const { return 2 * j + a; }
    std::pair<int, int> original(int idx) const { return {idx / 2, idx % 2}; }
    int new_vars() const { return 2 * original_vars; }
};

// Each equation x_i+x_j+x_k = b of weight w turns into the eight twisted
// equations x_i^{a1}+x_j^{a2}+x_k^{a3} = b+a1+a2+a3, each of weight w.
std::pair<XorSystem, GadgetVarMap> gadget(const XorSystem& sys);

// Same left-hand sides, all right-hand sides zeroed. Constraints that agreed
// up to RHS merge, with multiplicities summed.
XorSystem homogeneous(const XorSystem& sys);

}  // namespace gapkit
