#include "gadgets.hpp"

namespace gapkit {

std::pair<XorSystem, GadgetVarMap> gadget(const XorSystem& sys) {
    GadgetVarMap map{sys.nvars()};
    XorSystem out(map.new_vars());
    for (const auto& c : sys.constraints())
        for (int a1 = 0; a1 < 2; ++a1)
            for (int a2 = 0; a2 < 2; ++a2)
                for (int a3 = 0; a3 < 2; ++a3)
                    out.add(map.index(c.v[0], a1), map.index(c.v[1], a2), map.index(c.v[2], a3),
                            c.rhs ^ a1 ^ a2 ^ a3, c.mult);
    return {std::move(out), map};
}

XorSystem homogeneous(const XorSystem& sys) {
    XorSystem out(sys.nvars());
    for (const auto& c : sys.constraints()) out.add(c.v[0], c.v[1], c.v[2], 0, c.mult);
    return out;
}

}  // namespace gapkit
