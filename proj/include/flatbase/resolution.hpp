#pragma once

#include "flatbase/module.hpp"

namespace flatbase {

/// Minimal free resolution data: ranks b_0..b_n and the differentials
/// d_i : R^{b_i} -> R^{b_(i-1)} encoded as K-matrices between the free
/// carriers (slot-major, slot i holding a copy of R).
struct Resolution {
    AlgebraPtr algebra;
    std::vector<int> ranks;
    std::vector<Matrix> differentials;  // differentials[i] = d_(i+1)
    std::vector<ModulePresentation> free_modules;
};

/// Minimal free resolution of M to homological degree n: b_0 = dim_k(M/mM),
/// syzygies iterated; every differential lands inside m . R^b.
Resolution minimal_free_resolution(const ModulePresentation& m, int n);

/// dim_K Ext^i_R(M, N) via Hom of the minimal free resolution of M into N.
int ext_dim(const ModulePresentation& m, const ModulePresentation& n, int i, int depth = 3);

}  // namespace flatbase
