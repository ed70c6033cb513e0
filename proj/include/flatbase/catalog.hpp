#pragma once

#include "flatbase/instance.hpp"

namespace flatbase {

/// One shipped instance: a flat (or deliberately non-flat) map between two
/// named local algebras.
struct CatalogInstance {
    std::string id;
    std::string source_name;
    std::string target_name;
    RingMap map;
};

CatalogInstance make_i1();  // Q -> Q(sqrt 2)
CatalogInstance make_i2();  // Q[x]/(x^3) -> Q(sqrt 2)[x]/(x^3)
CatalogInstance make_i3();  // F_5 -> F_25
CatalogInstance make_i4();  // Q[x]/(x^2) -> Q[x,y]/(x^2, y^2)
CatalogInstance make_i5();  // Q -> Q[y]/(y^3)
CatalogInstance make_i6();  // rank-1 presentation renaming of Q[x]/(x^2)

/// The exact instance behind the built-in reproduction command.
CatalogInstance make_remark38_instance();

/// Non-flat control: Q[x]/(x^2) -> Q, x -> 0.
CatalogInstance make_nonflat_control();

std::vector<CatalogInstance> builtin_catalog();

/// Instance file wrapping one catalog entry, with a named fixture module
/// (R/m^2 over the source when nontrivial) and a verify request.
InstanceFile catalog_instance_file(const CatalogInstance& inst);

}  // namespace flatbase
