#pragma once

#include <optional>
#include <string>

#include "flatbase/resolution.hpp"

namespace flatbase {

/// Exact epsilon-coordinates of s: the unique (r_1..r_m) in R^m with
/// s = sum phi(r_i) eps_i, from the bijective assembled map.
std::vector<Vec> coordinates(const FlatCertificate& cert, const Vec& s);

/// Truncation isomorphism (R/m^t)^m -> S/m^t S, slot-major carriers, both
/// sides R-modules. Raises NotIso if bijectivity fails.
ModuleMap phi_t_map(const FlatCertificate& cert, int t);

/// Tensor transport package for one base module A: the tensor A tensor_R S,
/// the mutually inverse maps h : A tensor_R S -> A^m and g : A^m -> A tensor_R S,
/// and the componentwise power module.
struct TensorTransport {
    TensorUp tensor;
    ModulePresentation power;  // A^m over R, componentwise
    ModuleMap h;
    ModuleMap g;
};
TensorTransport make_transport(const ModulePresentation& a, const FlatCertificate& cert);

ModuleMap map_h(const ModulePresentation& a, const FlatCertificate& cert);
ModuleMap map_g(const ModulePresentation& a, const FlatCertificate& cert);

enum class StructureProvenance { Induced, Usual };

/// S-module structure on A^m transported through h: s . v = h(s . g(v)).
struct PowerStructure {
    ModulePresentation base;      // A over R
    ModulePresentation carrier;   // A^m over S
    ModuleMap g;
    ModuleMap h;
    StructureProvenance provenance = StructureProvenance::Induced;
};
PowerStructure induced_power_structure(const ModulePresentation& a, const FlatCertificate& cert);

/// Rank-one ascent: the S-structure on A itself (Prop 3.6 shape); requires
/// cert.rank == 1.
ModulePresentation ascend_m1(const ModulePresentation& a, const FlatCertificate& cert);

struct StructureWitness {
    Vec s;        // algebra element of S
    Vec vector;   // element of B^m (flattened)
    Vec usual;    // s . vector under the componentwise structure
    Vec induced;  // s . vector under the transported structure
};

struct StructureDims {
    int carrier_dim = 0;
    int socle_dim = 0;
    int length_s = 0;
    int annihilator_dim = 0;
};

struct ComparisonReport {
    std::string instance_id;
    bool equal = false;
    std::optional<StructureWitness> witness;
    StructureDims usual_dims;
    StructureDims induced_dims;
};

/// Builds both S-structures on B^m (componentwise vs transported through h
/// after restriction) and compares the action matrices exactly; when they
/// differ the first disagreeing basis pair is returned as witness.
ComparisonReport compare_power_structures(const ModulePresentation& b,
                                          const FlatCertificate& cert,
                                          const std::string& instance_id);

}  // namespace flatbase
