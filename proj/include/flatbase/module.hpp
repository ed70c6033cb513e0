#pragma once

#include <optional>
#include <set>
#include <vector>

#include "flatbase/ringmap.hpp"

namespace flatbase {

/// Finitely generated module over a local algebra, presented by one exact
/// action matrix per algebra basis element.
struct ModulePresentation {
    AlgebraPtr algebra;
    int dim = 0;
    std::vector<Matrix> actions;

    /// Action matrix of an arbitrary algebra element.
    Matrix action_of(const Vec& r) const;

    bool same_presentation(const ModulePresentation& o) const {
        return dim == o.dim && actions == o.actions && same_algebra(algebra, o.algebra);
    }
};

/// K-linear map between modules over the same algebra, validated equivariant.
struct ModuleMap {
    ModulePresentation source;
    ModulePresentation target;
    Matrix matrix;
};

ModulePresentation validate_module(const AlgebraPtr& algebra, const std::vector<Matrix>& actions);
ModuleMap validate_module_map(ModulePresentation source, ModulePresentation target,
                              const Matrix& matrix);

ModulePresentation regular_module(const AlgebraPtr& algebra);
ModulePresentation zero_module(const AlgebraPtr& algebra);
/// Direct sum of m copies, slot-major coordinates, componentwise action.
ModulePresentation power_module(const ModulePresentation& m, int copies);

bool is_submodule(const ModulePresentation& m, const Subspace& u);
/// Smallest submodule containing the given vectors.
Subspace generated_submodule(const ModulePresentation& m, const std::vector<Vec>& gens);
/// The submodule u with its own presentation (coordinates in u's basis).
ModulePresentation submodule_module(const ModulePresentation& m, const Subspace& u);
struct QuotientModule {
    ModulePresentation module;
    QuotientSpace carrier;
};
QuotientModule quotient_module(const ModulePresentation& m, const Subspace& u);

/// dim_K(M) / dim_K(k).
int length(const ModulePresentation& m);
/// Independent oracle: walks an explicit composition series by repeatedly
/// quotienting out a simple submodule of the socle.
int composition_series_length(const ModulePresentation& m);

/// (0 :_M I) = {x : I x = 0} for an ideal I of the algebra.
Subspace colon_submodule(const ModulePresentation& m, const Subspace& ideal);

/// {r in A : r acts as zero on M}, an ideal of the algebra.
Subspace annihilator(const ModulePresentation& m);

/// View a module over S as a module over R through phi.
ModulePresentation restrict_scalars(const ModulePresentation& m, const RingMap& phi);

struct TensorUp {
    ModulePresentation module;  // A tensor_R S over S
    Subspace relations;         // inside A tensor_K S
    QuotientSpace carrier;      // A tensor_K S -> A tensor_R S
    ModuleMap unit_map;         // A -> restriction of the tensor, a -> a tensor 1
};
TensorUp tensor_up(const ModulePresentation& a, const RingMap& phi);

struct HomRS {
    ModulePresentation module;  // Hom_R(S, A) as an S-module
    Subspace carrier;           // R-linear maps inside Hom_K(S, A), flattened row-major
    ModuleMap evaluation;       // T -> T(1), R-linear into A
};
HomRS hom_rs(const RingMap& phi, const ModulePresentation& a);

struct HomModule {
    ModulePresentation module;
    Subspace carrier;  // equivariant maps inside Hom_K(M, N)
};
HomModule hom_module(const ModulePresentation& m, const ModulePresentation& n);

/// Hom_K(M, K) with (r . T)(x) = T(rx); transposed actions.
ModulePresentation matlis_dual(const ModulePresentation& m);
/// The canonical map M -> (M^dual)^dual (the identity in dual-dual
/// coordinates), validated equivariant.
ModuleMap double_dual_map(const ModulePresentation& m);

/// Least t with I^t M = 0, or nullopt when the ideal power chain stabilizes
/// without killing M (possible only for the unit ideal).
std::optional<int> torsion_index(const ModulePresentation& m, const Subspace& ideal);

/// Finite-length degeneration: empty for M = 0, else {m}.
std::vector<Subspace> attached_primes(const ModulePresentation& m);

// Flatten Hom_K(S, A): a dim_A x dim_S matrix T maps to a vector of length
// dim_A * dim_S, row-major.
Vec flatten(const Matrix& t);
Matrix unflatten(FieldDescriptor f, const Vec& v, int rows, int cols);

}  // namespace flatbase
