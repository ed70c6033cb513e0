#include "flatbase/basechange.hpp"

namespace flatbase {

std::vector<Vec> coordinates(const FlatCertificate& cert, const Vec& s) {
    const int dim_r = cert.map.source->dim();
    auto x = solve(cert.assembled, s);
    if (!x) fail(Errc::Internal, "assembled certificate map failed to solve");
    std::vector<Vec> out;
    for (int i = 0; i < cert.rank; ++i)
        out.emplace_back(x->begin() + i * dim_r, x->begin() + (i + 1) * dim_r);
    return out;
}

ModuleMap phi_t_map(const FlatCertificate& cert, int t) {
    if (t < 1) fail(Errc::SchemaError, "truncation level must be >= 1");
    const RingMap& phi = cert.map;
    const AlgebraPtr r_alg = phi.source;
    const AlgebraPtr s_alg = phi.target;
    const FieldDescriptor f = r_alg->field();
    const AlgebraPresentation& s = s_alg->presentation;

    Subspace mt = ideal_power(*r_alg, r_alg->maximal_ideal, t);
    QuotientModule r_mod = quotient_module(regular_module(r_alg), mt);
    ModulePresentation domain = power_module(r_mod.module, cert.rank);

    Subspace mts = extended_ideal(phi, mt);
    QuotientModule s_mod = quotient_module(restrict_scalars(regular_module(s_alg), phi), mts);

    // phi(m^t) eps_i must die in S/m^t S; this is the well-definedness of the
    // representative choice.
    for (int rrow = 0; rrow < mt.basis.rows; ++rrow) {
        Vec w = phi.apply(mt.basis.row(rrow));
        for (int i = 0; i < cert.rank; ++i)
            if (!mts.contains(s.multiply(w, cert.epsilons[i])))
                fail(Errc::Internal, "phi(m^t) eps escapes m^t S");
    }

    const int qt = r_mod.module.dim;
    Matrix mat(f, s_mod.module.dim, cert.rank * qt);
    for (int i = 0; i < cert.rank; ++i) {
        Matrix block = s_mod.carrier.projection * s.left_mult(cert.epsilons[i]) * phi.matrix *
                       r_mod.carrier.section;
        for (int c = 0; c < qt; ++c) mat.set_col(i * qt + c, block.col(c));
    }

    if (domain.dim != s_mod.module.dim || rank(mat) != domain.dim)
        fail(Errc::NotIso, "truncation map at t = " + std::to_string(t) + " is not bijective");

    return validate_module_map(domain, s_mod.module, mat);
}

TensorTransport make_transport(const ModulePresentation& a, const FlatCertificate& cert) {
    const RingMap& phi = cert.map;
    const FieldDescriptor f = phi.source->field();
    const AlgebraPresentation& s = phi.target->presentation;
    const int da = a.dim;
    const int ds = s.dim;
    const int m = cert.rank;

    TensorTransport tt;
    tt.tensor = tensor_up(a, phi);
    tt.power = power_module(a, m);

    // h-tilde on A tensor_K S: a tensor s -> (rho(r_1(s)) a, ..., rho(r_m(s)) a).
    Matrix h_tilde(f, m * da, da * ds);
    for (int v = 0; v < ds; ++v) {
        std::vector<Vec> rs = coordinates(cert, vec_unit(f, ds, v));
        std::vector<Matrix> rho(m);
        for (int i = 0; i < m; ++i) rho[i] = a.action_of(rs[i]);
        for (int u = 0; u < da; ++u) {
            for (int i = 0; i < m; ++i) {
                Vec col = rho[i].col(u);
                for (int w = 0; w < da; ++w)
                    h_tilde.at(i * da + w, u * ds + v) = col[w];
            }
        }
    }

    // The tensor relations must die under h-tilde; this is the computational
    // form of the well-definedness of f(a, s).
    for (int rrow = 0; rrow < tt.tensor.relations.basis.rows; ++rrow)
        if (!vec_is_zero(h_tilde.apply(tt.tensor.relations.basis.row(rrow))))
            fail(Errc::RelationNotKilled,
                 "tensor relation survives h-tilde (row " + std::to_string(rrow) + ")");

    Matrix h_mat = h_tilde * tt.tensor.carrier.section;

    Matrix g_mat(f, tt.tensor.carrier.dim, m * da);
    for (int i = 0; i < m; ++i) {
        const Vec& eps = cert.epsilons[i];
        for (int u = 0; u < da; ++u) {
            Vec flat(da * ds);
            for (int w = 0; w < ds; ++w) flat[u * ds + w] = eps[w];
            g_mat.set_col(i * da + u, tt.tensor.carrier.projection.apply(flat));
        }
    }

    ModulePresentation tensor_as_r = restrict_scalars(tt.tensor.module, phi);
    tt.h = validate_module_map(tensor_as_r, tt.power, h_mat);
    tt.g = validate_module_map(tt.power, tensor_as_r, g_mat);

    if (g_mat * h_mat != Matrix::identity(f, tt.tensor.carrier.dim))
        fail(Errc::Internal, "gh != id on A tensor_R S");
    if (h_mat * g_mat != Matrix::identity(f, m * da))
        fail(Errc::Internal, "hg != id on A^m");
    return tt;
}

ModuleMap map_h(const ModulePresentation& a, const FlatCertificate& cert) {
    return make_transport(a, cert).h;
}

ModuleMap map_g(const ModulePresentation& a, const FlatCertificate& cert) {
    return make_transport(a, cert).g;
}

PowerStructure induced_power_structure(const ModulePresentation& a,
                                       const FlatCertificate& cert) {
    const RingMap& phi = cert.map;
    const FieldDescriptor f = phi.source->field();
    const int ds = phi.target->dim();
    TensorTransport tt = make_transport(a, cert);

    std::vector<Matrix> actions;
    for (int j = 0; j < ds; ++j)
        actions.push_back(tt.h.matrix * tt.tensor.module.actions[j] * tt.g.matrix);

    PowerStructure ps;
    ps.base = a;
    ps.carrier = validate_module(phi.target, actions);
    ps.g = std::move(tt.g);
    ps.h = std::move(tt.h);
    ps.provenance = StructureProvenance::Induced;

    // Restricting along phi must recover the componentwise R-structure.
    for (int i = 0; i < phi.source->dim(); ++i) {
        Matrix restricted = ps.carrier.action_of(phi.matrix.col(i));
        if (restricted != tt.power.actions[i])
            fail(Errc::Internal, "restriction along phi does not recover the usual R-structure");
    }

    // h is S-linear from the tensor to this structure.
    for (int j = 0; j < ds; ++j)
        if (ps.h.matrix * tt.tensor.module.actions[j] != ps.carrier.actions[j] * ps.h.matrix)
            fail(Errc::Internal, "h is not S-linear onto the induced structure");

    return ps;
}

ModulePresentation ascend_m1(const ModulePresentation& a, const FlatCertificate& cert) {
    if (cert.rank != 1) fail(Errc::RankNotOne, "ascent on the carrier needs rank 1");
    const AlgebraPtr s_alg = cert.map.target;
    const FieldDescriptor f = s_alg->field();

    std::vector<Matrix> actions;
    for (int j = 0; j < s_alg->dim(); ++j) {
        std::vector<Vec> r = coordinates(cert, vec_unit(f, s_alg->dim(), j));
        actions.push_back(a.action_of(r[0]));
    }
    ModulePresentation out = validate_module(s_alg, actions);

    // Compatibility: restriction along phi is the original structure.
    for (int i = 0; i < cert.map.source->dim(); ++i)
        if (out.action_of(cert.map.apply(vec_unit(f, cert.map.source->dim(), i))) !=
            a.actions[i])
            fail(Errc::Internal, "rank-1 ascent does not restrict to the original structure");
    return out;
}

namespace {

StructureDims dims_of(const ModulePresentation& carrier) {
    StructureDims d;
    d.carrier_dim = carrier.dim;
    d.socle_dim = colon_submodule(carrier, carrier.algebra->maximal_ideal).dim();
    d.length_s = length(carrier);
    d.annihilator_dim = annihilator(carrier).dim();
    return d;
}

}  // namespace

ComparisonReport compare_power_structures(const ModulePresentation& b,
                                          const FlatCertificate& cert,
                                          const std::string& instance_id) {
    const RingMap& phi = cert.map;
    if (!same_algebra(b.algebra, phi.target))
        fail(Errc::FieldMismatch, "module is not over the map target");
    const FieldDescriptor f = phi.target->field();
    const int ds = phi.target->dim();

    ModulePresentation usual = power_module(b, cert.rank);
    ModulePresentation restricted = restrict_scalars(b, phi);
    PowerStructure induced = induced_power_structure(restricted, cert);

    ComparisonReport report;
    report.instance_id = instance_id;
    report.usual_dims = dims_of(usual);
    report.induced_dims = dims_of(induced.carrier);
    report.equal = usual.actions == induced.carrier.actions;

    if (!report.equal) {
        // Two K-linear structures that differ differ on a basis pair, so the
        // deterministic sweep always produces a witness.
        for (int j = 0; j < ds && !report.witness; ++j) {
            if (usual.actions[j] == induced.carrier.actions[j]) continue;
            for (int c = 0; c < usual.dim; ++c) {
                Vec e = vec_unit(f, usual.dim, c);
                Vec u = usual.actions[j].apply(e);
                Vec v = induced.carrier.actions[j].apply(e);
                if (u != v) {
                    report.witness = StructureWitness{vec_unit(f, ds, j), e, u, v};
                    break;
                }
            }
        }
        if (!report.witness)
            fail(Errc::Internal, "unequal structures without a basis witness");
    }
    return report;
}

}  // namespace flatbase
