#include "flatbase/verify.hpp"

namespace flatbase {

namespace {

struct Recorder {
    std::vector<CheckRecord> checks;
    bool all_pass = true;

    void add(std::string name, std::string anchor, bool pass, std::string details = "") {
        all_pass = all_pass && pass;
        checks.push_back({std::move(name), std::move(anchor), pass, std::move(details)});
    }

    // Runs fn, which returns the record details; a thrown Diagnostic fails
    // the record with its message.
    template <typename Fn>
    void guarded(const std::string& name, const std::string& anchor, Fn&& fn) {
        try {
            std::string details = fn();
            add(name, anchor, true, details);
        } catch (const Diagnostic& d) {
            add(name, anchor, false, d.what());
        }
    }
};

std::string vec_str(const FieldDescriptor& f, const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += f.scalar_to_string(v[i]);
    }
    return s + ")";
}

void require(bool cond, const std::string& message) {
    if (!cond) fail(Errc::ValidationError, message);
}

}  // namespace

VerificationReport verify_instance(const RingMap& phi,
                                   const std::vector<NamedModule>& file_r_modules,
                                   const std::vector<NamedModule>& file_s_modules,
                                   const std::string& instance_id, const VerifyOptions& options) {
    VerificationReport report;
    report.instance_id = instance_id;
    report.seed = options.seed;
    report.depth = options.depth;

    const AlgebraPtr r_alg = phi.source;
    const AlgebraPtr s_alg = phi.target;
    const FieldDescriptor f = r_alg->field();
    Recorder rec;

    FlatCertificate cert;
    try {
        cert = flat_certificate(phi);
        std::string eps;
        for (int i = 0; i < cert.rank; ++i) {
            if (i) eps += ", ";
            eps += vec_str(f, cert.epsilons[i]);
        }
        rec.add("certificate", "Thm 3.7: l_R(S/mS) = m", true,
                "rank m = " + std::to_string(cert.rank) + ", eps = [" + eps + "]");
    } catch (const Diagnostic& d) {
        rec.add("certificate", "Thm 3.7: l_R(S/mS) = m", false, d.what());
        report.checks = std::move(rec.checks);
        report.overall = false;
        return report;
    }

    // Truncation isomorphisms for every level up to the nilpotency index.
    for (int t = 1; t <= r_alg->nilpotency_index; ++t) {
        rec.guarded("phi_iso[t=" + std::to_string(t) + "]",
                    "Thm 3.7: phi_t is an isomorphism", [&] {
                        ModuleMap pt = phi_t_map(cert, t);
                        return "bijective on K-dimension " + std::to_string(pt.source.dim);
                    });
    }

    // Fixture catalogs: canonical modules, file modules, seeded random ones.
    std::vector<NamedModule> r_fixtures;
    ModulePresentation r_reg = regular_module(r_alg);
    r_fixtures.emplace_back("R", r_reg);
    r_fixtures.emplace_back("k", quotient_module(r_reg, r_alg->maximal_ideal).module);
    r_fixtures.emplace_back("R/m^2",
                            quotient_module(r_reg, ideal_power(*r_alg, r_alg->maximal_ideal, 2)).module);
    for (const auto& nm : file_r_modules) r_fixtures.push_back(nm);
    {
        SplitMix64 rng{options.seed ^ fnv1a(instance_id) ^ 0xa5a5a5a5ULL};
        for (int i = 0; i < options.random_modules; ++i)
            r_fixtures.emplace_back("rnd:" + std::to_string(i), random_module(rng, r_alg));
    }

    std::vector<NamedModule> s_fixtures;
    ModulePresentation s_reg = regular_module(s_alg);
    s_fixtures.emplace_back("S", s_reg);
    s_fixtures.emplace_back("S/n", quotient_module(s_reg, s_alg->maximal_ideal).module);
    s_fixtures.emplace_back("S/n^2",
                            quotient_module(s_reg, ideal_power(*s_alg, s_alg->maximal_ideal, 2)).module);
    for (const auto& nm : file_s_modules) s_fixtures.push_back(nm);
    {
        SplitMix64 rng{options.seed ^ fnv1a(instance_id) ^ 0x5a5a5a5aULL};
        for (int i = 0; i < 2; ++i)
            s_fixtures.emplace_back("rnd:" + std::to_string(i), random_module(rng, s_alg));
    }

    ModulePresentation s_as_r = restrict_scalars(s_reg, phi);
    const int fiber_length_s = length(quotient_module(s_reg, cert.fiber_ideal).module);
    const int residue_length_r =
        length(restrict_scalars(quotient_module(s_reg, s_alg->maximal_ideal).module, phi));

    for (const auto& [name, a] : r_fixtures) {
        const std::string tag = "[A=" + name + "]";

        TensorTransport tt;
        bool transport_ok = false;
        try {
            tt = make_transport(a, cert);
            transport_ok = true;
            rec.add("relations_killed" + tag, "Thm 3.7: f(a, s) is well defined", true,
                    "relation subspace of dimension " + std::to_string(tt.tensor.relations.dim()) +
                        " lies in ker h-tilde");
        } catch (const Diagnostic& d) {
            rec.add("relations_killed" + tag, "Thm 3.7: f(a, s) is well defined", false, d.what());
        }
        if (!transport_ok) continue;

        const Matrix id_tensor = Matrix::identity(f, tt.tensor.module.dim);
        const Matrix id_power = Matrix::identity(f, tt.power.dim);
        rec.add("gh_identity" + tag, "Thm 3.7: gh = id on A tensor_R S",
                tt.g.matrix * tt.h.matrix == id_tensor);
        rec.add("hg_identity" + tag, "Thm 3.7: hg = id on A^m",
                tt.h.matrix * tt.g.matrix == id_power);

        rec.guarded("tensor_dim" + tag, "Thm 3.7: A tensor_R S = A^m", [&] {
            require(tt.tensor.module.dim == cert.rank * a.dim,
                    "dim_K(A tensor S) = " + std::to_string(tt.tensor.module.dim) + " != m * dim_K A");
            return "dim_K = " + std::to_string(tt.tensor.module.dim);
        });

        rec.add("unit_injective" + tag, "Prop 3.6: A -> A tensor_R S is an injection",
                rank(tt.tensor.unit_map.matrix) == a.dim);

        rec.guarded("tensor_length" + tag,
                    "Prop 2.5: l_S(A tensor_R S) = l_R(A) l_S(S/mS)", [&] {
                        int lhs = length(tt.tensor.module);
                        int rhs = length(a) * fiber_length_s;
                        require(lhs == rhs, "l_S = " + std::to_string(lhs) + " but l_R(A) l_S(S/mS) = " +
                                                std::to_string(rhs));
                        return std::to_string(lhs) + " = " + std::to_string(length(a)) + " * " +
                               std::to_string(fiber_length_s);
                    });

        rec.guarded("induced_structure" + tag, "Thm 3.7: A^m is an Artinian S-module", [&] {
            std::vector<Matrix> actions;
            for (int j = 0; j < s_alg->dim(); ++j)
                actions.push_back(tt.h.matrix * tt.tensor.module.actions[j] * tt.g.matrix);
            ModulePresentation carrier = validate_module(s_alg, actions);

            bool s_linear = true;
            for (int j = 0; j < s_alg->dim() && s_linear; ++j)
                s_linear = tt.h.matrix * tt.tensor.module.actions[j] ==
                           carrier.actions[j] * tt.h.matrix;
            require(s_linear, "h is not S-linear onto the induced structure");

            bool recovered = true;
            for (int i = 0; i < r_alg->dim() && recovered; ++i)
                recovered = carrier.action_of(phi.matrix.col(i)) == tt.power.actions[i];
            require(recovered, "restriction along phi does not recover the usual R-structure");
            return std::string("validated; h S-linear; R-structure recovered");
        });

        rec.guarded("h_s_linear" + tag, "Thm 3.7: h is an isomorphism of S-modules", [&] {
            PowerStructure ps = induced_power_structure(a, cert);
            return "carrier dim " + std::to_string(ps.carrier.dim);
        });

        for (int i = 1; i <= options.depth; ++i) {
            rec.guarded("ext_vanishing" + tag + "[i=" + std::to_string(i) + "]",
                        "Prop 3.6: Ext^i_R(S, A) = 0", [&] {
                            int d = ext_dim(s_as_r, a, i, options.depth);
                            require(d == 0, "Ext^" + std::to_string(i) + " has dimension " +
                                                std::to_string(d));
                            return std::string("0");
                        });
        }

        rec.guarded("h0_transport" + tag,
                    "Cor 3.9: H^0_n(M tensor_R S) = (H^0_m(M))^m", [&] {
                        auto t = torsion_index(tt.tensor.module, s_alg->maximal_ideal);
                        require(t.has_value(), "tensor module is not n-torsion");
                        require(rank(tt.h.matrix) == tt.power.dim, "h is not bijective");
                        return "torsion index " + std::to_string(*t) + ", h bijective";
                    });

        if (cert.rank == 1) {
            rec.guarded("ascent_m1" + tag, "Prop 3.6: s . a := ra", [&] {
                ModulePresentation ascended = ascend_m1(a, cert);
                ModulePresentation via_power = induced_power_structure(a, cert).carrier;
                require(ascended.actions == via_power.actions,
                        "rank-1 ascent disagrees with the induced power structure");
                return std::string("ascended structure matches A^1");
            });
            rec.guarded("unit_map_bijective" + tag,
                        "Prop 3.6: A -> A tensor_R S is an isomorphism", [&] {
                            require(tt.tensor.module.dim == a.dim &&
                                        rank(tt.tensor.unit_map.matrix) == a.dim,
                                    "unit map is not bijective");
                            return std::string("bijective");
                        });
            rec.guarded("evaluation_bijective" + tag,
                        "Prop 3.6: Hom_R(S, A) -> A is an isomorphism", [&] {
                            HomRS hom = hom_rs(phi, a);
                            require(hom.module.dim == a.dim &&
                                        rank(hom.evaluation.matrix) == a.dim,
                                    "evaluation is not bijective");
                            return std::string("bijective");
                        });
        }
    }

    for (const auto& [name, b] : s_fixtures) {
        const std::string tag = "[B=" + name + "]";

        ModulePresentation b_res;
        bool restricted_ok = false;
        try {
            b_res = restrict_scalars(b, phi);
            restricted_ok = true;
            rec.add("restriction_valid" + tag,
                    "Thm 3.1: each Artinian S-module is Artinian over R", true);
        } catch (const Diagnostic& d) {
            rec.add("restriction_valid" + tag,
                    "Thm 3.1: each Artinian S-module is Artinian over R", false, d.what());
        }
        if (!restricted_ok) continue;

        rec.guarded("restriction_length" + tag, "Lemma 2.4: l_R(B) = l_S(B) l_R(S/n)", [&] {
            int lhs = length(b_res);
            int rhs = length(b) * residue_length_r;
            require(lhs == rhs,
                    "l_R(B) = " + std::to_string(lhs) + " but l_S(B) l_R(S/n) = " + std::to_string(rhs));
            return std::to_string(lhs) + " = " + std::to_string(length(b)) + " * " +
                   std::to_string(residue_length_r);
        });

        rec.guarded("length_walk" + tag, "Lemma 2.4: l_R(B) = sum l_R(B_i/B_(i-1))", [&] {
            int walk = composition_series_length(b_res);
            require(walk == length(b_res), "composition series walk disagrees with the dimension ratio");
            return "length " + std::to_string(walk);
        });

        rec.guarded("melkersson" + tag, "Lemma 2.1: B is m-torsion with Artinian (0 : m)", [&] {
            auto t = torsion_index(b_res, r_alg->maximal_ideal);
            require(t.has_value(), "restricted module is not m-torsion");
            Subspace socle = colon_submodule(b_res, r_alg->maximal_ideal);
            require((b_res.dim == 0) == socle.is_zero(), "socle vanishes on a nonzero module");
            return "torsion index " + std::to_string(*t) + ", socle dim " +
                   std::to_string(socle.dim());
        });
    }

    rec.guarded("matlis_socle", "Thm 3.1: E(S/n) realized as the Matlis dual of S", [&] {
        ModulePresentation dual = matlis_dual(s_reg);
        Subspace socle = colon_submodule(dual, s_alg->maximal_ideal);
        int socle_length = socle.dim() / s_alg->residue.field_dim;
        require(socle_length == 1, "socle of the dual has length " + std::to_string(socle_length));
        return std::string("simple socle");
    });

    rec.guarded("matlis_restricted_length", "Thm 3.1: l_R(S^dual) = dim_K S / dim_K(R/m)", [&] {
        ModulePresentation dual_res = restrict_scalars(matlis_dual(s_reg), phi);
        int expected = s_alg->dim() / r_alg->residue.field_dim;
        require(length(dual_res) == expected,
                "l_R(S^dual) = " + std::to_string(length(dual_res)) + " != " +
                    std::to_string(expected));
        return "length " + std::to_string(expected);
    });

    for (const auto& [name, m] : r_fixtures) {
        rec.guarded("double_dual[A=" + name + "]", "Thm 3.1: Matlis duality is exact here", [&] {
            ModuleMap dd = double_dual_map(m);
            require(rank(dd.matrix) == m.dim, "double dual map is not bijective");
            require(length(matlis_dual(m)) == length(m), "dual changes length");
            return std::string("bijective, length preserved");
        });
    }

    rec.guarded("comparison[B=S]", "Remark 3.8: the two S-module structures on B^m", [&] {
        ComparisonReport cmp = compare_power_structures(s_reg, cert, instance_id);
        if (cert.rank == 1) {
            require(cmp.equal, "rank-1 structures must coincide");
            return std::string("equal (m = 1)");
        }
        if (cmp.equal) return std::string("equal");
        require(cmp.witness.has_value(), "unequal without witness");
        require(cmp.witness->usual != cmp.witness->induced, "witness does not separate");
        return "unequal; witness s = " + vec_str(f, cmp.witness->s) + ", b = " +
               vec_str(f, cmp.witness->vector) + ", usual = " + vec_str(f, cmp.witness->usual) +
               ", induced = " + vec_str(f, cmp.witness->induced);
    });

    report.checks = std::move(rec.checks);
    report.overall = rec.all_pass;
    return report;
}

}  // namespace flatbase
