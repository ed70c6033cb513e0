#include "flatbase/instance.hpp"

#include <algorithm>

#include "json.hpp"

namespace flatbase {

using nlohmann::json;

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& message) {
    fail(Errc::SchemaError, path + ": " + message);
}

Rat parse_scalar_json(const FieldDescriptor& f, const json& j, const std::string& path) {
    if (f.is_q()) {
        if (!j.is_string()) schema_fail(path, "rational scalars are strings like \"a/b\"");
        try {
            return f.parse_scalar(j.get<std::string>());
        } catch (const Diagnostic&) {
            schema_fail(path, "bad rational literal '" + j.get<std::string>() + "'");
        }
    }
    if (!j.is_number_integer()) schema_fail(path, "F_p scalars are integers in [0, p)");
    auto v = j.get<long long>();
    if (v < 0 || v >= f.p) schema_fail(path, "F_p scalar out of range [0, p)");
    return f.from_int(v);
}

Vec parse_vec(const FieldDescriptor& f, const json& j, int expect, const std::string& path) {
    if (!j.is_array()) schema_fail(path, "expected an array of scalars");
    if (expect >= 0 && static_cast<int>(j.size()) != expect)
        schema_fail(path, "expected " + std::to_string(expect) + " scalars");
    Vec out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(parse_scalar_json(f, j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

Matrix parse_matrix(const FieldDescriptor& f, const json& j, int rows, int cols,
                    const std::string& path) {
    if (!j.is_array()) schema_fail(path, "expected an array of rows");
    if (rows >= 0 && static_cast<int>(j.size()) != rows)
        schema_fail(path, "expected " + std::to_string(rows) + " rows");
    std::vector<Vec> parsed;
    for (std::size_t i = 0; i < j.size(); ++i)
        parsed.push_back(parse_vec(f, j[i], cols, path + "[" + std::to_string(i) + "]"));
    if (parsed.empty()) return Matrix(f, 0, cols < 0 ? 0 : cols);
    return Matrix::from_rows(f, parsed);
}

json scalar_json(const FieldDescriptor& f, const Rat& x) {
    if (f.is_q()) return f.scalar_to_string(x);
    return static_cast<long long>(numerator(x));
}

json vec_json(const FieldDescriptor& f, const Vec& v) {
    json out = json::array();
    for (const Rat& x : v) out.push_back(scalar_json(f, x));
    return out;
}

json matrix_json(const FieldDescriptor& f, const Matrix& m) {
    json out = json::array();
    for (int i = 0; i < m.rows; ++i) out.push_back(vec_json(f, m.row(i)));
    return out;
}

}  // namespace

std::string scalar_to_json_string(const FieldDescriptor& f, const Rat& x) {
    return f.scalar_to_string(x);
}

InstanceFile parse_instance(const std::string& bytes) {
    json doc;
    try {
        doc = json::parse(bytes);
    } catch (const json::exception& e) {
        fail(Errc::SyntaxError, e.what());
    }
    if (!doc.is_object()) fail(Errc::SchemaError, "top level must be a JSON object");

    InstanceFile file;

    if (!doc.contains("field") || !doc["field"].is_object())
        fail(Errc::SchemaError, "field: missing descriptor object");
    const json& fj = doc["field"];
    std::string kind = fj.value("kind", "");
    if (kind == "Q") {
        file.field = FieldDescriptor::rationals();
    } else if (kind == "Fp") {
        if (!fj.contains("p") || !fj["p"].is_number_integer())
            fail(Errc::SchemaError, "field.p: missing prime modulus");
        try {
            file.field = FieldDescriptor::prime_field(fj["p"].get<long long>());
        } catch (const Diagnostic& d) {
            fail(Errc::ValidationError, std::string("field.p: ") + d.what());
        }
    } else {
        fail(Errc::SchemaError, "field.kind: must be \"Q\" or \"Fp\"");
    }

    if (!doc.contains("algebras") || !doc["algebras"].is_object() || doc["algebras"].empty())
        fail(Errc::SchemaError, "algebras: at least one algebra is required");
    for (const auto& [name, aj] : doc["algebras"].items()) {
        const std::string path = "algebras." + name;
        if (!aj.is_object()) schema_fail(path, "expected an object");
        if (!aj.contains("dim") || !aj["dim"].is_number_integer())
            schema_fail(path + ".dim", "missing dimension");
        int dim = aj["dim"].get<int>();
        if (dim < 1) schema_fail(path + ".dim", "dimension must be positive");

        AlgebraPresentation pres;
        pres.field = file.field;
        pres.dim = dim;
        if (!aj.contains("unit")) schema_fail(path + ".unit", "missing");
        pres.unit = parse_vec(file.field, aj["unit"], dim, path + ".unit");
        if (!aj.contains("mul") || !aj["mul"].is_array() ||
            static_cast<int>(aj["mul"].size()) != dim)
            schema_fail(path + ".mul", "expected dim x dim table");
        pres.mul.resize(dim);
        for (int i = 0; i < dim; ++i) {
            const json& row = aj["mul"][i];
            if (!row.is_array() || static_cast<int>(row.size()) != dim)
                schema_fail(path + ".mul[" + std::to_string(i) + "]", "expected dim entries");
            pres.mul[i].resize(dim);
            for (int j = 0; j < dim; ++j)
                pres.mul[i][j] = parse_vec(file.field, row[j], dim,
                                           path + ".mul[" + std::to_string(i) + "][" +
                                               std::to_string(j) + "]");
        }
        if (aj.contains("provenance")) {
            if (!aj["provenance"].is_string()) schema_fail(path + ".provenance", "expected string");
            pres.provenance = aj["provenance"].get<std::string>();
        }

        std::optional<Subspace> asserted;
        if (aj.contains("maximal_ideal")) {
            Matrix rows = parse_matrix(file.field, aj["maximal_ideal"], -1, dim,
                                       path + ".maximal_ideal");
            if (rows.rows == 0) rows = Matrix(file.field, 0, dim);
            asserted = Subspace::span_of(rows);
        }

        try {
            file.algebras.emplace(name, share(validate_algebra(pres, asserted)));
        } catch (const Diagnostic& d) {
            if (d.code() == Errc::SchemaError) throw;
            fail(Errc::ValidationError, path + ": " + d.what());
        }
    }

    auto find_algebra = [&](const std::string& name, const std::string& path) {
        auto it = file.algebras.find(name);
        if (it == file.algebras.end()) schema_fail(path, "unknown algebra '" + name + "'");
        return it->second;
    };

    if (doc.contains("maps")) {
        if (!doc["maps"].is_object()) fail(Errc::SchemaError, "maps: expected an object");
        for (const auto& [name, mj] : doc["maps"].items()) {
            const std::string path = "maps." + name;
            if (!mj.is_object()) schema_fail(path, "expected an object");
            std::string from = mj.value("from", "");
            std::string to = mj.value("to", "");
            AlgebraPtr source = find_algebra(from, path + ".from");
            AlgebraPtr target = find_algebra(to, path + ".to");
            if (!mj.contains("matrix")) schema_fail(path + ".matrix", "missing");
            Matrix mat = parse_matrix(file.field, mj["matrix"], target->dim(), source->dim(),
                                      path + ".matrix");
            try {
                file.maps.push_back({name, validate_ring_map(source, target, mat), from, to});
            } catch (const Diagnostic& d) {
                if (d.code() == Errc::SchemaError) throw;
                fail(Errc::ValidationError, path + ": " + d.what());
            }
        }
    }

    if (doc.contains("modules")) {
        if (!doc["modules"].is_object()) fail(Errc::SchemaError, "modules: expected an object");
        for (const auto& [name, mj] : doc["modules"].items()) {
            const std::string path = "modules." + name;
            if (!mj.is_object()) schema_fail(path, "expected an object");
            std::string alg_name = mj.value("algebra", "");
            AlgebraPtr algebra = find_algebra(alg_name, path + ".algebra");
            if (!mj.contains("dim") || !mj["dim"].is_number_integer())
                schema_fail(path + ".dim", "missing dimension");
            int dim = mj["dim"].get<int>();
            if (dim < 0) schema_fail(path + ".dim", "dimension must be >= 0");
            if (!mj.contains("actions") || !mj["actions"].is_array() ||
                static_cast<int>(mj["actions"].size()) != algebra->dim())
                schema_fail(path + ".actions", "expected one matrix per algebra basis element");
            std::vector<Matrix> actions;
            for (int i = 0; i < algebra->dim(); ++i)
                actions.push_back(parse_matrix(file.field, mj["actions"][i], dim, dim,
                                               path + ".actions[" + std::to_string(i) + "]"));
            try {
                file.modules.push_back({name, alg_name, validate_module(algebra, actions)});
            } catch (const Diagnostic& d) {
                if (d.code() == Errc::SchemaError) throw;
                fail(Errc::ValidationError, path + ": " + d.what());
            }
        }
    }

    if (doc.contains("verify")) {
        if (!doc["verify"].is_array()) fail(Errc::SchemaError, "verify: expected an array");
        for (std::size_t i = 0; i < doc["verify"].size(); ++i) {
            const json& rj = doc["verify"][i];
            const std::string path = "verify[" + std::to_string(i) + "]";
            if (!rj.is_object()) schema_fail(path, "expected an object");
            VerifyRequest req;
            req.map_name = rj.value("map", "");
            req.name = rj.value("name", req.map_name);
            bool found = false;
            for (const auto& nm : file.maps) found = found || nm.name == req.map_name;
            if (!found) schema_fail(path + ".map", "unknown map '" + req.map_name + "'");
            if (rj.contains("modules")) {
                if (!rj["modules"].is_array()) schema_fail(path + ".modules", "expected an array");
                for (const auto& mn : rj["modules"]) {
                    if (!mn.is_string()) schema_fail(path + ".modules", "expected names");
                    std::string name = mn.get<std::string>();
                    bool mod_found = false;
                    for (const auto& me : file.modules) mod_found = mod_found || me.name == name;
                    if (!mod_found) schema_fail(path + ".modules", "unknown module '" + name + "'");
                    req.module_names.push_back(name);
                }
            }
            file.requests.push_back(std::move(req));
        }
        std::sort(file.requests.begin(), file.requests.end(),
                  [](const VerifyRequest& a, const VerifyRequest& b) { return a.name < b.name; });
    }

    return file;
}

std::string emit_instance(const InstanceFile& file) {
    const FieldDescriptor& f = file.field;
    json doc;

    if (f.is_q()) {
        doc["field"] = {{"kind", "Q"}};
    } else {
        doc["field"] = {{"kind", "Fp"}, {"p", f.p}};
    }

    json algebras = json::object();
    for (const auto& [name, alg] : file.algebras) {
        json aj;
        aj["dim"] = alg->dim();
        aj["unit"] = vec_json(f, alg->presentation.unit);
        json mul = json::array();
        for (int i = 0; i < alg->dim(); ++i) {
            json row = json::array();
            for (int j = 0; j < alg->dim(); ++j) row.push_back(vec_json(f, alg->presentation.mul[i][j]));
            mul.push_back(row);
        }
        aj["mul"] = mul;
        aj["maximal_ideal"] = matrix_json(f, alg->maximal_ideal.basis);
        if (alg->presentation.provenance) aj["provenance"] = *alg->presentation.provenance;
        algebras[name] = aj;
    }
    doc["algebras"] = algebras;

    if (!file.maps.empty()) {
        json maps = json::object();
        for (const auto& nm : file.maps)
            maps[nm.name] = {{"from", nm.from}, {"to", nm.to}, {"matrix", matrix_json(f, nm.map.matrix)}};
        doc["maps"] = maps;
    }

    if (!file.modules.empty()) {
        json modules = json::object();
        for (const auto& me : file.modules) {
            json actions = json::array();
            for (const Matrix& a : me.module.actions) actions.push_back(matrix_json(f, a));
            modules[me.name] = {{"algebra", me.algebra_name},
                                {"dim", me.module.dim},
                                {"actions", actions}};
        }
        doc["modules"] = modules;
    }

    if (!file.requests.empty()) {
        json verify = json::array();
        for (const auto& req : file.requests) {
            json rj = {{"name", req.name}, {"map", req.map_name}};
            if (!req.module_names.empty()) rj["modules"] = req.module_names;
            verify.push_back(rj);
        }
        doc["verify"] = verify;
    }

    return doc.dump(2) + "\n";
}

}  // namespace flatbase
