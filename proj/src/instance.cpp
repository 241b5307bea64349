#include "orenil/instance.hpp"

#include "orenil/errors.hpp"

#include <fstream>
#include <sstream>

namespace orenil {

using json = nlohmann::ordered_json;

Rational rational_from_json(const json &value) {
    if (value.is_string())
        return Rational::from_string(value.get<std::string>());
    if (value.is_number_integer())
        return Rational(static_cast<long>(value.get<std::int64_t>()));
    if (value.is_number_float())
        throw ParseError("floating-point literals are not allowed; write "
                         "rationals as \"p/q\" strings");
    throw ParseError("expected a rational literal, got " +
                     std::string(value.type_name()));
}

namespace {

QVec coords_from_json(const json &value, std::size_t dim,
                      const std::string &what) {
    if (!value.is_array() || value.size() != dim)
        throw ParseError(what + " must be an array of " +
                         std::to_string(dim) + " rationals");
    QVec out;
    out.reserve(dim);
    for (const auto &entry : value)
        out.push_back(rational_from_json(entry));
    return out;
}

AlgebraPtr algebra_from_json(const json &doc) {
    if (doc.contains("algebra")) {
        const json &gen = doc.at("algebra");
        if (gen.is_string()) {
            if (gen.get<std::string>() == "heisenberg")
                return heisenberg_algebra();
            throw ParseError("unknown algebra generator \"" +
                             gen.get<std::string>() + "\"");
        }
        if (gen.is_object()) {
            const std::string kind = gen.value("kind", "");
            if (kind == "free-nilpotent")
                return free_nilpotent_algebra(
                    gen.at("generators").get<unsigned>(),
                    gen.at("class").get<unsigned>());
            throw ParseError("unknown algebra generator kind \"" + kind +
                             "\"");
        }
        throw ParseError("\"algebra\" must be a string or an object");
    }

    if (!doc.contains("basis"))
        throw ParseError("instance needs \"basis\" (+ \"products\") or an "
                         "\"algebra\" directive");
    const json &basis = doc.at("basis");
    if (!basis.is_array() || basis.empty())
        throw ParseError("\"basis\" must be a nonempty array of labels");
    std::vector<std::string> labels;
    for (const auto &l : basis) {
        if (!l.is_string())
            throw ParseError("basis labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    const std::size_t dim = labels.size();

    std::vector<std::vector<Algebra::SparseProduct>> table(
        dim, std::vector<Algebra::SparseProduct>(dim));
    if (doc.contains("products")) {
        const json &products = doc.at("products");
        if (!products.is_array())
            throw ParseError("\"products\" must be an array of [i, j, "
                             "coords] entries");
        for (const auto &entry : products) {
            if (!entry.is_array() || entry.size() != 3)
                throw ParseError("each product entry must be [i, j, coords]");
            const auto i = entry.at(0).get<std::int64_t>();
            const auto j = entry.at(1).get<std::int64_t>();
            if (i < 0 || j < 0 || i >= static_cast<std::int64_t>(dim) ||
                j >= static_cast<std::int64_t>(dim))
                throw ParseError("product indices out of range (0-based): [" +
                                 std::to_string(i) + ", " + std::to_string(j) +
                                 "]");
            const QVec coords =
                coords_from_json(entry.at(2), dim, "product coordinates");
            auto &row = table[static_cast<std::size_t>(i)]
                             [static_cast<std::size_t>(j)];
            if (!row.empty())
                throw ParseError("duplicate product entry for [" +
                                 std::to_string(i) + ", " + std::to_string(j) +
                                 "]");
            for (std::size_t l = 0; l < dim; ++l)
                if (!coords[l].is_zero())
                    row.emplace_back(l, coords[l]);
        }
    }
    return Algebra::create_sparse(dim, std::move(table), std::move(labels));
}

DerivationPtr derivation_from_json(const json &doc, const AlgebraPtr &algebra) {
    if (!doc.contains("derivation"))
        throw ParseError("instance needs a \"derivation\"");
    const json &der = doc.at("derivation");
    const std::size_t dim = algebra->dim();

    auto matrix_from_rows = [&](const json &rows) {
        if (!rows.is_array() || rows.size() != dim)
            throw ParseError("derivation matrix must have " +
                             std::to_string(dim) + " rows");
        QMat matrix;
        for (const auto &row : rows)
            matrix.push_back(coords_from_json(row, dim, "derivation row"));
        return matrix;
    };

    if (der.is_array())
        return make_derivation(algebra, matrix_from_rows(der));
    if (der.is_object()) {
        if (der.contains("matrix"))
            return make_derivation(algebra,
                                   matrix_from_rows(der.at("matrix")));
        if (der.contains("inner")) {
            const json &m = der.at("inner");
            if (m.is_string()) {
                const auto idx = algebra->label_index(m.get<std::string>());
                if (!idx)
                    throw ParseError("unknown basis label \"" +
                                     m.get<std::string>() +
                                     "\" in inner derivation");
                return inner_derivation(algebra->basis(*idx));
            }
            return inner_derivation(
                algebra->element(coords_from_json(m, dim, "inner element")));
        }
    }
    throw ParseError("\"derivation\" must be matrix rows, {\"matrix\": rows} "
                     "or {\"inner\": element}");
}

json echo_json(const InstanceSpec &spec) {
    json out = json::object();
    out["basis"] = spec.algebra->labels();
    json products = json::array();
    const std::size_t dim = spec.algebra->dim();
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const auto &row = spec.algebra->basis_product(i, j);
            if (row.empty())
                continue;
            json coords = json::array();
            QVec dense(dim, Rational(0));
            for (const auto &[l, c] : row)
                dense[l] = c;
            for (const auto &c : dense)
                coords.push_back(c.str());
            products.push_back(json::array({i, j, coords}));
        }
    out["products"] = products;
    json matrix = json::array();
    for (const auto &row : spec.derivation->matrix()) {
        json r = json::array();
        for (const auto &c : row)
            r.push_back(c.str());
        matrix.push_back(r);
    }
    out["derivation"] = json::object({{"matrix", matrix}});
    json a = json::array();
    for (const auto &c : spec.element_a.coords())
        a.push_back(c.str());
    out["a"] = a;
    out["bounds"] = json::object({{"nilpotency", spec.bounds.nilpotency},
                                  {"power", spec.bounds.power}});
    return out;
}

} // namespace

InstanceSpec parse_instance(const json &doc) {
    if (!doc.is_object())
        throw ParseError("instance document must be a JSON object");
    AlgebraPtr algebra = algebra_from_json(doc);
    DerivationPtr derivation = derivation_from_json(doc, algebra);
    if (!doc.contains("a"))
        throw ParseError("instance needs the element \"a\"");
    AlgebraElement a = algebra->element(
        coords_from_json(doc.at("a"), algebra->dim(), "\"a\""));
    Bounds bounds;
    if (doc.contains("bounds")) {
        const json &b = doc.at("bounds");
        bounds.nilpotency = b.value("nilpotency", bounds.nilpotency);
        bounds.power = b.value("power", bounds.power);
        if (bounds.nilpotency == 0 || bounds.power == 0)
            throw ParseError("bounds must be positive");
    }
    InstanceSpec spec{std::move(algebra), std::move(derivation), std::move(a),
                      bounds, json::object()};
    spec.echo = echo_json(spec);
    return spec;
}

InstanceSpec load_instance(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open instance file: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError("JSON syntax error in " + path + " at byte " +
                         std::to_string(e.byte) + ": " + e.what());
    }
    return parse_instance(doc);
}

nlohmann::ordered_json generate_instance_json(const std::string &kind,
                                              unsigned generators,
                                              unsigned truncation_class) {
    json out = json::object();
    if (kind == "heisenberg") {
        out["basis"] = {"u", "v", "w"};
        out["products"] =
            json::array({json::array({0, 1, json::array({"0", "0", "1"})})});
        out["derivation"] = json::object({{"inner", "u"}});
        out["a"] = {"1", "1", "0"};
    } else if (kind == "free-nilpotent") {
        const AlgebraPtr algebra =
            free_nilpotent_algebra(generators, truncation_class);
        const std::size_t dim = algebra->dim();
        out["basis"] = algebra->labels();
        json products = json::array();
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                const auto &row = algebra->basis_product(i, j);
                if (row.empty())
                    continue;
                QVec dense(dim, Rational(0));
                for (const auto &[l, c] : row)
                    dense[l] = c;
                json coords = json::array();
                for (const auto &c : dense)
                    coords.push_back(c.str());
                products.push_back(json::array({i, j, coords}));
            }
        out["products"] = products;
        out["derivation"] =
            json::object({{"inner", algebra->labels().front()}});
        json a = json::array();
        for (std::size_t i = 0; i < dim; ++i)
            a.push_back(i == (generators >= 2 ? 1u : 0u) ? "1" : "0");
        out["a"] = a;
    } else {
        throw ParseError("unknown generator kind \"" + kind +
                         "\"; expected heisenberg or free-nilpotent");
    }
    out["bounds"] = json::object({{"nilpotency", 64}, {"power", 32}});
    return out;
}

} // namespace orenil
