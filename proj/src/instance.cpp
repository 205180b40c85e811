#include "summand/instance.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "summand/errors.hpp"

namespace summand {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

const json& get_field(const json& j, const std::string& where,
                      const std::string& key) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, "missing key \"" + key + "\"");
    return *it;
}

std::int64_t get_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<std::int64_t>();
}

// row-major matrix from nested arrays, entries reduced mod p
Matrix parse_matrix(const json& j, const std::string& where, std::size_t rows,
                    std::size_t cols, Fp fp) {
    if (!j.is_array() || j.size() != rows)
        fail(where, "expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols, fp);
    for (std::size_t r = 0; r < rows; ++r) {
        const json& row = j[r];
        std::string rwhere = where + "[" + std::to_string(r) + "]";
        if (!row.is_array() || row.size() != cols)
            fail(rwhere, "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = fp.reduce(
                get_int(row[c], rwhere + "[" + std::to_string(c) + "]"));
    }
    return m;
}

std::shared_ptr<const Algebra> parse_structure_constants(
    const json& j, Fp fp, std::vector<std::string>& labels) {
    labels.clear();
    std::int64_t dim_raw = get_int(get_field(j, "/algebra", "dim"),
                                   "/algebra/dim");
    if (dim_raw < 1 || dim_raw > 512) fail("/algebra/dim", "out of range");
    std::size_t dim = static_cast<std::size_t>(dim_raw);

    const json& table = get_field(j, "/algebra", "table");
    if (!table.is_array() || table.size() != dim)
        fail("/algebra/table", "expected " + std::to_string(dim) + " layers");
    std::vector<std::uint32_t> c(dim * dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        std::string iw = "/algebra/table[" + std::to_string(i) + "]";
        Matrix layer = parse_matrix(table[i], iw, dim, dim, fp);
        for (std::size_t jj = 0; jj < dim; ++jj)
            for (std::size_t k = 0; k < dim; ++k)
                c[(i * dim + jj) * dim + k] = layer(jj, k);
    }

    const json& one = get_field(j, "/algebra", "one");
    if (!one.is_array() || one.size() != dim)
        fail("/algebra/one", "expected " + std::to_string(dim) + " entries");
    std::vector<std::uint32_t> unit(dim);
    for (std::size_t i = 0; i < dim; ++i)
        unit[i] = fp.reduce(
            get_int(one[i], "/algebra/one[" + std::to_string(i) + "]"));

    try {
        return std::make_shared<Algebra>(fp, dim, std::move(c),
                                         std::move(unit));
    } catch (const ValidationError& e) {
        fail("/algebra", e.what());
    }
}

std::shared_ptr<const Algebra> parse_quiver(const json& j, Fp fp,
                                            std::vector<std::string>& labels) {
    QuiverPresentation q;
    const json& vertices = get_field(j, "/algebra", "vertices");
    if (!vertices.is_array() || vertices.empty())
        fail("/algebra/vertices", "expected a nonempty array");
    for (const auto& v : vertices) {
        if (!v.is_string()) fail("/algebra/vertices", "expected strings");
        q.vertices.push_back(v.get<std::string>());
    }
    const json& arrows = get_field(j, "/algebra", "arrows");
    if (!arrows.is_array()) fail("/algebra/arrows", "expected an array");
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        std::string aw = "/algebra/arrows[" + std::to_string(i) + "]";
        const json& a = arrows[i];
        QuiverArrow arrow;
        arrow.source = get_field(a, aw, "from").get<std::string>();
        arrow.target = get_field(a, aw, "to").get<std::string>();
        arrow.label = get_field(a, aw, "label").get<std::string>();
        q.arrows.push_back(std::move(arrow));
    }
    if (j.contains("relations")) {
        const json& rels = j["relations"];
        if (!rels.is_array()) fail("/algebra/relations", "expected an array");
        for (std::size_t i = 0; i < rels.size(); ++i) {
            const json& r = rels[i];
            std::string rw = "/algebra/relations[" + std::to_string(i) + "]";
            if (!r.is_array()) fail(rw, "expected an array of arrow labels");
            std::vector<std::string> path;
            for (const auto& lbl : r) {
                if (!lbl.is_string()) fail(rw, "expected arrow labels");
                path.push_back(lbl.get<std::string>());
            }
            q.relations.push_back(std::move(path));
        }
    }
    try {
        QuiverAlgebra qa = algebra_from_quiver(q, fp);
        labels = std::move(qa.basis_labels);
        return std::make_shared<Algebra>(std::move(qa.algebra));
    } catch (const ValidationError& e) {
        fail("/algebra", e.what());
    }
}

}  // namespace

const Module* Instance::find_module(const std::string& name) const {
    for (const auto& [n, m] : modules)
        if (n == name) return &m;
    return nullptr;
}

Instance parse_instance_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }

    std::int64_t p_raw =
        get_int(get_field(get_field(j, "/", "field"), "/field", "p"),
                "/field/p");
    if (p_raw < 2 || p_raw > 0x7fffffff) fail("/field/p", "out of range");
    Fp fp = [&] {
        try {
            return Fp(static_cast<std::uint32_t>(p_raw));
        } catch (const ValidationError& e) {
            fail("/field/p", e.what());
        }
    }();

    const json& alg = get_field(j, "/", "algebra");
    std::string type =
        get_field(alg, "/algebra", "type").get<std::string>();
    std::vector<std::string> labels;
    std::shared_ptr<const Algebra> algebra;
    if (type == "structure_constants")
        algebra = parse_structure_constants(alg, fp, labels);
    else if (type == "quiver")
        algebra = parse_quiver(alg, fp, labels);
    else
        fail("/algebra/type",
             "unknown type \"" + type +
                 "\" (expected structure_constants or quiver)");

    Instance inst{fp, algebra, std::move(labels), {}};
    if (j.contains("modules")) {
        const json& mods = j["modules"];
        if (!mods.is_object()) fail("/modules", "expected an object");
        for (auto it = mods.begin(); it != mods.end(); ++it) {
            std::string mw = "/modules/" + it.key();
            const json& mj = it.value();
            std::int64_t dim_raw =
                get_int(get_field(mj, mw, "dim"), mw + "/dim");
            if (dim_raw < 0 || dim_raw > 4096) fail(mw + "/dim", "out of range");
            std::size_t dim = static_cast<std::size_t>(dim_raw);
            const json& action = get_field(mj, mw, "action");
            if (!action.is_array() || action.size() != algebra->dim())
                fail(mw + "/action", "expected one matrix per basis element (" +
                                         std::to_string(algebra->dim()) + ")");
            std::vector<Matrix> mats;
            for (std::size_t b = 0; b < algebra->dim(); ++b)
                mats.push_back(parse_matrix(
                    action[b], mw + "/action[" + std::to_string(b) + "]", dim,
                    dim, fp));
            try {
                inst.modules.emplace_back(it.key(),
                                          Module(algebra, std::move(mats)));
            } catch (const ValidationError& e) {
                fail(mw, e.what());
            }
        }
    }
    // nlohmann::json iterates objects in sorted key order already; keep the
    // invariant explicit
    std::sort(inst.modules.begin(), inst.modules.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return inst;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_instance_text(ss.str());
}

}  // namespace summand
