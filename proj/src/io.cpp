#include "homnov/io.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

#include "json.hpp"

#include "homnov/errors.hpp"

namespace homnov {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw InputError(path + ": " + what);
}

void require_keys(const json& obj, const std::string& path,
                  std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed)
            if (item.key() == key) known = true;
        if (!known)
            fail(path.empty() ? item.key() : path + "." + item.key(),
                 "unknown field");
    }
}

const json& require_field(const json& obj, const char* key,
                          const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end())
        fail(path.empty() ? key : path + "." + key, "missing required field");
    return *it;
}

std::size_t read_index(const json& v, const std::string& path) {
    if (!v.is_number_unsigned())
        fail(path, "must be a non-negative integer");
    return v.get<std::size_t>();
}

Rat read_rational(const json& v, const std::string& path) {
    if (v.is_number_unsigned() || v.is_number_integer())
        return Rat(v.get<long long>());
    if (v.is_string()) {
        if (auto r = parse_rational(v.get<std::string>())) return *r;
        fail(path, "'" + v.get<std::string>() +
                       "' is not a rational literal \"p\" or \"p/q\"");
    }
    fail(path, "must be a rational literal string or a JSON integer "
               "(floating-point values are not accepted)");
}

Matrix read_matrix(const json& v, std::size_t dim, const std::string& path) {
    if (!v.is_array() || v.size() != dim)
        fail(path, "must be a " + std::to_string(dim) + " x " +
                       std::to_string(dim) + " matrix (array of rows)");
    Matrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const json& row = v[r];
        std::string row_path = path + "[" + std::to_string(r) + "]";
        if (!row.is_array() || row.size() != dim)
            fail(row_path, "must be a row of " + std::to_string(dim) +
                               " rational literals");
        for (std::size_t c = 0; c < dim; ++c)
            m.at(r, c) = read_rational(
                row[c], row_path + "[" + std::to_string(c) + "]");
    }
    return m;
}

// Sparse entry list shared by the product tensor and deformation terms.
// Ranges are checked against dim when it is known (nullopt defers).
std::vector<TensorEntry> read_entries(const json& v, const std::string& path,
                                      std::optional<std::size_t> dim) {
    if (!v.is_array())
        fail(path, "must be an array of entries {i, j, k, c}");
    std::vector<TensorEntry> entries;
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (std::size_t t = 0; t < v.size(); ++t) {
        std::string entry_path = path + "[" + std::to_string(t) + "]";
        const json& e = v[t];
        if (!e.is_object())
            fail(entry_path, "must be an object {i, j, k, c}");
        require_keys(e, entry_path, {"i", "j", "k", "c"});
        TensorEntry entry;
        entry.i = read_index(require_field(e, "i", entry_path),
                             entry_path + ".i");
        entry.j = read_index(require_field(e, "j", entry_path),
                             entry_path + ".j");
        entry.k = read_index(require_field(e, "k", entry_path),
                             entry_path + ".k");
        entry.c = read_rational(require_field(e, "c", entry_path),
                                entry_path + ".c");
        if (dim) {
            if (entry.i >= *dim) fail(entry_path + ".i", "index out of range");
            if (entry.j >= *dim) fail(entry_path + ".j", "index out of range");
            if (entry.k >= *dim) fail(entry_path + ".k", "index out of range");
        }
        if (!seen.insert({entry.i, entry.j, entry.k}).second)
            fail(entry_path, "duplicate entry for indices (" +
                                 std::to_string(entry.i) + ", " +
                                 std::to_string(entry.j) + ", " +
                                 std::to_string(entry.k) + ")");
        entries.push_back(std::move(entry));
    }
    return entries;
}

json parse_json(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("document is not valid JSON: ") +
                         e.what());
    }
    if (!root.is_object())
        throw InputError("top-level value must be an object");
    return root;
}

void sort_entries(std::vector<TensorEntry>& entries) {
    std::sort(entries.begin(), entries.end(),
              [](const TensorEntry& a, const TensorEntry& b) {
                  return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
              });
}

json entries_json(std::vector<TensorEntry> entries) {
    sort_entries(entries);
    json list = json::array();
    for (const TensorEntry& e : entries) {
        if (e.c == 0) continue;
        list.push_back({{"i", e.i},
                        {"j", e.j},
                        {"k", e.k},
                        {"c", format_rational(e.c)}});
    }
    return list;
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(format_rational(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

AlgebraDocument parse_algebra_document(const std::string& text) {
    json root = parse_json(text);
    require_keys(root, "",
                 {"dim", "parity", "mul", "alpha", "form", "maps", "weight",
                  "xi"});

    std::size_t dim = read_index(require_field(root, "dim", ""), "dim");

    const json& parity = require_field(root, "parity", "");
    if (!parity.is_array() || parity.size() != dim)
        fail("parity", "must be an array of " + std::to_string(dim) +
                           " parities (0 or 1)");
    std::vector<Parity> parities;
    for (std::size_t t = 0; t < parity.size(); ++t) {
        std::string p = "parity[" + std::to_string(t) + "]";
        std::size_t value = read_index(parity[t], p);
        if (value > 1) fail(p, "parity must be 0 or 1");
        parities.push_back(static_cast<Parity>(value));
    }
    GradedSpace space(parities); // rejects non-canonical order with a hint

    std::vector<TensorEntry> entries =
        read_entries(require_field(root, "mul", ""), "mul", dim);
    MulTensor mul(dim, std::vector<Vec>(dim, zero_vec(dim)));
    for (const TensorEntry& e : entries) mul[e.i][e.j][e.k] = e.c;

    Matrix alpha = read_matrix(require_field(root, "alpha", ""), dim, "alpha");

    AlgebraDocument doc;
    doc.algebra = make_algebra(space, std::move(mul), std::move(alpha));

    if (auto it = root.find("form"); it != root.end()) {
        Matrix g = read_matrix(*it, dim, "form");
        doc.form.emplace(space, std::move(g));
    }
    if (auto it = root.find("maps"); it != root.end()) {
        if (!it->is_object())
            fail("maps", "must be an object of named matrices");
        for (const auto& item : it->items()) {
            std::string path = "maps." + item.key();
            Matrix m = read_matrix(item.value(), dim, path);
            try {
                doc.maps.emplace(item.key(), EvenMap(space, std::move(m)));
            } catch (const InputError& e) {
                fail(path, e.what());
            }
        }
    }
    if (auto it = root.find("weight"); it != root.end())
        doc.weight = read_rational(*it, "weight");
    if (auto it = root.find("xi"); it != root.end())
        doc.xi = read_rational(*it, "xi");
    return doc;
}

DeformationDocument parse_deformation_document(const std::string& text) {
    json root = parse_json(text);
    require_keys(root, "", {"order", "terms"});

    DeformationDocument doc;
    doc.order = read_index(require_field(root, "order", ""), "order");
    if (doc.order == 0) fail("order", "must be at least 1");

    const json& terms = require_field(root, "terms", "");
    if (!terms.is_array() || terms.size() != doc.order)
        fail("terms", "must list exactly " + std::to_string(doc.order) +
                          " sparse tensors, one per order");
    for (std::size_t t = 0; t < terms.size(); ++t)
        doc.terms.push_back(read_entries(
            terms[t], "terms[" + std::to_string(t) + "]", std::nullopt));
    return doc;
}

std::string emit_algebra_document(const AlgebraDocument& doc) {
    const SuperAlgebra& a = *doc.algebra;
    std::size_t dim = a.dim();

    json j;
    j["dim"] = dim;
    json parities = json::array();
    for (std::size_t i = 0; i < dim; ++i) parities.push_back(a.parity(i));
    j["parity"] = std::move(parities);

    std::vector<TensorEntry> entries;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t p = 0; p < dim; ++p)
            for (std::size_t k = 0; k < dim; ++k)
                if (a.product_basis(i, p)[k] != 0)
                    entries.push_back({i, p, k, a.product_basis(i, p)[k]});
    j["mul"] = entries_json(std::move(entries));
    j["alpha"] = matrix_json(a.alpha());

    if (doc.form) j["form"] = matrix_json(doc.form->gram);
    if (!doc.maps.empty()) {
        json maps = json::object();
        for (const auto& [name, m] : doc.maps)
            maps[name] = matrix_json(m.matrix);
        j["maps"] = std::move(maps);
    }
    if (doc.weight) j["weight"] = format_rational(*doc.weight);
    if (doc.xi) j["xi"] = format_rational(*doc.xi);
    return j.dump(2) + "\n";
}

std::string emit_deformation_document(const DeformationDocument& doc) {
    json j;
    j["order"] = doc.order;
    json terms = json::array();
    for (const auto& term : doc.terms) terms.push_back(entries_json(term));
    j["terms"] = std::move(terms);
    return j.dump(2) + "\n";
}

TruncatedDeformation bind_deformation(const DeformationDocument& doc,
                                      const AlgebraPtr& algebra) {
    if (!algebra) throw InputError("binding requires an algebra");
    if (doc.order != doc.terms.size() || doc.order == 0)
        throw InputError("order: must equal the number of listed terms and "
                         "be at least 1");
    std::size_t dim = algebra->dim();
    std::vector<Cochain> terms;
    for (std::size_t t = 0; t < doc.terms.size(); ++t) {
        std::vector<Vec> table(dim * dim, zero_vec(dim));
        for (std::size_t u = 0; u < doc.terms[t].size(); ++u) {
            const TensorEntry& e = doc.terms[t][u];
            std::string path = "terms[" + std::to_string(t) + "][" +
                               std::to_string(u) + "]";
            if (e.i >= dim) fail(path + ".i", "index out of range");
            if (e.j >= dim) fail(path + ".j", "index out of range");
            if (e.k >= dim) fail(path + ".k", "index out of range");
            table[e.i * dim + e.j][e.k] = e.c;
        }
        terms.emplace_back(algebra, 2, 0, std::move(table));
    }
    return TruncatedDeformation(algebra, std::move(terms));
}

DeformationDocument deformation_document(const TruncatedDeformation& d) {
    std::size_t dim = d.base()->dim();
    DeformationDocument doc;
    doc.order = d.order();
    for (std::size_t n = 1; n <= d.order(); ++n) {
        std::vector<TensorEntry> entries;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                const Vec& value = d.term(n).value_basis(i, j);
                for (std::size_t k = 0; k < dim; ++k)
                    if (value[k] != 0) entries.push_back({i, j, k, value[k]});
            }
        doc.terms.push_back(std::move(entries));
    }
    return doc;
}

} // namespace homnov
