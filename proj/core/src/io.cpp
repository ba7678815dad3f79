#include "chromalie/io.hpp"

#include "chromalie/errors.hpp"

#include <json.hpp>

#include <cctype>

namespace chromalie {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void syntax_error(const std::string& text, const nlohmann::json::exception& e,
                               std::size_t byte) {
    int line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    throw ParseError("syntax error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + e.what(),
                     line, column);
}

ordered_json parse_json(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        syntax_error(text, e, e.byte);
    }
}

const ordered_json& field(const ordered_json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing key '") + key + "'");
    return *it;
}

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

Rational rational_field(const ordered_json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": rationals must be strings");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

GroupSpec parse_group(const ordered_json& j) {
    if (!j.is_object()) throw ParseError("'group' must be an object");
    GroupSpec spec;
    const ordered_json& fr = field(j, "free_rank");
    if (!fr.is_number_integer() || fr.get<long long>() < 0)
        throw ParseError("'free_rank' must be a non-negative integer");
    spec.free_rank = fr.get<int>();
    const ordered_json& torsion = field(j, "torsion");
    if (!torsion.is_array()) throw ParseError("'torsion' must be an array");
    for (const auto& t : torsion) {
        if (!t.is_number_integer() || t.get<long long>() < 2)
            throw ParseError("torsion orders must be integers >= 2");
        spec.torsion_orders.push_back(t.get<long>());
    }
    return spec;
}

GroupElement parse_degree(const ordered_json& j, const GroupSpec& spec, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != spec.coords())
        throw ParseError(where + ": degree must be an array of " + std::to_string(spec.coords()) +
                         " integers");
    GroupElement g;
    for (const auto& c : j) {
        if (!c.is_number_integer()) throw ParseError(where + ": degree coordinates must be integers");
        g.coords.push_back(c.get<long long>());
    }
    if (!is_canonical(spec, g))
        throw ParseError(where + ": degree " + to_string(g) +
                         " is not canonical (torsion coordinates must lie in [0,n))");
    return g;
}

std::vector<std::vector<Rational>> parse_matrix(const ordered_json& j, int n,
                                                const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw ParseError(where + ": matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    std::vector<std::vector<Rational>> m;
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError(where + ": matrix must be " + std::to_string(n) + "x" +
                             std::to_string(n));
        std::vector<Rational> r;
        for (const auto& v : row) {
            Rational q = rational_field(v, where);
            if (is_zero(q)) throw ParseError(where + ": zero entry (values must lie in F*)");
            r.push_back(std::move(q));
        }
        m.push_back(std::move(r));
    }
    return m;
}

Element parse_element(const ordered_json& j, const GradedBasis& basis, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": expected an object of name -> coefficient");
    Element e;
    for (const auto& [name, value] : j.items()) {
        const int k = basis.index_of(name);
        if (k < 0) throw ParseError(where + ": unknown basis name '" + name + "'");
        Rational c = rational_field(value, where + "['" + name + "']");
        if (is_zero(c)) continue; // canonical form stores no zeros
        if (e.coeffs.count(k)) throw ParseError(where + ": duplicate basis name '" + name + "'");
        e.coeffs.emplace(k, std::move(c));
    }
    return e;
}

ordered_json element_to_json(const Element& e, const GradedBasis& basis) {
    ordered_json j = ordered_json::object();
    for (const auto& [k, c] : e.coeffs) j[basis.name(k)] = to_string(c);
    return j;
}

EvenMap parse_columns(const ordered_json& j, const GradedBasis& domain, const GradedBasis& codomain,
                      const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": expected an object of name -> column");
    EvenMap f;
    for (const auto& [name, value] : j.items()) {
        const int i = domain.index_of(name);
        if (i < 0) throw ParseError(where + ": unknown basis name '" + name + "'");
        f.set_column(i, parse_element(value, codomain, where + "['" + name + "']"));
    }
    return f;
}

ordered_json columns_to_json(const EvenMap& f, const GradedBasis& domain,
                             const GradedBasis& codomain) {
    ordered_json j = ordered_json::object();
    for (const auto& [i, col] : f.columns) j[domain.name(i)] = element_to_json(col, codomain);
    return j;
}

} // namespace

GradedAlgebra parse_algebra(const std::string& text) {
    const ordered_json j = parse_json(text);
    if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
    GradedAlgebra A;
    A.spec = parse_group(field(j, "group"));

    const ordered_json& eps = field(j, "epsilon");
    if (!eps.is_object()) throw ParseError("'epsilon' must be an object");
    auto eps_matrix = parse_matrix(field(eps, "matrix"), A.spec.coords(), "epsilon");
    A.epsilon = BiCharacter{A.spec, std::move(eps_matrix)};

    const ordered_json& basis = field(j, "basis");
    if (!basis.is_array()) throw ParseError("'basis' must be an array");
    for (const auto& entry : basis) {
        if (!entry.is_object()) throw ParseError("basis entries must be objects");
        const ordered_json& name = field(entry, "name");
        if (!name.is_string() || !is_identifier(name.get<std::string>()))
            throw ParseError("basis names must be identifiers");
        const std::string n = name.get<std::string>();
        if (A.basis.index_of(n) >= 0) throw ParseError("duplicate basis name '" + n + "'");
        A.basis.entries.push_back({n, parse_degree(field(entry, "degree"), A.spec, "basis '" + n + "'")});
    }

    const ordered_json& products = field(j, "products");
    if (!products.is_object()) throw ParseError("'products' must be an object");
    for (const auto& [key, value] : products.items()) {
        const auto comma = key.find(',');
        if (comma == std::string::npos)
            throw ParseError("product key '" + key + "' must look like 'name1,name2'");
        const int i = A.basis.index_of(key.substr(0, comma));
        const int jdx = A.basis.index_of(key.substr(comma + 1));
        if (i < 0 || jdx < 0) throw ParseError("product key '" + key + "' names unknown basis vectors");
        if (A.mult.products.count({i, jdx}))
            throw ParseError("duplicate product key '" + key + "'");
        A.mult.set(i, jdx, parse_element(value, A.basis, "products['" + key + "']"));
    }

    if (auto it = j.find("twist"); it != j.end())
        A.twist = parse_columns(*it, A.basis, A.basis, "twist");

    if (auto it = j.find("flavor"); it != j.end()) {
        if (!it->is_string()) throw ParseError("'flavor' must be a string");
        auto flavor = flavor_from_string(it->get<std::string>());
        if (!flavor) throw ParseError("unknown flavor '" + it->get<std::string>() + "'");
        A.flavor = *flavor;
    }
    return A;
}

std::string serialize_algebra(const GradedAlgebra& A) {
    ordered_json j;
    j["group"] = {{"free_rank", A.spec.free_rank}, {"torsion", A.spec.torsion_orders}};
    ordered_json matrix = ordered_json::array();
    for (const auto& row : A.epsilon.matrix) {
        ordered_json r = ordered_json::array();
        for (const auto& v : row) r.push_back(to_string(v));
        matrix.push_back(std::move(r));
    }
    j["epsilon"] = {{"matrix", std::move(matrix)}};
    ordered_json basis = ordered_json::array();
    for (const auto& entry : A.basis.entries)
        basis.push_back({{"name", entry.name}, {"degree", entry.degree.coords}});
    j["basis"] = std::move(basis);
    ordered_json products = ordered_json::object();
    for (const auto& [key, value] : A.mult.products)
        products[A.basis.name(key.first) + "," + A.basis.name(key.second)] =
            element_to_json(value, A.basis);
    j["products"] = std::move(products);
    if (A.twist) j["twist"] = columns_to_json(*A.twist, A.basis, A.basis);
    j["flavor"] = to_string(A.flavor);
    return j.dump(2) + "\n";
}

SigmaForm parse_sigma(const std::string& text, const GroupSpec& spec) {
    const ordered_json j = parse_json(text);
    if (!j.is_object()) throw ParseError("sigma file must be a JSON object");
    const ordered_json& kind = field(j, "kind");
    if (!kind.is_string()) throw ParseError("'kind' must be a string");
    const std::string k = kind.get<std::string>();
    try {
        if (k == "bimultiplicative")
            return SigmaForm::bimultiplicative(spec,
                                               parse_matrix(field(j, "matrix"), spec.coords(), "sigma"));
        if (k == "coboundary") {
            const ordered_json& omega = field(j, "omega");
            if (!omega.is_array()) throw ParseError("'omega' must be an array of entries");
            std::map<GroupElement, Rational> table;
            for (const auto& entry : omega) {
                GroupElement g = parse_degree(field(entry, "element"), spec, "omega");
                Rational v = rational_field(field(entry, "value"), "omega value");
                if (table.count(g)) throw ParseError("duplicate omega element " + to_string(g));
                table.emplace(std::move(g), std::move(v));
            }
            return SigmaForm::coboundary(spec, std::move(table));
        }
        if (k == "explicit") {
            const ordered_json& tbl = field(j, "table");
            if (!tbl.is_array()) throw ParseError("'table' must be an array of entries");
            std::map<std::pair<GroupElement, GroupElement>, Rational> table;
            for (const auto& entry : tbl) {
                GroupElement a = parse_degree(field(entry, "alpha"), spec, "sigma table");
                GroupElement b = parse_degree(field(entry, "beta"), spec, "sigma table");
                Rational v = rational_field(field(entry, "value"), "sigma value");
                if (table.count({a, b}))
                    throw ParseError("duplicate sigma key (" + to_string(a) + "," + to_string(b) + ")");
                table.emplace(std::make_pair(std::move(a), std::move(b)), std::move(v));
            }
            return SigmaForm::explicit_table(spec, std::move(table));
        }
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what()); // factory rejections are malformed input
    }
    throw ParseError("unknown sigma kind '" + k + "'");
}

std::string serialize_sigma(const SigmaForm& sigma) {
    ordered_json j;
    switch (sigma.kind) {
    case SigmaKind::bimultiplicative: {
        j["kind"] = "bimultiplicative";
        ordered_json matrix = ordered_json::array();
        for (const auto& row : sigma.matrix) {
            ordered_json r = ordered_json::array();
            for (const auto& v : row) r.push_back(to_string(v));
            matrix.push_back(std::move(r));
        }
        j["matrix"] = std::move(matrix);
        break;
    }
    case SigmaKind::coboundary: {
        j["kind"] = "coboundary";
        ordered_json omega = ordered_json::array();
        for (const auto& [g, v] : sigma.omega)
            omega.push_back({{"element", g.coords}, {"value", to_string(v)}});
        j["omega"] = std::move(omega);
        break;
    }
    case SigmaKind::explicit_table: {
        j["kind"] = "explicit";
        ordered_json table = ordered_json::array();
        for (const auto& [key, v] : sigma.table)
            table.push_back({{"alpha", key.first.coords},
                             {"beta", key.second.coords},
                             {"value", to_string(v)}});
        j["table"] = std::move(table);
        break;
    }
    }
    return j.dump(2) + "\n";
}

EvenMap parse_map(const std::string& text, const GradedBasis& domain, const GradedBasis& codomain) {
    const ordered_json j = parse_json(text);
    if (!j.is_object()) throw ParseError("map file must be a JSON object");
    return parse_columns(field(j, "columns"), domain, codomain, "columns");
}

std::string serialize_map(const EvenMap& f, const GradedBasis& domain, const GradedBasis& codomain) {
    ordered_json j;
    j["columns"] = columns_to_json(f, domain, codomain);
    return j.dump(2) + "\n";
}

} // namespace chromalie
