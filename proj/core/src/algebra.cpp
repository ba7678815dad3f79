#include "chromalie/algebra.hpp"

#include "chromalie/errors.hpp"

#include <algorithm>
#include <sstream>

namespace chromalie {

namespace {
const Element kZeroElement{};
}

int GradedBasis::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (entries[static_cast<std::size_t>(i)].name == name) return i;
    return -1;
}

Element element_unit(int i) { return Element{{{i, Rational(1)}}}; }

Element element_term(int i, Rational c) {
    Element e;
    if (!is_zero(c)) e.coeffs.emplace(i, std::move(c));
    return e;
}

Element add(const Element& a, const Element& b) {
    Element r = a;
    for (const auto& [i, c] : b.coeffs) {
        auto [it, inserted] = r.coeffs.try_emplace(i, c);
        if (!inserted) {
            it->second += c;
            if (is_zero(it->second)) r.coeffs.erase(it);
        }
    }
    return r;
}

Element sub(const Element& a, const Element& b) { return add(a, negate(b)); }

Element negate(Element a) {
    for (auto& [i, c] : a.coeffs) c = -c;
    return a;
}

Element scale(const Rational& c, const Element& a) {
    if (is_zero(c)) return {};
    Element r = a;
    for (auto& [i, v] : r.coeffs) v *= c;
    return r;
}

std::optional<GroupElement> homogeneous_degree(const GradedBasis& basis, const Element& x) {
    std::optional<GroupElement> deg;
    for (const auto& [i, c] : x.coeffs) {
        const GroupElement& d = basis.degree(i);
        if (!deg)
            deg = d;
        else if (!(*deg == d))
            return std::nullopt;
    }
    return deg;
}

bool is_homogeneous(const GradedBasis& basis, const Element& x) {
    return x.is_zero() || homogeneous_degree(basis, x).has_value();
}

std::string element_to_string(const GradedBasis& basis, const Element& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : x.coeffs) {
        Rational mag = c;
        const bool neg = sgn(c) < 0;
        if (neg) mag = -mag;
        if (first) {
            if (neg) os << '-';
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (mag != 1) os << to_string(mag) << '*';
        os << basis.name(i);
    }
    return os.str();
}

const Element& StructureConstants::at(int i, int j) const {
    auto it = products.find({i, j});
    return it == products.end() ? kZeroElement : it->second;
}

void StructureConstants::set(int i, int j, Element value) {
    if (value.is_zero())
        products.erase({i, j});
    else
        products[{i, j}] = std::move(value);
}

const Element& EvenMap::column(int i) const {
    auto it = columns.find(i);
    return it == columns.end() ? kZeroElement : it->second;
}

void EvenMap::set_column(int i, Element value) {
    if (value.is_zero())
        columns.erase(i);
    else
        columns[i] = std::move(value);
}

EvenMap identity_map(const GradedBasis& basis) {
    EvenMap f;
    for (int i = 0; i < basis.size(); ++i) f.columns.emplace(i, element_unit(i));
    return f;
}

Element apply_map(const EvenMap& f, const Element& x) {
    Element r;
    for (const auto& [i, c] : x.coeffs) r = add(r, scale(c, f.column(i)));
    return r;
}

EvenMap compose_maps(const EvenMap& f, const EvenMap& g) {
    EvenMap r;
    for (const auto& [i, col] : g.columns) r.set_column(i, apply_map(f, col));
    return r;
}

std::string to_string(Flavor f) {
    switch (f) {
    case Flavor::raw: return "raw";
    case Flavor::lie_color: return "lie-color";
    case Flavor::hom_lie_color: return "hom-lie-color";
    case Flavor::hom_color: return "hom-color";
    }
    return "raw";
}

std::optional<Flavor> flavor_from_string(const std::string& s) {
    if (s == "raw") return Flavor::raw;
    if (s == "lie-color") return Flavor::lie_color;
    if (s == "hom-lie-color") return Flavor::hom_lie_color;
    if (s == "hom-color") return Flavor::hom_color;
    return std::nullopt;
}

EvenMap GradedAlgebra::effective_twist() const {
    return twist ? *twist : identity_map(basis);
}

void ViolationReport::sort_entries() {
    std::sort(entries.begin(), entries.end(),
              [](const Violation& a, const Violation& b) { return a.key() < b.key(); });
}

void ViolationReport::add(std::string identity, std::vector<int> tuple, Element residual) {
    entries.push_back({std::move(identity), std::move(tuple), std::move(residual)});
}

std::string violation_to_string(const GradedBasis& basis, const Violation& v) {
    std::ostringstream os;
    os << v.identity << " @ (";
    for (std::size_t k = 0; k < v.tuple.size(); ++k) {
        if (k) os << ',';
        os << basis.name(v.tuple[k]);
    }
    os << ") residual " << element_to_string(basis, v.residual);
    return os.str();
}

Element mult_eval(const GradedAlgebra& A, const Element& x, const Element& y) {
    Element r;
    for (const auto& [i, ci] : x.coeffs)
        for (const auto& [j, cj] : y.coeffs) {
            const Element& p = mult_basis(A, i, j);
            if (!p.is_zero()) r = add(r, scale(ci * cj, p));
        }
    return r;
}

const Element& mult_basis(const GradedAlgebra& A, int i, int j) { return A.mult.at(i, j); }

ViolationReport check_evenness(const GradedAlgebra& A) {
    ViolationReport report;
    for (const auto& [key, value] : A.mult.products) {
        const GroupElement target = group_add(A.spec, A.degree(key.first), A.degree(key.second));
        Element off;
        for (const auto& [k, c] : value.coeffs)
            if (!(A.degree(k) == target)) off.coeffs.emplace(k, c);
        if (!off.is_zero())
            report.add("evenness", {key.first, key.second}, std::move(off));
        ++report.tuples_checked;
    }
    report.sort_entries();
    return report;
}

ViolationReport is_even_map(const GradedBasis& domain, const GradedBasis& codomain,
                            const EvenMap& f) {
    ViolationReport report;
    for (const auto& [i, col] : f.columns) {
        const GroupElement& d = domain.degree(i);
        Element off;
        for (const auto& [k, c] : col.coeffs)
            if (!(codomain.degree(k) == d)) off.coeffs.emplace(k, c);
        if (!off.is_zero()) report.add("even-map", {i}, std::move(off));
        ++report.tuples_checked;
    }
    report.sort_entries();
    return report;
}

ViolationReport is_even_map(const GradedAlgebra& A, const EvenMap& f) {
    return is_even_map(A.basis, A.basis, f);
}

PairCheck is_endomorphism(const GradedAlgebra& A, const EvenMap& zeta) {
    const int n = A.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Element lhs = apply_map(zeta, mult_basis(A, i, j));
            Element rhs = mult_eval(A, zeta.column(i), zeta.column(j));
            if (!(lhs == rhs)) return {false, {i, j}, std::move(lhs), std::move(rhs)};
        }
    return {};
}

SkewCompletion skew_complete(const GradedAlgebra& A) {
    SkewCompletion out;
    out.table = A.mult;
    for (const auto& [key, value] : A.mult.products) {
        const auto [i, j] = key;
        if (i == j) continue;
        if (out.table.products.count({j, i})) continue;
        out.table.set(j, i, scale(-A.eps(j, i), value));
        ++out.filled;
    }
    // Diagonal defaults: [x,x] = 0 is forced by skew when eps(d,d) = 1 and by
    // the grading when the 2d component vanishes; flag the remaining case.
    for (int i = 0; i < A.dim(); ++i) {
        if (out.table.products.count({i, i})) continue;
        if (A.eps(i, i) == 1) continue;
        const GroupElement twice = group_add(A.spec, A.degree(i), A.degree(i));
        for (int k = 0; k < A.dim(); ++k)
            if (A.degree(k) == twice) {
                out.notes.push_back("diagonal [" + A.basis.name(i) + "," + A.basis.name(i) +
                                    "] defaulted to zero although eps(d,d) = -1 and the component " +
                                    to_string(twice) + " is nonzero");
                break;
            }
    }
    return out;
}

} // namespace chromalie
