#include "chromalie/grading.hpp"

#include "chromalie/errors.hpp"

#include <algorithm>
#include <sstream>

namespace chromalie {

void GroupSpec::validate() const {
    if (free_rank < 0) throw Error("free_rank must be non-negative");
    for (long n : torsion_orders)
        if (n < 2) throw Error("torsion orders must be >= 2");
}

GroupElement group_zero(const GroupSpec& spec) {
    return GroupElement{std::vector<long long>(static_cast<std::size_t>(spec.coords()), 0)};
}

static void require_dim(const GroupSpec& spec, const GroupElement& g, const char* what) {
    if (static_cast<int>(g.coords.size()) != spec.coords())
        throw Error(std::string(what) + ": coordinate count " +
                    std::to_string(g.coords.size()) + " does not match group spec (" +
                    std::to_string(spec.coords()) + ")");
}

GroupElement canonical(const GroupSpec& spec, GroupElement g) {
    require_dim(spec, g, "canonical");
    for (std::size_t t = 0; t < spec.torsion_orders.size(); ++t) {
        const long long n = spec.torsion_orders[t];
        long long& c = g.coords[static_cast<std::size_t>(spec.free_rank) + t];
        c %= n;
        if (c < 0) c += n;
    }
    return g;
}

bool is_canonical(const GroupSpec& spec, const GroupElement& g) {
    if (static_cast<int>(g.coords.size()) != spec.coords()) return false;
    for (std::size_t t = 0; t < spec.torsion_orders.size(); ++t) {
        const long long c = g.coords[static_cast<std::size_t>(spec.free_rank) + t];
        if (c < 0 || c >= spec.torsion_orders[t]) return false;
    }
    return true;
}

GroupElement group_add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
    require_dim(spec, a, "group_add");
    require_dim(spec, b, "group_add");
    GroupElement r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return canonical(spec, std::move(r));
}

std::vector<GroupElement> enumerate_group(const GroupSpec& spec) {
    if (!spec.is_finite()) throw Error("cannot enumerate a group of positive free rank");
    std::vector<GroupElement> out;
    GroupElement cur = group_zero(spec);
    const std::size_t k = spec.torsion_orders.size();
    while (true) {
        out.push_back(cur);
        // Mixed-radix increment, last coordinate fastest: yields lex order.
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (++cur.coords[i] < spec.torsion_orders[i]) break;
            cur.coords[i] = 0;
            if (i == 0) return out;
        }
        if (k == 0) return out;
    }
}

std::string to_string(const GroupElement& g) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < g.coords.size(); ++i) {
        if (i) os << ',';
        os << g.coords[i];
    }
    os << ')';
    return os.str();
}

static void require_square(const GroupSpec& spec, const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = static_cast<std::size_t>(spec.coords());
    if (m.size() != n) throw Error("bi-character matrix must be " + std::to_string(n) + "x" +
                                   std::to_string(n));
    for (const auto& row : m) {
        if (row.size() != n) throw Error("bi-character matrix must be square");
        for (const auto& v : row)
            if (is_zero(v)) throw Error("bi-character matrix entries must be nonzero");
    }
}

ValidationReport validate_bicharacter(const GroupSpec& spec,
                                      const std::vector<std::vector<Rational>>& matrix) {
    spec.validate();
    require_square(spec, matrix);
    ValidationReport report;
    const int n = spec.coords();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (matrix[i][j] * matrix[j][i] != 1)
                report.issues.push_back("reciprocity: b[" + std::to_string(i) + "][" +
                                        std::to_string(j) + "]*b[" + std::to_string(j) + "][" +
                                        std::to_string(i) + "] != 1");
    for (int i = 0; i < n; ++i)
        if (matrix[i][i] != 1 && matrix[i][i] != -1)
            report.issues.push_back("diagonal: b[" + std::to_string(i) + "][" + std::to_string(i) +
                                    "] = " + to_string(matrix[i][i]) + " not in {1,-1}");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const bool j_torsion = j >= spec.free_rank;
            if (j_torsion) {
                const long nj = spec.torsion_orders[static_cast<std::size_t>(j - spec.free_rank)];
                if (pow_rational(matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], nj) != 1)
                    report.issues.push_back("torsion: b[" + std::to_string(i) + "][" +
                                            std::to_string(j) + "]^" + std::to_string(nj) + " != 1");
            }
            const bool i_torsion = i >= spec.free_rank;
            if (i_torsion) {
                const long ni = spec.torsion_orders[static_cast<std::size_t>(i - spec.free_rank)];
                if (pow_rational(matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], ni) != 1)
                    report.issues.push_back("torsion: b[" + std::to_string(i) + "][" +
                                            std::to_string(j) + "]^" + std::to_string(ni) +
                                            " != 1 (row torsion)");
            }
        }
    return report;
}

BiCharacter BiCharacter::checked(GroupSpec spec, std::vector<std::vector<Rational>> matrix) {
    auto report = validate_bicharacter(spec, matrix);
    if (!report.ok()) throw Error("invalid bi-character: " + report.issues.front());
    return BiCharacter{std::move(spec), std::move(matrix)};
}

BiCharacter trivial_bicharacter(const GroupSpec& spec) {
    const std::size_t n = static_cast<std::size_t>(spec.coords());
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(1)));
    return BiCharacter{spec, std::move(m)};
}

Rational BiCharacter::eval(const GroupElement& a, const GroupElement& b) const {
    require_dim(spec, a, "bicharacter eval");
    require_dim(spec, b, "bicharacter eval");
    Rational r(1);
    const int n = spec.coords();
    for (int i = 0; i < n; ++i) {
        if (a.coords[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < n; ++j) {
            const long long e = a.coords[static_cast<std::size_t>(i)] * b.coords[static_cast<std::size_t>(j)];
            if (e == 0) continue;
            r *= pow_rational(matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], e);
        }
    }
    return r;
}

BiCharacter product_bicharacter(const BiCharacter& eps, const BiCharacter& delta) {
    if (!(eps.spec == delta.spec)) throw Error("bi-character product: group specs differ");
    BiCharacter out = eps;
    const std::size_t n = static_cast<std::size_t>(eps.spec.coords());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.matrix[i][j] = eps.matrix[i][j] * delta.matrix[i][j];
    return out;
}

SigmaForm SigmaForm::bimultiplicative(GroupSpec spec, std::vector<std::vector<Rational>> matrix) {
    spec.validate();
    require_square(spec, matrix);
    // Torsion compatibility keeps the generator-product formula well defined
    // on canonical coordinates; without it Eq-style cocycle identities break.
    const int n = spec.coords();
    for (int i = 0; i < n; ++i)
        for (int j = spec.free_rank; j < n; ++j) {
            const long nj = spec.torsion_orders[static_cast<std::size_t>(j - spec.free_rank)];
            if (pow_rational(matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], nj) != 1 ||
                pow_rational(matrix[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)], nj) != 1)
                throw Error("bimultiplicative sigma is not torsion compatible at generator pair (" +
                            std::to_string(i) + "," + std::to_string(j) + ")");
        }
    SigmaForm s;
    s.kind = SigmaKind::bimultiplicative;
    s.spec = std::move(spec);
    s.matrix = std::move(matrix);
    return s;
}

SigmaForm SigmaForm::coboundary(GroupSpec spec, std::map<GroupElement, Rational> omega) {
    spec.validate();
    for (const auto& [g, v] : omega) {
        if (!is_canonical(spec, g)) throw Error("omega table key " + to_string(g) + " is not canonical");
        if (is_zero(v)) throw Error("omega values must be nonzero");
    }
    SigmaForm s;
    s.kind = SigmaKind::coboundary;
    s.spec = std::move(spec);
    s.omega = std::move(omega);
    return s;
}

SigmaForm SigmaForm::explicit_table(GroupSpec spec,
                                    std::map<std::pair<GroupElement, GroupElement>, Rational> table) {
    spec.validate();
    for (const auto& [key, v] : table) {
        if (!is_canonical(spec, key.first) || !is_canonical(spec, key.second))
            throw Error("explicit sigma key (" + to_string(key.first) + "," + to_string(key.second) +
                        ") is not canonical");
        if (is_zero(v)) throw Error("sigma values must be nonzero");
    }
    SigmaForm s;
    s.kind = SigmaKind::explicit_table;
    s.spec = std::move(spec);
    s.table = std::move(table);
    return s;
}

static Rational omega_at(const SigmaForm& sigma, const GroupElement& g) {
    auto it = sigma.omega.find(g);
    if (it == sigma.omega.end())
        throw SupportMissError("omega is not defined at " + to_string(g));
    return it->second;
}

Rational sigma_eval(const SigmaForm& sigma, const GroupElement& a, const GroupElement& b) {
    require_dim(sigma.spec, a, "sigma eval");
    require_dim(sigma.spec, b, "sigma eval");
    switch (sigma.kind) {
    case SigmaKind::bimultiplicative: {
        Rational r(1);
        const int n = sigma.spec.coords();
        for (int i = 0; i < n; ++i) {
            if (a.coords[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < n; ++j) {
                const long long e =
                    a.coords[static_cast<std::size_t>(i)] * b.coords[static_cast<std::size_t>(j)];
                if (e == 0) continue;
                r *= pow_rational(sigma.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], e);
            }
        }
        return r;
    }
    case SigmaKind::coboundary: {
        const GroupElement sum = group_add(sigma.spec, a, b);
        return omega_at(sigma, sum) / (omega_at(sigma, a) * omega_at(sigma, b));
    }
    case SigmaKind::explicit_table: {
        auto it = sigma.table.find({a, b});
        if (it == sigma.table.end())
            throw SupportMissError("sigma is not defined at (" + to_string(a) + "," + to_string(b) + ")");
        return it->second;
    }
    }
    throw Error("unreachable sigma kind");
}

static std::vector<GroupElement> sorted_support(const SigmaForm& sigma,
                                                std::vector<GroupElement> support) {
    for (auto& g : support) g = canonical(sigma.spec, g);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    return support;
}

MultiplierCheck validate_multiplier(const SigmaForm& sigma, std::vector<GroupElement> support) {
    const auto S = sorted_support(sigma, std::move(support));
    for (const auto& a : S)
        for (const auto& b : S)
            for (const auto& c : S) {
                const Rational lhs =
                    sigma_eval(sigma, a, group_add(sigma.spec, b, c)) * sigma_eval(sigma, b, c);
                const Rational rhs =
                    sigma_eval(sigma, a, b) * sigma_eval(sigma, group_add(sigma.spec, a, b), c);
                if (lhs != rhs) return {false, "multiplier-law", {a, b, c}};
            }
    return {};
}

MultiplierCheck validate_symmetric_multiplier(const SigmaForm& sigma,
                                              std::vector<GroupElement> support) {
    const auto S = sorted_support(sigma, std::move(support));
    for (const auto& a : S)
        for (const auto& b : S)
            if (sigma_eval(sigma, a, b) != sigma_eval(sigma, b, a))
                return {false, "symmetry", {a, b}};
    for (const auto& a : S)
        for (const auto& b : S)
            for (const auto& c : S) {
                const Rational t1 = sigma_eval(sigma, a, b) * sigma_eval(sigma, c, group_add(sigma.spec, a, b));
                const Rational t2 = sigma_eval(sigma, b, c) * sigma_eval(sigma, a, group_add(sigma.spec, b, c));
                const Rational t3 = sigma_eval(sigma, c, a) * sigma_eval(sigma, b, group_add(sigma.spec, c, a));
                if (t1 != t2 || t1 != t3) return {false, "cyclic-invariance", {a, b, c}};
            }
    return {};
}

Rational DeltaEvaluator::eval(const GroupElement& a, const GroupElement& b) const {
    return sigma_eval(sigma_, a, b) / sigma_eval(sigma_, b, a);
}

BiCharacter DeltaEvaluator::materialize() const {
    const GroupSpec& spec = sigma_.spec;
    const int n = spec.coords();
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
    auto generator = [&](int i) {
        GroupElement g = group_zero(spec);
        g.coords[static_cast<std::size_t>(i)] = 1;
        return g;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = eval(generator(i), generator(j));
    BiCharacter delta{spec, std::move(m)};
    if (sigma_.kind == SigmaKind::explicit_table) {
        // The generator matrix only represents delta faithfully when the
        // bimultiplicative extension matches the pointwise quotient; check
        // everywhere the table makes both directions available.
        for (const auto& [key, v] : sigma_.table) {
            (void)v;
            if (!sigma_.table.count({key.second, key.first})) continue;
            if (delta.eval(key.first, key.second) != eval(key.first, key.second))
                throw Error("delta of explicit sigma is not bimultiplicative at (" +
                            to_string(key.first) + "," + to_string(key.second) + ")");
        }
    }
    return delta;
}

DeltaEvaluator delta_from_sigma(const SigmaForm& sigma) { return DeltaEvaluator(sigma); }

} // namespace chromalie
