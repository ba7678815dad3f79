// chromalie - construct, twist and verify graded epsilon-Lie structures.
//
// Exit codes: 0 all selected checks pass, 1 a violation or construction
// hypothesis failure was found, 2 malformed input.

#include "chromalie/axioms.hpp"
#include "chromalie/constructions.hpp"
#include "chromalie/corpus.hpp"
#include "chromalie/errors.hpp"
#include "chromalie/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace chromalie;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitMalformed = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + path + "'");
    out << bytes;
}

GradedAlgebra load_algebra(const std::string& path) { return parse_algebra(read_file(path)); }

// "--map identity" means the identity map; anything else is a file path.
EvenMap load_map(const std::string& arg, const GradedBasis& domain, const GradedBasis& codomain) {
    if (arg == "identity") {
        if (!(domain == codomain))
            throw ParseError("identity map requires matching bases");
        return identity_map(domain);
    }
    return parse_map(read_file(arg), domain, codomain);
}

struct CheckLine {
    std::string name;
    bool pass = true;
    std::size_t checked = 0;
    std::string unit;
    std::vector<std::string> violations;
};

CheckLine from_report(std::string name, std::string unit, const GradedBasis& basis,
                      const ViolationReport& report) {
    CheckLine line{std::move(name), report.pass(), report.tuples_checked, std::move(unit), {}};
    for (const auto& v : report.entries) line.violations.push_back(violation_to_string(basis, v));
    return line;
}

std::vector<CheckLine> run_checks(const GradedAlgebra& A, bool all, int jobs) {
    std::vector<CheckLine> lines;
    const GradedBasis& basis = A.basis;
    const EvenMap zeta = A.effective_twist();

    {
        ValidationReport eps = validate_bicharacter(A.spec, A.epsilon.matrix);
        CheckLine line{"bicharacter", eps.ok(), 1, "matrix", eps.issues};
        lines.push_back(std::move(line));
    }
    lines.push_back(from_report("evenness", "products", basis, check_evenness(A)));
    if (A.twist) {
        lines.push_back(from_report("even-map", "columns", basis, is_even_map(A, *A.twist)));
        const bool hom_flavor =
            A.flavor == Flavor::hom_color || A.flavor == Flavor::hom_lie_color;
        if (all || hom_flavor) {
            PairCheck endo = is_endomorphism(A, *A.twist);
            CheckLine line{"endomorphism", endo.ok,
                           static_cast<std::size_t>(A.dim()) * static_cast<std::size_t>(A.dim()),
                           "pairs", {}};
            if (!endo.ok) {
                Violation v{"endomorphism", {endo.pair.first, endo.pair.second},
                            sub(endo.lhs, endo.rhs)};
                line.violations.push_back(violation_to_string(basis, v));
            }
            lines.push_back(std::move(line));
        }
    }

    const bool want_skew = all || A.flavor == Flavor::lie_color || A.flavor == Flavor::hom_lie_color;
    const bool want_jacobi = all || A.flavor == Flavor::lie_color;
    const bool want_hom_jacobi = all || A.flavor == Flavor::hom_lie_color;
    const bool want_hom_assoc = all || A.flavor == Flavor::hom_color;

    if (want_skew) lines.push_back(from_report("eps-skew", "pairs", basis, check_eps_skew(A)));
    if (want_jacobi)
        lines.push_back(from_report("eps-jacobi", "triples", basis, check_eps_jacobi(A, jobs)));
    if (want_hom_jacobi)
        lines.push_back(
            from_report("hom-eps-jacobi", "triples", basis, check_hom_eps_jacobi(A, zeta, jobs)));
    if (want_hom_assoc)
        lines.push_back(
            from_report("hom-assoc", "triples", basis, check_hom_associativity(A, zeta, jobs)));
    if (all) {
        lines.push_back(from_report("flexible", "pairs", basis, check_flexible(A, zeta)));
        lines.push_back(
            from_report("s-symmetry", "triples", basis, check_S_symmetry(A, zeta, jobs)));
        lines.push_back(
            from_report("admissible", "triples", basis, check_admissible(A, zeta, jobs)));
        for (Subgroup g : {Subgroup::G1, Subgroup::G2, Subgroup::G3, Subgroup::G4, Subgroup::G5,
                           Subgroup::G6})
            lines.push_back(from_report(to_string(g), "triples", basis,
                                        check_G_hom_associative(A, zeta, g, jobs)));
    }
    return lines;
}

int report_checks(const std::string& header, const std::vector<CheckLine>& lines,
                  const std::string& format, const std::vector<std::string>& notes,
                  const std::string& flavor) {
    bool pass = true;
    for (const auto& line : lines) pass = pass && line.pass;
    if (format == "json") {
        ordered_json j;
        j["command"] = header;
        if (!flavor.empty()) j["flavor"] = flavor;
        j["notes"] = notes;
        ordered_json checks = ordered_json::array();
        for (const auto& line : lines) {
            ordered_json c;
            c["name"] = line.name;
            c["status"] = line.pass ? "PASS" : "FAIL";
            c["checked"] = line.checked;
            c["unit"] = line.unit;
            c["violations"] = line.violations;
            checks.push_back(std::move(c));
        }
        j["checks"] = std::move(checks);
        j["result"] = pass ? "PASS" : "FAIL";
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << header << "\n";
        if (!flavor.empty()) std::cout << "flavor: " << flavor << "\n";
        for (const auto& note : notes) std::cout << "note: " << note << "\n";
        for (const auto& line : lines) {
            std::cout << line.name << ": " << (line.pass ? "PASS" : "FAIL");
            if (line.pass)
                std::cout << " (" << line.checked << " " << line.unit << ")";
            else
                std::cout << " (" << line.violations.size() << " violations / " << line.checked
                          << " " << line.unit << ")";
            std::cout << "\n";
            if (!line.pass) std::cout << "  first: " << line.violations.front() << "\n";
        }
        std::cout << "result: " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kExitPass : kExitViolation;
}

int cmd_verify(const std::string& path, bool all, const std::string& format, bool apply_skew,
               int jobs) {
    GradedAlgebra A = load_algebra(path);
    std::vector<std::string> notes;
    if (apply_skew) {
        SkewCompletion completion = skew_complete(A);
        A.mult = std::move(completion.table);
        notes.push_back("skew-complete filled " + std::to_string(completion.filled) + " pairs");
        for (auto& n : completion.notes) notes.push_back(std::move(n));
    }
    const auto lines = run_checks(A, all, jobs);
    return report_checks("verify: " + path, lines, format, notes, to_string(A.flavor));
}

int cmd_twist_endo(const std::string& path, const std::string& map_arg, const std::string& out) {
    GradedAlgebra L = load_algebra(path);
    EvenMap zeta = load_map(map_arg, L.basis, L.basis);
    GradedAlgebra twisted = endo_twist_bracket(L, zeta);
    write_file(out, serialize_algebra(twisted));
    std::cout << "twist-endo: wrote " << out << "\n";
    return kExitPass;
}

int cmd_twist_sigma(const std::string& path, const std::string& sigma_path,
                    const std::string& mode, const std::string& out) {
    GradedAlgebra L = load_algebra(path);
    SigmaForm sigma = parse_sigma(read_file(sigma_path), L.spec);
    const SigmaMode m = mode == "symmetric" ? SigmaMode::symmetric : SigmaMode::multiplier;
    GradedAlgebra twisted = sigma_twist(L, sigma, m);
    write_file(out, serialize_algebra(twisted));
    std::cout << "twist-sigma: wrote " << out << "\n";
    return kExitPass;
}

int cmd_commutator(const std::string& path, const std::string& out) {
    GradedAlgebra A = load_algebra(path);
    CommutatorResult result = commutator_algebra(A);
    if (!result.precondition_ok)
        std::cerr << "warning: input is not hom-associative (first: "
                  << violation_to_string(A.basis, result.hom_assoc.entries.front())
                  << "); commutator emitted anyway\n";
    write_file(out, serialize_algebra(result.algebra));
    std::cout << "commutator: wrote " << out << "\n";
    return kExitPass;
}

int cmd_example(const std::string& id, const std::vector<std::string>& params,
                const std::string& out) {
    auto corpus_id = corpus_id_from_string(id);
    if (!corpus_id) throw ParseError("unknown example id '" + id + "'");
    std::vector<Rational> values;
    for (const auto& p : params) values.push_back(parse_rational(p));
    GradedAlgebra A = build_corpus(*corpus_id, values);
    write_file(out, serialize_algebra(A));
    std::cout << "example " << id << ": wrote " << out << "\n";
    return kExitPass;
}

int cmd_check_hom(const std::string& path_a, const std::string& path_b,
                  const std::string& map_arg) {
    GradedAlgebra A = load_algebra(path_a);
    GradedAlgebra B = load_algebra(path_b);
    EvenMap f = load_map(map_arg, A.basis, B.basis);
    ViolationReport report = check_morphism(A, B, f);
    std::vector<CheckLine> lines;
    lines.push_back(from_report("morphism", "pairs", B.basis, report));
    return report_checks("check-hom: " + path_a + " -> " + path_b, lines, "text", {}, "");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chromalie - construct, twist and verify graded epsilon-Lie structures"};
    app.require_subcommand(1);

    std::string in_path, out_path, map_arg, sigma_path, format = "text", mode, example_id;
    std::vector<std::string> example_params;
    bool all = false, apply_skew = false;
    int jobs = 1;

    auto* verify = app.add_subcommand("verify", "Run the axiom checks selected by the flavor");
    verify->add_option("file", in_path, "algebra file")->required();
    verify->add_flag("--all", all, "run every check, not just the flavor suite");
    verify->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--skew-complete", apply_skew, "apply eps-skew completion before checking");
    verify->add_option("--jobs", jobs, "worker threads for triple enumeration")
        ->check(CLI::PositiveNumber);

    auto* twist_endo = app.add_subcommand("twist-endo", "Twist a bracket along an endomorphism");
    twist_endo->add_option("file", in_path, "algebra file")->required();
    twist_endo->add_option("--map", map_arg, "map file or 'identity'")->required();
    twist_endo->add_option("-o,--output", out_path, "output file")->required();

    auto* twist_sigma = app.add_subcommand("twist-sigma", "Rescale a bracket by a multiplier");
    twist_sigma->add_option("file", in_path, "algebra file")->required();
    twist_sigma->add_option("--sigma", sigma_path, "sigma file")->required();
    twist_sigma->add_option("--mode", mode, "symmetric|multiplier")
        ->required()
        ->check(CLI::IsMember({"symmetric", "multiplier"}));
    twist_sigma->add_option("-o,--output", out_path, "output file")->required();

    auto* commutator = app.add_subcommand("commutator", "Color commutator of a product");
    commutator->add_option("file", in_path, "algebra file")->required();
    commutator->add_option("-o,--output", out_path, "output file")->required();

    auto* example = app.add_subcommand("example", "Emit a built-in example algebra");
    example->add_option("id", example_id, "example id")->required();
    example->add_option("params", example_params, "rational parameters");
    example->add_option("-o,--output", out_path, "output file")->required();

    std::string in_path_b;
    auto* check_hom = app.add_subcommand("check-hom", "Check a homomorphism between two algebras");
    check_hom->add_option("fileA", in_path, "source algebra file")->required();
    check_hom->add_option("fileB", in_path_b, "target algebra file")->required();
    check_hom->add_option("--map", map_arg, "map file or 'identity'")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitMalformed;
    }

    try {
        if (app.got_subcommand(verify)) return cmd_verify(in_path, all, format, apply_skew, jobs);
        if (app.got_subcommand(twist_endo)) return cmd_twist_endo(in_path, map_arg, out_path);
        if (app.got_subcommand(twist_sigma))
            return cmd_twist_sigma(in_path, sigma_path, mode, out_path);
        if (app.got_subcommand(commutator)) return cmd_commutator(in_path, out_path);
        if (app.got_subcommand(example)) return cmd_example(example_id, example_params, out_path);
        if (app.got_subcommand(check_hom)) return cmd_check_hom(in_path, in_path_b, map_arg);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const SupportMissError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    }
    return kExitMalformed;
}
