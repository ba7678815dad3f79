// Acceptance suite: one line per criterion, exact checks only.
// Exit code 0 iff every criterion passes.

#include "chromalie/axioms.hpp"
#include "chromalie/constructions.hpp"
#include "chromalie/corpus.hpp"
#include "chromalie/errors.hpp"
#include "chromalie/io.hpp"
#include "test_support.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <sys/wait.h>

using namespace chromalie;
using chromalie::testing::R;
using chromalie::testing::el;
using chromalie::testing::ge;
namespace fs = std::filesystem;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& message) {
    if (!cond) throw Failure(message);
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_tool(const std::string& args) {
    const std::string cmd = std::string(CHROMALIE_TOOL_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    require(pipe != nullptr, "popen failed");
    RunResult result;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

struct TempDir {
    fs::path path;
    TempDir() {
        std::string tmpl = (fs::temp_directory_path() / "chromalie-acc-XXXXXX").string();
        require(mkdtemp(tmpl.data()) != nullptr, "mkdtemp failed");
        path = tmpl;
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), "cannot write " + path);
    out << bytes;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Element unit_associator(const GradedAlgebra& A, const EvenMap& zeta, int a, int b, int c) {
    return associator(A, zeta, element_unit(a), element_unit(b), element_unit(c));
}

// Independent oracle for criterion 6: the alternating eps-weighted
// associator sum over S3, written out longhand.
Element s3_sum_oracle(const GradedAlgebra& A, const EvenMap& zeta, int i, int j, int k) {
    auto e = [&](int a, int b) { return A.eps(a, b); };
    Element sum = unit_associator(A, zeta, i, j, k);
    sum = add(sum, scale(-e(i, j), unit_associator(A, zeta, j, i, k)));
    sum = add(sum, scale(-e(j, k), unit_associator(A, zeta, i, k, j)));
    sum = add(sum, scale(e(j, k) * e(i, k), unit_associator(A, zeta, k, i, j)));
    sum = add(sum, scale(e(i, j) * e(i, k), unit_associator(A, zeta, j, k, i)));
    sum = add(sum, scale(-e(j, k) * e(i, k) * e(i, j), unit_associator(A, zeta, k, j, i)));
    return sum;
}

std::vector<GradedAlgebra> shared_instance_pool() {
    std::vector<GradedAlgebra> pool;
    pool.push_back(build_corpus(CorpusId::sl2_color));
    pool.push_back(build_corpus(CorpusId::sl2_color_paper_eps));
    pool.push_back(build_corpus(CorpusId::sl2_hom));
    pool.push_back(build_corpus(CorpusId::heisenberg_color));
    pool.push_back(build_corpus(CorpusId::heisenberg_hom, {R(2), R(3)}));
    pool.push_back(build_corpus(CorpusId::witt_z2));
    pool.push_back(build_corpus(CorpusId::group_hom_assoc));
    pool.push_back(build_corpus(CorpusId::sl2_sigma_twist));
    std::mt19937_64 rng(0xA11CE);
    for (int trial = 0; trial < 60; ++trial)
        pool.push_back(chromalie::testing::random_algebra(rng, trial % 5 == 0));
    return pool;
}

const std::vector<GradedAlgebra>& instance_pool() {
    static const std::vector<GradedAlgebra> pool = shared_instance_pool();
    return pool;
}

void criterion_sl2_twist() {
    const GradedAlgebra H = build_corpus(CorpusId::sl2_hom);
    require(H.mult.at(0, 1) == el({{2, -1}}), "<a1,a2> must be -a3");
    require(H.mult.at(1, 2) == el({{0, -1}}), "<a2,a3> must be -a1");
    require(H.mult.at(2, 0) == el({{1, -1}}), "<a3,a1> must be -a2");
    require(H.mult.at(1, 0) == el({{2, -1}}), "<a2,a1> must be -a3");
    require(H.mult.at(2, 1) == el({{0, -1}}), "<a3,a2> must be -a1");
    require(H.mult.at(0, 2) == el({{1, -1}}), "<a1,a3> must be -a2");
    require(H.mult.products.size() == 6, "exactly six stored brackets");
    const auto report = check_hom_eps_jacobi(H);
    require(report.tuples_checked == 27, "27 basis triples");
    require(report.pass(), "Hom eps-Jacobi must hold");
}

void criterion_endomorphism_solutions() {
    const GradedAlgebra L = build_corpus(CorpusId::sl2_color);
    const auto found = solve_diagonal_endomorphisms(L, {R(1), R(-1)});
    require(found.size() == 4, "exactly four sign solutions");
    auto has = [&](long x, long y, long z) {
        EvenMap f;
        f.set_column(0, element_term(0, Rational(x)));
        f.set_column(1, element_term(1, Rational(y)));
        f.set_column(2, element_term(2, Rational(z)));
        for (const auto& g : found)
            if (g == f) return true;
        return false;
    };
    require(has(1, 1, 1) && has(-1, -1, 1) && has(-1, 1, -1) && has(1, -1, -1),
            "solution set must be the xy=z, yz=x, zx=y sign branch");
    EvenMap doubled;
    doubled.set_column(0, element_term(0, R(2)));
    doubled.set_column(1, element_term(1, R(2)));
    doubled.set_column(2, element_term(2, R(2)));
    require(!is_endomorphism(L, doubled).ok, "diag(2,2,2) must be rejected");
}

void criterion_heisenberg_family() {
    const std::vector<std::pair<Rational, Rational>> params = {
        {R(1), R(1)}, {R(2), R(3)}, {R(-1), R(1, 2)}};
    for (const auto& [l1, l2] : params) {
        const GradedAlgebra H = build_corpus(CorpusId::heisenberg_hom, {l1, l2});
        Element expected;
        expected.coeffs.emplace(2, l1 * l2);
        require(H.mult.at(0, 1) == expected, "<e1,e2> must be l1*l2*e3");
        require(H.mult.at(1, 0) == expected, "<e2,e1> must be l1*l2*e3");
        require(H.mult.products.size() == 2, "no other nonzero bracket");
        const auto report = check_hom_eps_jacobi(H);
        require(report.tuples_checked == 27 && report.pass(), "family member fails Hom Jacobi");
    }
}

void criterion_sigma_twist_cli() {
    TempDir dir;
    const std::string in = dir.file("sl2-hom.json");
    const std::string sigma_path = dir.file("sigma.json");
    const std::string out = dir.file("out.json");
    require(run_tool("example sl2-hom -o " + in).exit_code == 0, "emit sl2-hom");
    write_file(sigma_path,
               "{\"kind\": \"bimultiplicative\", \"matrix\": [[\"1\", \"-1\"], [\"1\", \"1\"]]}\n");
    require(run_tool("twist-sigma " + in + " --sigma " + sigma_path +
                     " --mode multiplier -o " + out)
                    .exit_code == 0,
            "twist-sigma must succeed");
    const GradedAlgebra S = parse_algebra(slurp(out));
    require(S.mult.at(0, 1) == el({{2, 1}}), "<a1,a2>^s must be a3");
    require(S.mult.at(1, 2) == el({{0, -1}}), "<a2,a3>^s must be -a1");
    require(S.mult.at(2, 0) == el({{1, -1}}), "<a3,a1>^s must be -a2");

    const SigmaForm sigma =
        SigmaForm::bimultiplicative(S.spec, {{R(1), R(-1)}, {R(1), R(1)}});
    const BiCharacter delta = delta_from_sigma(sigma).materialize();
    require(delta.matrix == std::vector<std::vector<Rational>>{{R(1), R(-1)}, {R(-1), R(1)}},
            "delta must be (-1)^(a1 b2 - a2 b1)");
    require(S.epsilon.matrix == std::vector<std::vector<Rational>>{{R(1), R(1)}, {R(1), R(1)}},
            "eps*delta must be trivial on generators");
    require(validate_bicharacter(S.epsilon.spec, S.epsilon.matrix).ok(),
            "eps*delta must validate");
    require(check_hom_eps_jacobi(S).pass(), "output must pass Hom Jacobi under eps*delta");
    require(run_tool("verify " + out).exit_code == 0, "verify must pass on the output");
}

void criterion_negative_fixture() {
    const GradedAlgebra bad = build_corpus(CorpusId::sl2_color_paper_eps);
    const auto report = check_eps_jacobi(bad);
    require(!report.pass(), "the variant eps must fail the eps-Jacobi check");
    require(report.entries.front().tuple == std::vector<int>{0, 0, 1},
            "first violation must sit at (a1,a1,a2)");
    require(report.entries.front().residual == el({{1, -2}}), "residual must be -2*a2");
}

void criterion_oracle_equivalence() {
    int admissible_count = 0, failing_count = 0;
    for (const GradedAlgebra& A : instance_pool()) {
        const EvenMap zeta = A.effective_twist();
        const bool a = check_admissible(A, zeta).pass();
        bool b = true;
        const int n = A.dim();
        for (int i = 0; i < n && b; ++i)
            for (int j = 0; j < n && b; ++j)
                for (int k = 0; k < n && b; ++k)
                    b = s3_sum_oracle(A, zeta, i, j, k).is_zero();
        const bool c = check_S_symmetry(A, zeta).pass();
        require(a == b && b == c, "the three admissibility predicates disagree");
        (a ? admissible_count : failing_count)++;
    }
    require(admissible_count > 0 && failing_count > 0,
            "the pool must exercise both outcomes");
}

void criterion_subgroup_hierarchy() {
    const GradedAlgebra A = build_corpus(CorpusId::group_hom_assoc);
    for (Subgroup g : {Subgroup::G1, Subgroup::G2, Subgroup::G3, Subgroup::G4, Subgroup::G5,
                       Subgroup::G6})
        require(check_G_hom_associative(A, g).pass(), "group-hom-assoc must pass every G");
    int implications = 0;
    for (const GradedAlgebra& inst : instance_pool()) {
        const EvenMap zeta = inst.effective_twist();
        for (Subgroup g :
             {Subgroup::G1, Subgroup::G2, Subgroup::G3, Subgroup::G4, Subgroup::G5})
            if (check_G_hom_associative(inst, zeta, g).pass()) {
                require(check_G_hom_associative(inst, zeta, Subgroup::G6).pass(),
                        "a passing G_i must force a passing G6");
                ++implications;
            }
    }
    require(implications > 0, "no instance passed any proper subgroup");
}

void criterion_twist_preservation() {
    const std::vector<Rational> candidates = {R(1), R(-1), R(2), R(-2), R(1, 2), R(-1, 2),
                                              R(4), R(1, 4)};
    int twists = 0;
    for (CorpusId id : {CorpusId::sl2_color, CorpusId::heisenberg_color, CorpusId::witt_z2}) {
        const GradedAlgebra L = build_corpus(id);
        for (const EvenMap& zeta : solve_diagonal_endomorphisms(L, candidates, true)) {
            const GradedAlgebra twisted = endo_twist_bracket(L, zeta);
            require(check_eps_skew(twisted).pass(), "twist must stay eps-skew");
            require(check_hom_eps_jacobi(twisted).pass(), "twist must pass Hom Jacobi");
            ++twists;
        }
    }
    require(twists >= 8, "expected a nontrivial family of verified endomorphism twists");

    const GradedAlgebra H = build_corpus(CorpusId::sl2_hom);
    std::mt19937_64 rng(0x0E6A);
    const std::vector<Rational> pool = {R(1), R(2), R(3), R(5), R(1, 2), R(-1), R(-2), R(2, 3)};
    for (int trial = 0; trial < 10; ++trial) {
        std::map<GroupElement, Rational> omega;
        for (const auto& g : enumerate_group(H.spec))
            omega[g] = pool[static_cast<std::size_t>(chromalie::testing::draw(rng, 0, 7))];
        const GradedAlgebra out =
            sigma_twist(H, SigmaForm::coboundary(H.spec, omega), SigmaMode::symmetric);
        require(out.epsilon == H.epsilon, "symmetric twist must not touch eps");
        require(check_hom_eps_jacobi(out).pass(), "symmetric twist must pass Hom Jacobi");
    }
}

void criterion_laurent_sampling() {
    const LaurentContext ctx = laurent_extend(build_corpus(CorpusId::sl2_hom));
    const auto skew = laurent_check_skew(ctx, 64, 0x5EED, 4);
    require(skew.pass && skew.samples == 64, "sampled eps-skew fails: " + skew.first_failure);
    const auto jacobi = laurent_check_hom_jacobi(ctx, 64, 0x5EED, 4);
    require(jacobi.pass && jacobi.samples == 64,
            "sampled Hom Jacobi fails: " + jacobi.first_failure);
    const LaurentPoly cube = LaurentPoly::term(3, R(1));
    require(substitute_shift(cube, R(2)).to_string() == "t^3 + 6*t^2 + 12*t + 8",
            "t^3 at lambda = 2 must expand to t^3 + 6*t^2 + 12*t + 8");
}

void criterion_determinism_roundtrip() {
    TempDir dir;
    const std::string pass_file = dir.file("sl2-hom.json");
    const std::string fail_file = dir.file("paper.json");
    require(run_tool("example sl2-hom -o " + pass_file).exit_code == 0, "emit sl2-hom");
    require(run_tool("example sl2-color-paper-eps -o " + fail_file).exit_code == 0,
            "emit paper fixture");
    for (const std::string base :
         {"verify " + pass_file + " --all", "verify " + fail_file + " --all"}) {
        for (const std::string fmt : {" --format text", " --format json"}) {
            const RunResult a = run_tool(base + " --jobs 1" + fmt);
            const RunResult b = run_tool(base + " --jobs 1" + fmt);
            const RunResult c = run_tool(base + " --jobs 4" + fmt);
            require(a.output == b.output, "re-run must be byte-identical");
            require(a.output == c.output, "jobs=4 must be byte-identical to jobs=1");
        }
    }
    for (const std::string& name : corpus_ids()) {
        const auto id = corpus_id_from_string(name);
        const std::vector<Rational> params =
            (*id == CorpusId::heisenberg_hom) ? std::vector<Rational>{R(2), R(3)}
                                              : std::vector<Rational>{};
        const std::string bytes = serialize_algebra(build_corpus(*id, params));
        require(serialize_algebra(parse_algebra(bytes)) == bytes,
                "parse then serialize must be a fixed point for " + name);
    }
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
        {"1. sl(2) twist reproduction", criterion_sl2_twist},
        {"2. diagonal endomorphism solution set", criterion_endomorphism_solutions},
        {"3. twisted Heisenberg family", criterion_heisenberg_family},
        {"4. sigma-twist reproduction through the CLI", criterion_sigma_twist_cli},
        {"5. negative fixture first violation", criterion_negative_fixture},
        {"6. admissibility oracle equivalence", criterion_oracle_equivalence},
        {"7. subgroup hierarchy", criterion_subgroup_hierarchy},
        {"8. twist preservation properties", criterion_twist_preservation},
        {"9. Laurent extension sampling", criterion_laurent_sampling},
        {"10. determinism and round-trip", criterion_determinism_roundtrip},
    };
    int passed = 0;
    for (const auto& [name, fn] : criteria) {
        try {
            fn();
            std::cout << "[PASS] " << name << "\n";
            ++passed;
        } catch (const std::exception& e) {
            std::cout << "[FAIL] " << name << ": " << e.what() << "\n";
        }
    }
    std::cout << "acceptance: " << passed << "/" << criteria.size() << " criteria passed\n";
    return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
