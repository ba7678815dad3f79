#include "chromalie/axioms.hpp"
#include "chromalie/constructions.hpp"
#include "chromalie/corpus.hpp"
#include "chromalie/io.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace chromalie;

namespace {

GradedAlgebra random_algebra(std::mt19937_64& rng) {
    GradedAlgebra A;
    A.spec = GroupSpec{0, {2, 2}};
    const auto sign = [&] { return rng() % 2 ? Rational(1) : Rational(-1); };
    const Rational off = sign();
    A.epsilon = BiCharacter{A.spec, {{sign(), off}, {off, sign()}}};
    const std::vector<GroupElement> degrees = {GroupElement{{0, 0}}, GroupElement{{0, 1}},
                                               GroupElement{{1, 0}}, GroupElement{{1, 1}}};
    for (int i = 0; i < 3; ++i)
        A.basis.entries.push_back({"x" + std::to_string(i), degrees[rng() % 4]});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (rng() % 2) continue;
            const GroupElement target = group_add(A.spec, A.degree(i), A.degree(j));
            Element value;
            for (int k = 0; k < 3; ++k)
                if (A.degree(k) == target && rng() % 2)
                    value.coeffs.emplace(k, Rational(1 + static_cast<long>(rng() % 3)));
            A.mult.set(i, j, std::move(value));
        }
    return A;
}

} // namespace

static void BM_BicharacterEval(benchmark::State& state) {
    const GradedAlgebra L = build_corpus(CorpusId::sl2_color);
    const auto all = enumerate_group(L.spec);
    for (auto _ : state)
        for (const auto& a : all)
            for (const auto& b : all) benchmark::DoNotOptimize(L.epsilon.eval(a, b));
}
BENCHMARK(BM_BicharacterEval);

static void BM_EpsJacobiSl2(benchmark::State& state) {
    const GradedAlgebra L = build_corpus(CorpusId::sl2_color);
    for (auto _ : state) benchmark::DoNotOptimize(check_eps_jacobi(L).pass());
}
BENCHMARK(BM_EpsJacobiSl2);

static void BM_HomEpsJacobiSl2Hom(benchmark::State& state) {
    const GradedAlgebra H = build_corpus(CorpusId::sl2_hom);
    for (auto _ : state) benchmark::DoNotOptimize(check_hom_eps_jacobi(H).pass());
}
BENCHMARK(BM_HomEpsJacobiSl2Hom);

static void BM_AdmissibilityRandom(benchmark::State& state) {
    std::mt19937_64 rng(4242);
    std::vector<GradedAlgebra> pool;
    for (int i = 0; i < 16; ++i) pool.push_back(random_algebra(rng));
    std::size_t next = 0;
    for (auto _ : state) {
        const GradedAlgebra& A = pool[next++ % pool.size()];
        benchmark::DoNotOptimize(check_admissible(A, identity_map(A.basis)).pass());
    }
}
BENCHMARK(BM_AdmissibilityRandom);

static void BM_G6Sum(benchmark::State& state) {
    const GradedAlgebra A = build_corpus(CorpusId::group_hom_assoc);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_G_hom_associative(A, Subgroup::G6).pass());
}
BENCHMARK(BM_G6Sum);

static void BM_SigmaTwistSl2Hom(benchmark::State& state) {
    const GradedAlgebra H = build_corpus(CorpusId::sl2_hom);
    const SigmaForm sigma = SigmaForm::bimultiplicative(
        H.spec, {{Rational(1), Rational(-1)}, {Rational(1), Rational(1)}});
    for (auto _ : state)
        benchmark::DoNotOptimize(sigma_twist(H, sigma, SigmaMode::multiplier).dim());
}
BENCHMARK(BM_SigmaTwistSl2Hom);

static void BM_LaurentJacobiSamples(benchmark::State& state) {
    const LaurentContext ctx = laurent_extend(build_corpus(CorpusId::sl2_hom));
    for (auto _ : state)
        benchmark::DoNotOptimize(laurent_check_hom_jacobi(ctx, 16, 0x5EED, 4).pass);
}
BENCHMARK(BM_LaurentJacobiSamples);

static void BM_SerializeParse(benchmark::State& state) {
    const GradedAlgebra H = build_corpus(CorpusId::sl2_hom);
    for (auto _ : state) benchmark::DoNotOptimize(parse_algebra(serialize_algebra(H)).dim());
}
BENCHMARK(BM_SerializeParse);

BENCHMARK_MAIN();
