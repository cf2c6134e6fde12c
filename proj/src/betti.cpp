#include "homolab/betti.hpp"

#include "homolab/flow.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace homolab {

NullHomologyTester classical_exact_tester()
{
    return {"classical-exact", [](const SimplicialComplex& prefix, const Chain& gamma) {
                return TesterOutcome{is_null_homologous(prefix, gamma, Backend::Exact), 0};
            }};
}

NullHomologyTester classical_float_tester()
{
    return {"classical-float", [](const SimplicialComplex& prefix, const Chain& gamma) {
                return TesterOutcome{is_null_homologous(prefix, gamma, Backend::Float), 0};
            }};
}

namespace {

std::vector<Simplex> level(const SimplicialComplex& k, int d)
{
    if (d < 0 || d > k.dim()) return {};
    return k.simplices(d);
}

}  // namespace

BettiRun incremental_betti(const SimplicialComplex& k, int d, const NullHomologyTester& tester,
                           const std::optional<std::vector<Simplex>>& order, std::optional<std::uint64_t> seed)
{
    if (d < 0 || d > k.dim()) throw DomainError("incremental_betti: dimension out of range");
    std::vector<Simplex> lo = level(k, d), hi = level(k, d + 1);
    BettiRun run;
    run.d = d;
    run.tester = tester.id;
    if (order) {
        std::vector<Simplex> a(order->begin(), order->begin() + std::min(order->size(), lo.size()));
        std::vector<Simplex> b(order->begin() + a.size(), order->end());
        std::vector<Simplex> sa = a, sb = b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != lo || sb != hi) throw DomainError("order is not a permutation of K_d followed by K_{d+1}");
        lo = a;
        hi = b;
    } else if (seed) {
        std::mt19937_64 rng(*seed);
        std::shuffle(lo.begin(), lo.end(), rng);
        std::shuffle(hi.begin(), hi.end(), rng);
    }
    run.order = lo;
    run.order.insert(run.order.end(), hi.begin(), hi.end());

    auto phase = [&](const std::vector<Simplex>& seq, int dim, bool adding) {
        std::vector<bool> mask(k.count(dim), false);
        for (const Simplex& s : seq) {
            BettiStep step;
            step.simplex = s;
            if (dim == 0) {
                step.null_homologous = true;
            } else {
                SimplicialComplex prefix = k.with_top_selection(dim, mask);
                Chain gamma = boundary(single<Q>(s));
                TesterOutcome o = tester.test(prefix, gamma);
                ++run.invocations;
                run.queries += o.queries;
                step.null_homologous = o.null_homologous;
                step.queries = o.queries;
            }
            if (adding && step.null_homologous) step.delta = 1;
            if (!adding && !step.null_homologous) step.delta = -1;
            run.betti += step.delta;
            run.steps.push_back(step);
            mask[k.index_of(s)] = true;
        }
    };
    try {
        phase(lo, d, true);
        phase(hi, d + 1, false);
    } catch (const ResourceError& e) {
        run.aborted = true;
        run.abort_reason = e.what();
    }
    return run;
}

int matrix_reduction_betti(const SimplicialComplex& k, int d)
{
    if (d < 0 || d > k.dim()) throw DomainError("matrix_reduction_betti: dimension out of range");
    int n = static_cast<int>(k.count(d));
    int r_d = d >= 1 ? rank(boundary_operator(k, d).to_z()) : 0;
    int r_up = d + 1 <= k.dim() ? rank(boundary_operator(k, d + 1).to_z()) : 0;
    return n - r_d - r_up;
}

}  // namespace homolab
