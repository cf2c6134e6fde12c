#include "homolab/spansim.hpp"

#include "homolab/flow.hpp"
#include "homolab/linalg.hpp"
#include "homolab/spectra.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

namespace homolab {

namespace {

SpanProgram program_over(const SimplicialComplex& k, int d, const Chain& gamma)
{
    SpanProgram p;
    p.d = d;
    if (d - 1 <= k.dim()) p.rows = k.simplices(d - 1);
    p.tau = gamma;
    p.tau_vec = to_vector(gamma, p.rows);
    std::map<Simplex, int> row_index;
    for (int i = 0; i < static_cast<int>(p.rows.size()); ++i) row_index[p.rows[i]] = i;
    if (d <= k.dim()) {
        for (const Simplex& s : k.simplices(d)) {
            SpanColumn c;
            c.label = simplex_key(s);
            c.simplex = s;
            c.weight = k.weight(s);
            for (const auto& [face, sign] : signed_facets(s)) c.entries.emplace_back(row_index.at(face), Q(sign));
            std::sort(c.entries.begin(), c.entries.end());
            p.columns.push_back(std::move(c));
        }
    }
    return p;
}

QMatrix column_matrix(const SpanProgram& p, const std::vector<bool>& mask)
{
    int n = 0;
    for (bool b : mask) n += b;
    QMatrix m(static_cast<int>(p.rows.size()), n);
    int c = 0;
    for (int i = 0; i < p.size(); ++i) {
        if (!mask[i]) continue;
        for (const auto& [r, v] : p.columns[i].entries) m(r, c) = v;
        ++c;
    }
    return m;
}

/// sum over selected columns of w a a^T
QMatrix gram(const SpanProgram& p, const std::vector<bool>& mask)
{
    int m = static_cast<int>(p.rows.size());
    QMatrix g(m, m);
    for (int i = 0; i < p.size(); ++i) {
        if (!mask[i]) continue;
        const auto& col = p.columns[i];
        for (const auto& [r1, v1] : col.entries)
            for (const auto& [r2, v2] : col.entries) g(r1, r2) += col.weight * v1 * v2;
    }
    return g;
}

void check_mask(const SpanProgram& p, const std::vector<bool>& x)
{
    if (static_cast<int>(x.size()) != p.size())
        throw DomainError("input length " + std::to_string(x.size()) + " does not match " +
                          std::to_string(p.size()) + " columns");
}

Q positive_size(const SpanProgram& p, const std::vector<bool>& x)
{
    auto z = solve_any(gram(p, x), p.tau_vec);
    if (!z) throw NumericError("positive witness: Laplacian system inconsistent");
    return dot(p.tau_vec, *z);
}

Q negative_size(const SpanProgram& p, const std::vector<bool>& x)
{
    int m = static_cast<int>(p.rows.size());
    std::vector<int> sel;
    for (int i = 0; i < p.size(); ++i)
        if (x[i]) sel.push_back(i);
    int k = static_cast<int>(sel.size()) + 1;
    QMatrix g = gram(p, p.all_ones());
    QMatrix kkt(m + k, m + k);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) kkt(r, c) = 2 * g(r, c);
    for (int j = 0; j < k; ++j) {
        std::vector<Q> b(m, Q(0));
        if (j + 1 < k) {
            for (const auto& [r, v] : p.columns[sel[j]].entries) b[r] = v;
        } else {
            b = p.tau_vec;
        }
        for (int r = 0; r < m; ++r) {
            kkt(r, m + j) = b[r];
            kkt(m + j, r) = b[r];
        }
    }
    std::vector<Q> rhs(m + k, Q(0));
    rhs[m + k - 1] = 1;
    auto sol = solve_any(kkt, rhs);
    if (!sol) throw NumericError("negative witness: KKT system inconsistent");
    std::vector<Q> pvec(sol->begin(), sol->begin() + m);
    return dot(pvec, multiply(g, pvec));
}

Q qpow(const Q& b, int e)
{
    Q r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

long long ceil_sqrt(long long m)
{
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(m)));
    while (r * r < m) ++r;
    while (r > 0 && (r - 1) * (r - 1) >= m) --r;
    return std::max(1LL, r);
}

long long amplification_rounds(double amplitude)
{
    if (amplitude >= 1.0) return 1;
    return std::max(1LL, static_cast<long long>(std::ceil(M_PI / (4.0 * std::asin(amplitude)))));
}

}  // namespace

bool SpanProgram::evaluate(const std::vector<bool>& x) const
{
    check_mask(*this, x);
    return in_column_span(column_matrix(*this, x), tau_vec);
}

Eigen::MatrixXd SpanProgram::a_matrix() const
{
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<int>(rows.size()), size());
    for (int i = 0; i < size(); ++i) {
        double s = std::sqrt(to_double(columns[i].weight));
        for (const auto& [r, v] : columns[i].entries) a(r, i) = to_double(v) * s;
    }
    return a;
}

SpanProgram build_span_program(const SimplicialComplex& k, const Chain& gamma)
{
    int d = gamma.dim + 1;
    if (gamma.is_zero()) throw DomainError("span program: target chain is zero");
    if (d < 1 || d > k.dim()) throw DomainError("span program: K has no simplices of dimension " + std::to_string(d));
    if (!is_cycle(gamma)) throw DomainError("span program: target is not a cycle");
    return program_over(k, d, gamma);
}

SpanProgram with_virtual_column(const SpanProgram& p, const std::string& label)
{
    SpanProgram out = p;
    SpanColumn c;
    c.label = label;
    for (int r = 0; r < static_cast<int>(p.tau_vec.size()); ++r)
        if (p.tau_vec[r] != 0) c.entries.emplace_back(r, p.tau_vec[r]);
    out.columns.push_back(std::move(c));
    return out;
}

SimplicialComplex instance_complex(const SimplicialComplex& k, int d, const std::vector<bool>& x)
{
    return k.with_top_selection(d, x);
}

WitnessSizes witness_sizes(const SpanProgram& p, const std::vector<bool>& x)
{
    check_mask(p, x);
    WitnessSizes w;
    w.positive = p.evaluate(x);
    if (w.positive)
        w.w_plus = positive_size(p, x);
    else
        w.w_minus = negative_size(p, x);
    return w;
}

WitnessBounds witness_bounds(const SpanProgram& p)
{
    int n = p.size();
    if (!p.evaluate(p.all_ones())) throw DomainError("witness bounds: target outside the span of all columns");
    WitnessBounds b;
    if (n <= kExhaustiveWitnessColumns) {
        b.method = "exhaustive";
        for (long long mask = 0; mask < (1LL << n); ++mask) {
            std::vector<bool> x(n);
            for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1;
            WitnessSizes w = witness_sizes(p, x);
            if (w.w_plus && *w.w_plus > b.w_plus) b.w_plus = *w.w_plus;
            if (w.w_minus && *w.w_minus > b.w_minus) b.w_minus = *w.w_minus;
            ++b.instances;
        }
        return b;
    }
    QMatrix full = column_matrix(p, p.all_ones());
    int r = rank(full);
    if (r == n) {
        // Unique flow: every positive input contains its support.
        b.method = "structural";
        auto f = solve_any(full, p.tau_vec);
        b.w_plus = positive_size(p, p.all_ones());
        for (int i = 0; i < n; ++i) {
            if ((*f)[i] == 0) continue;
            std::vector<bool> x = p.all_ones();
            x[i] = false;
            Q w = negative_size(p, x);
            if (w > b.w_minus) b.w_minus = w;
            ++b.instances;
        }
        return b;
    }
    for (const auto& c : p.columns)
        for (const auto& [row, v] : c.entries)
            if (c.weight != 1 || (v != 1 && v != -1 && c.simplex.size() > 0))
                throw ResourceError("witness bounds: Cramer bounds need an unweighted program");
    b.method = "cramer";
    std::vector<Z> t = clear_denominators(p.tau_vec);
    Q scale;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (p.tau_vec[i] != 0) {
            scale = Q(t[i]) / p.tau_vec[i];
            break;
        }
    Q tn = 0;
    for (const Z& z : t) tn += Q(z * z);
    Q col = p.d + 1;
    for (const auto& c : p.columns) {
        Q s = 0;
        for (const auto& [row, v] : c.entries) s += v * v;
        if (s > col) col = s;
    }
    b.w_plus = Q(r) * qpow(col, r - 1) * tn / (scale * scale);
    b.w_minus = Q(n) * col * Q(r + 1) * qpow(col, r) * scale * scale;
    return b;
}

InitialState prepare_initial_state(const SimplicialComplex& k, const Chain& gamma)
{
    SpanProgram p = build_span_program(k, gamma);
    if (!p.evaluate(p.all_ones())) throw DomainError("initial state: gamma does not bound in K");
    SpanProgram aug = with_virtual_column(p);
    InitialState s;
    QMatrix g = gram(p, p.all_ones());
    QMatrix ga = gram(aug, aug.all_ones());
    auto z0 = solve_any(g, p.tau_vec);
    auto z1 = solve_any(ga, p.tau_vec);
    if (!z0 || !z1) throw NumericError("initial state: Laplacian system inconsistent");
    s.resistance = dot(p.tau_vec, *z0);
    s.augmented_norm2 = dot(aug.tau_vec, *z1);
    s.formula_norm2 = s.resistance / (s.resistance + 1);
    s.empty_component = dot(p.tau_vec, *z1);
    Q cross = dot(*z1, multiply(g, *z0));
    s.overlap2 = cross * cross / (s.resistance * s.augmented_norm2);

    Eigen::MatrixXd a = p.a_matrix();
    Eigen::VectorXd t(static_cast<int>(p.tau_vec.size()));
    for (int i = 0; i < t.size(); ++i) t(i) = to_double(p.tau_vec[i]);
    s.w0 = a.completeOrthogonalDecomposition().solve(t);

    s.rounds_outer = amplification_rounds(std::sqrt(to_double(s.augmented_norm2)));
    s.rounds_inner = amplification_rounds(std::sqrt(to_double(s.overlap2)));
    s.rounds = s.rounds_outer * s.rounds_inner;
    double r = to_double(s.resistance);
    s.bound = std::sqrt(r) + std::sqrt(1.0 / r);
    return s;
}

long long QueryModel::superposition_queries(long long m) { return ceil_sqrt(std::max(1LL, m)); }

OracleModels::OracleModels(const SimplicialComplex& k, int d) : k_(&k), d_(d)
{
    if (d < 1 || d > k.dim()) throw DomainError("oracle models: dimension out of range");
    for (const Simplex& s : k.simplices(d - 1)) cofaces_[s];
    for (const Simplex& t : k.simplices(d))
        for (const auto& [face, sign] : signed_facets(t)) cofaces_[face].push_back(t);
    for (const auto& [s, c] : cofaces_) d_max_ = std::max(d_max_, static_cast<int>(c.size()));
}

Simplex OracleModels::list(int i)
{
    ++tally.list;
    const auto& top = k_->simplices(d_);
    if (i < 0 || i >= static_cast<int>(top.size())) return {};
    return top[i];
}

bool OracleModels::member(const Simplex& s)
{
    ++tally.member;
    return k_->contains(s);
}

std::pair<Simplex, int> OracleModels::down_incidence(const Simplex& tau, int j)
{
    ++tally.down;
    if (j < 0 || j >= static_cast<int>(tau.size())) throw DomainError("down incidence: index out of range");
    Simplex face = tau;
    face.erase(face.begin() + j);
    return {face, j % 2 == 0 ? 1 : -1};
}

std::optional<Simplex> OracleModels::up_incidence(const Simplex& sigma, int j)
{
    ++tally.up;
    auto it = cofaces_.find(sigma);
    if (it == cofaces_.end() || j < 0 || j >= static_cast<int>(it->second.size())) return std::nullopt;
    return it->second[j];
}

long long OracleModels::charge_ub()
{
    long long c = QueryModel::superposition_queries(d_ + 1);
    tally.down += c;
    return c;
}

long long OracleModels::charge_uc()
{
    long long c = QueryModel::superposition_queries(d_max_);
    tally.up += c;
    return c;
}

double fejer(long long t, double phi)
{
    double x = std::remainder(phi, 2 * M_PI) / 2;
    double den = static_cast<double>(t) * std::sin(x);
    if (std::abs(den) < 1e-300 || std::abs(x) * static_cast<double>(t) < 1e-8) return 1.0;
    double num = std::sin(static_cast<double>(t) * x);
    return std::min(1.0, num * num / (den * den));
}

EvaluationResult simulate_evaluation(const SpanProgram& p, const std::vector<bool>& x, double error_budget,
                                     std::uint64_t seed, const std::optional<WitnessBounds>& bounds)
{
    check_mask(p, x);
    if (!(error_budget > 0 && error_budget < 1)) throw DomainError("error budget must lie in (0, 1)");
    EvaluationResult res;
    res.bounds = bounds ? *bounds : witness_bounds(p);
    double wp = to_double(res.bounds.w_plus), wm = to_double(res.bounds.w_minus);

    Eigen::MatrixXd a = p.a_matrix();
    int n = p.size();
    Eigen::VectorXd t(a.rows());
    for (int i = 0; i < t.size(); ++i) t(i) = to_double(p.tau_vec[i]);
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(a);
    Eigen::VectorXd w0 = cod.solve(t);
    double w0n2 = w0.squaredNorm();
    if ((a * w0 - t).norm() > 1e-8 * std::max(1.0, t.norm())) throw DomainError("target outside the span of A");

    double prec = kPhasePrecisionConstant * std::sqrt(std::max(1.0, wp * wm));
    if (!(prec < kMaxPhaseLength)) throw ResourceError("phase estimation length exceeds the simulator cap");
    res.t = 1LL << std::max(1, static_cast<int>(std::ceil(std::log2(prec))));
    if (static_cast<double>(res.t) > kMaxPhaseLength)
        throw ResourceError("phase estimation length exceeds the simulator cap");

    Eigen::MatrixXd proj = Eigen::MatrixXd::Identity(n, n) - cod.pseudoInverse() * a;
    Eigen::MatrixXd rk = 2 * proj - Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd u = rk;
    for (int i = 0; i < n; ++i)
        if (!x[i]) u.row(i) *= -1;
    Eigen::ComplexSchur<Eigen::MatrixXcd> schur(u.cast<std::complex<double>>());
    Eigen::VectorXcd state = (w0 / std::sqrt(w0n2)).cast<std::complex<double>>();
    Eigen::VectorXcd coeff = schur.matrixU().adjoint() * state;
    for (int k = 0; k < n; ++k) {
        double phi = std::arg(schur.matrixT()(k, k));
        res.p0 += std::norm(coeff(k)) * fejer(res.t, phi);
    }
    res.p0 = std::min(1.0, std::max(0.0, res.p0));
    res.p_star = 1.0 / (wm * w0n2);
    res.threshold = res.p_star / 2;

    double margin = res.p_star / 4;
    double shots = std::ceil(std::log(1.0 / error_budget) / (2 * margin * margin));
    if (shots > 1e15) throw ResourceError("shot count exceeds the simulator cap");
    res.shots = static_cast<long long>(shots);
    std::mt19937_64 rng(seed);
    std::binomial_distribution<long long> draw(res.shots, res.p0);
    res.zero_outcomes = draw(rng);
    res.decision = static_cast<double>(res.zero_outcomes) < res.threshold * static_cast<double>(res.shots);

    res.u_applications_per_shot = res.t - 1;
    res.oracle_queries_per_shot = QueryModel::per_reflection_input_queries() * (res.t - 1);
    // Walk cost of R_{ker A} from the normalized Laplacian of A A^T.
    Eigen::MatrixXd g = a * a.transpose();
    std::vector<int> live;
    int dmax = 0;
    for (int r = 0; r < g.rows(); ++r) {
        if (g(r, r) > 0) live.push_back(r);
        int c = 0;
        for (int j = 0; j < n; ++j) c += a(r, j) != 0;
        dmax = std::max(dmax, c);
    }
    Eigen::MatrixXd nl(live.size(), live.size());
    for (std::size_t i = 0; i < live.size(); ++i)
        for (std::size_t j = 0; j < live.size(); ++j)
            nl(i, j) = g(live[i], live[j]) / std::sqrt(g(live[i], live[i]) * g(live[j], live[j]));
    SpectralReport sp = spectrum(nl);
    double lmin = sp.has_gap ? sp.gap : 1.0;
    res.phase_gap = 2 * std::sqrt(lmin / (p.d + 1));
    res.walk_steps_per_reflection = static_cast<long long>(std::ceil(M_PI / res.phase_gap));
    res.incidence_queries_per_u = res.walk_steps_per_reflection * (QueryModel::superposition_queries(p.d + 1) +
                                                                   QueryModel::superposition_queries(dmax));
    res.oracle_queries_total = shots * static_cast<double>(res.oracle_queries_per_shot);
    res.incidence_queries_total =
        shots * static_cast<double>(res.u_applications_per_shot) * static_cast<double>(res.incidence_queries_per_u);
    res.qubits = static_cast<int>(std::ceil(std::log2(std::max<double>(2, static_cast<double>(a.rows()) * n)))) +
                 static_cast<int>(std::log2(static_cast<double>(res.t))) + 1;
    return res;
}

NullHomologyTester span_sim_tester(double error_budget, std::uint64_t seed)
{
    return {"span-sim", [error_budget, seed](const SimplicialComplex& prefix, const Chain& gamma) {
                SpanProgram p = with_virtual_column(program_over(prefix, gamma.dim + 1, gamma));
                std::vector<bool> x = p.all_ones();
                x.back() = false;
                EvaluationResult r = simulate_evaluation(p, x, error_budget, seed);
                double q = std::min(r.oracle_queries_total, 9.0e18);
                return TesterOutcome{r.decision, static_cast<long long>(q)};
            }};
}

}  // namespace homolab
