#include "homolab/spectra.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace homolab {

std::string to_string(LaplacianKind k)
{
    switch (k) {
    case LaplacianKind::Up: return "up";
    case LaplacianKind::Down: return "down";
    case LaplacianKind::Combinatorial: return "combinatorial";
    case LaplacianKind::WeightedUp: return "weighted-up";
    case LaplacianKind::NormalizedUp: return "normalized-up";
    }
    return "?";
}

LaplacianKind parse_laplacian_kind(const std::string& s)
{
    if (s == "up") return LaplacianKind::Up;
    if (s == "down") return LaplacianKind::Down;
    if (s == "combinatorial") return LaplacianKind::Combinatorial;
    if (s == "weighted-up") return LaplacianKind::WeightedUp;
    if (s == "normalized-up") return LaplacianKind::NormalizedUp;
    throw MalformedInputError("unknown Laplacian kind: " + s);
}

namespace {

Eigen::MatrixXd up_part(const SimplicialComplex& k, int d, bool weighted)
{
    BoundaryOperator b = boundary_operator(k, d + 1);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(b.rows(), b.rows());
    for (int c = 0; c < b.cols(); ++c) {
        double w = weighted ? to_double(k.weight(b.col_simplices[c])) : 1.0;
        for (const auto& [r1, s1] : b.columns[c])
            for (const auto& [r2, s2] : b.columns[c]) m(r1, r2) += w * s1 * s2;
    }
    return m;
}

Eigen::MatrixXd down_part(const SimplicialComplex& k, int d)
{
    BoundaryOperator b = boundary_operator(k, d);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(b.cols(), b.cols());
    std::vector<std::vector<std::pair<int, int>>> rows(b.rows());
    for (int c = 0; c < b.cols(); ++c)
        for (const auto& [r, s] : b.columns[c]) rows[r].emplace_back(c, s);
    for (const auto& row : rows)
        for (const auto& [c1, s1] : row)
            for (const auto& [c2, s2] : row) m(c1, c2) += s1 * s2;
    return m;
}

}  // namespace

LaplacianMatrix laplacian(const SimplicialComplex& k, int d, LaplacianKind kind, bool exclude_zero_degree)
{
    if (d < 0) throw DomainError("Laplacian dimension must be non-negative");
    if (static_cast<int>(k.count(d)) > kSpectralCap)
        throw ResourceError("Laplacian size " + std::to_string(k.count(d)) + " exceeds the dense cap");
    LaplacianMatrix out;
    out.kind = kind;
    out.d = d;
    out.basis = k.simplices(d);
    switch (kind) {
    case LaplacianKind::Up: out.matrix = up_part(k, d, false); break;
    case LaplacianKind::WeightedUp: out.matrix = up_part(k, d, true); break;
    case LaplacianKind::Down:
        if (d < 1) throw DomainError("down Laplacian requires d >= 1");
        out.matrix = down_part(k, d);
        break;
    case LaplacianKind::Combinatorial:
        out.matrix = up_part(k, d, false);
        if (d >= 1) out.matrix += down_part(k, d);
        break;
    case LaplacianKind::NormalizedUp: {
        Eigen::MatrixXd up = up_part(k, d, true);
        std::vector<double> deg(out.basis.size(), 0.0);
        for (const Simplex& t : k.simplices(d + 1)) {
            double w = to_double(k.weight(t));
            for (const auto& [f, sg] : signed_facets(t)) deg[k.index_of(f)] += w;
        }
        std::vector<int> keep;
        for (std::size_t i = 0; i < deg.size(); ++i) {
            if (deg[i] > 0)
                keep.push_back(static_cast<int>(i));
            else if (!exclude_zero_degree)
                throw DomainError("zero-degree simplex " + simplex_key(out.basis[i]) + " in normalized Laplacian");
            else
                out.excluded.push_back(out.basis[i]);
        }
        Eigen::MatrixXd m(keep.size(), keep.size());
        std::vector<Simplex> basis;
        for (std::size_t a = 0; a < keep.size(); ++a) {
            basis.push_back(out.basis[keep[a]]);
            out.degrees.push_back(deg[keep[a]]);
            for (std::size_t b = 0; b < keep.size(); ++b)
                m(a, b) = up(keep[a], keep[b]) / std::sqrt(deg[keep[a]] * deg[keep[b]]);
        }
        out.basis = basis;
        out.matrix = m;
        break;
    }
    }
    return out;
}

SpectralReport spectrum(const Eigen::MatrixXd& m, double zero_tol)
{
    SpectralReport r;
    if (m.rows() != m.cols()) throw DomainError("spectrum of a non-square matrix");
    if (m.rows() > kSpectralCap) throw ResourceError("matrix exceeds the dense eigensolver cap");
    if (!m.allFinite()) throw NumericError("matrix has non-finite entries");
    if (m.rows() == 0) {
        r.zero_threshold = zero_tol;
        return r;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    if (es.info() != Eigen::Success)
        throw NumericError("eigensolver did not converge (size " + std::to_string(m.rows()) + ")");
    const Eigen::VectorXd& ev = es.eigenvalues();
    r.eigenvalues.assign(ev.data(), ev.data() + ev.size());
    r.lambda_max = r.eigenvalues.back();
    r.zero_threshold = zero_tol * std::max(1.0, std::abs(r.lambda_max));
    for (double x : r.eigenvalues) {
        if (x <= r.zero_threshold) {
            ++r.harmonic_dim;
        } else if (!r.has_gap) {
            r.has_gap = true;
            r.gap = x;
        }
        if (x > r.zero_threshold / 10 && x < r.zero_threshold * 10) r.ill_conditioned = true;
    }
    double res = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        Eigen::VectorXd v = es.eigenvectors().col(i);
        res = std::max(res, (m * v - ev[i] * v).norm());
    }
    r.max_residual = res;
    return r;
}

SpectralReport spectrum(const LaplacianMatrix& m, double zero_tol)
{
    SpectralReport r = spectrum(m.matrix, zero_tol);
    if (m.kind == LaplacianKind::Combinatorial) r.betti = r.harmonic_dim;
    return r;
}

int betti_via_hodge(const SimplicialComplex& k, int d, double zero_tol)
{
    if (d < 0 || d > k.dim()) throw DomainError("betti_via_hodge: dimension out of range");
    return *spectrum(laplacian(k, d, LaplacianKind::Combinatorial), zero_tol).betti;
}

ExtremalCycle extremal_boundary_cycle(const SimplicialComplex& k, int d, double zero_tol)
{
    LaplacianMatrix lap = laplacian(k, d, LaplacianKind::Up);
    if (lap.matrix.rows() == 0) throw DomainError("no simplices in the requested dimension");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap.matrix);
    if (es.info() != Eigen::Success) throw NumericError("eigensolver did not converge");
    const Eigen::VectorXd& ev = es.eigenvalues();
    double thr = zero_tol * std::max(1.0, std::abs(ev[ev.size() - 1]));
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (ev[i] > thr) {
            ExtremalCycle out;
            out.lambda_min = ev[i];
            out.cycle = from_eigen(es.eigenvectors().col(i), lap.basis, d);
            return out;
        }
    throw DomainError("up Laplacian has no nonzero eigenvalue");
}

std::vector<double> nonzero_part(const SpectralReport& r)
{
    std::vector<double> out;
    for (double x : r.eigenvalues)
        if (x > r.zero_threshold) out.push_back(x);
    return out;
}

bool spectra_match(const std::vector<double>& a, const std::vector<double>& b, double tol)
{
    if (a.size() != b.size()) return false;
    double scale = 1.0;
    for (double x : a) scale = std::max(scale, std::abs(x));
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol * scale) return false;
    return true;
}

VerificationReport verify_spectrum_identities(const SimplicialComplex& k, int d, double tol)
{
    VerificationReport rep;
    auto fmt = [](double x) {
        std::ostringstream os;
        os.precision(12);
        os << x;
        return os.str();
    };

    SpectralReport up = spectrum(laplacian(k, d, LaplacianKind::Up));
    SpectralReport down_next = spectrum(laplacian(k, d + 1, LaplacianKind::Down));
    {
        auto a = nonzero_part(up), b = nonzero_part(down_next);
        rep.add("up-down nonzero spectra", spectra_match(a, b, tol),
                std::to_string(a.size()) + " vs " + std::to_string(b.size()) + " nonzero eigenvalues");
    }

    SpectralReport comb = spectrum(laplacian(k, d, LaplacianKind::Combinatorial));
    {
        std::vector<double> merged;
        for (const SimplicialComplex& c : connected_components(k)) {
            if (d > c.dim()) continue;
            auto s = spectrum(laplacian(c, d, LaplacianKind::Combinatorial)).eigenvalues;
            merged.insert(merged.end(), s.begin(), s.end());
        }
        std::sort(merged.begin(), merged.end());
        rep.add("component union", spectra_match(comb.eigenvalues, merged, tol),
                std::to_string(merged.size()) + " eigenvalues merged");
    }

    {
        std::optional<double> g;
        if (up.has_gap) g = up.gap;
        if (d >= 1) {
            SpectralReport down = spectrum(laplacian(k, d, LaplacianKind::Down));
            if (down.has_gap) g = g ? std::min(*g, down.gap) : down.gap;
        }
        bool ok = (!g && !comb.has_gap) ||
                  (g && comb.has_gap && std::abs(*g - comb.gap) <= tol * std::max(1.0, comb.lambda_max));
        rep.add("combinatorial gap is min(up, down)", ok,
                comb.has_gap ? "gap " + fmt(comb.gap) : std::string("no gap"));
    }

    {
        SpectralReport wup = spectrum(laplacian(k, d, LaplacianKind::WeightedUp));
        LaplacianMatrix nl = laplacian(k, d, LaplacianKind::NormalizedUp, true);
        SpectralReport nup = spectrum(nl);
        if (!wup.has_gap || nl.degrees.empty()) {
            rep.add("normalized gap sandwich", true, "skipped: no up-Laplacian gap");
        } else {
            double dmin = *std::min_element(nl.degrees.begin(), nl.degrees.end());
            double dmax = *std::max_element(nl.degrees.begin(), nl.degrees.end());
            double lo = wup.gap / dmax, hi = wup.gap / dmin;
            double slack = tol * std::max(1.0, wup.lambda_max);
            bool ok = nup.has_gap && nup.gap >= lo - slack && nup.gap <= hi + slack;
            rep.add("normalized gap sandwich", ok,
                    fmt(lo) + " <= " + fmt(nup.gap) + " <= " + fmt(hi));
        }
        if (!nup.eigenvalues.empty())
            rep.add("normalized eigenvalues <= d+2", nup.lambda_max <= d + 2 + tol, "max " + fmt(nup.lambda_max));
    }

    if (k.is_unweighted()) {
        double n0 = static_cast<double>(k.count(0));
        rep.add("lambda_max <= n_0", comb.eigenvalues.empty() || comb.lambda_max <= n0 + tol * n0,
                "lambda_max " + fmt(comb.lambda_max) + ", n_0 " + fmt(n0));
    }

    {
        double lim = -1e-9 * std::max(1.0, comb.lambda_max);
        bool psd = comb.eigenvalues.empty() || comb.eigenvalues.front() >= lim;
        rep.add("positive semidefinite", psd);
        double mnorm = std::max(1.0, comb.lambda_max);
        rep.add("eigenvector residual", comb.max_residual <= 1e-8 * mnorm, "max residual " + fmt(comb.max_residual));
    }
    return rep;
}

}  // namespace homolab
