#include "homolab/szegedy.hpp"

#include "homolab/linalg.hpp"
#include "homolab/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace homolab {

namespace {

constexpr double kUnitTol = 1e-9;
constexpr double kPhaseTol = 1e-9;

std::vector<double> degrees(const SimplicialComplex& k, int d, const std::vector<Simplex>& rows)
{
    std::vector<double> deg(rows.size(), 0.0);
    for (const Simplex& t : k.simplices(d))
        for (const auto& [f, sg] : signed_facets(t)) deg[k.index_of(f)] += to_double(k.weight(t));
    return deg;
}

/// Orthonormal basis of the column span (Gram eigenvectors above threshold).
Eigen::MatrixXd span_basis(const Eigen::MatrixXd& m)
{
    if (m.cols() == 0) return Eigen::MatrixXd(m.rows(), 0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.transpose() * m);
    std::vector<int> keep;
    double top = std::max(1.0, es.eigenvalues().maxCoeff());
    for (int i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()(i) > 1e-10 * top) keep.push_back(i);
    Eigen::MatrixXd out(m.rows(), static_cast<int>(keep.size()));
    for (std::size_t j = 0; j < keep.size(); ++j)
        out.col(j) = m * es.eigenvectors().col(keep[j]) / std::sqrt(es.eigenvalues()(keep[j]));
    return out;
}

Eigen::MatrixXd select_cols(const Eigen::MatrixXd& m, const std::vector<int>& idx)
{
    Eigen::MatrixXd out(m.rows(), static_cast<int>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j) out.col(j) = m.col(idx[j]);
    return out;
}

double wrap(double phi)
{
    if (phi <= -M_PI + kPhaseTol) phi += 2 * M_PI;
    return phi;
}

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

}  // namespace

SzegedyWorkspace build_szegedy(const SimplicialComplex& k, int d)
{
    if (d < 1 || d > k.dim()) throw DomainError("szegedy: dimension out of range");
    SzegedyWorkspace ws;
    ws.d = d;
    ws.rows = k.simplices(d - 1);
    ws.cols = k.simplices(d);
    long long nr = static_cast<long long>(ws.rows.size()), nc = static_cast<long long>(ws.cols.size());
    ws.product_dim = nr * nc;
    if (ws.product_dim > kSzegedyProductCap)
        throw ResourceError("szegedy: product dimension " + std::to_string(ws.product_dim) + " exceeds " +
                            std::to_string(kSzegedyProductCap));
    int n = static_cast<int>(ws.product_dim);
    auto at = [&](int r, int c) { return r * static_cast<int>(nc) + c; };

    ws.mb = Eigen::MatrixXd::Zero(n, nc);
    double inv = 1.0 / std::sqrt(static_cast<double>(d + 1));
    for (int c = 0; c < nc; ++c)
        for (const auto& [f, sg] : signed_facets(ws.cols[c])) ws.mb(at(k.index_of(f), c), c) = sg * inv;

    std::vector<double> deg = degrees(k, d, ws.rows);
    std::vector<int> live;
    for (int r = 0; r < nr; ++r) {
        if (deg[r] > 0)
            live.push_back(r);
        else
            ws.excluded.push_back(ws.rows[r]);
    }
    ws.mc = Eigen::MatrixXd::Zero(n, static_cast<int>(live.size()));
    for (int c = 0; c < nc; ++c) {
        double w = to_double(k.weight(ws.cols[c]));
        for (const auto& [f, sg] : signed_facets(ws.cols[c])) {
            int r = k.index_of(f);
            int j = static_cast<int>(std::lower_bound(live.begin(), live.end(), r) - live.begin());
            ws.mc(at(r, c), j) = std::sqrt(w / deg[r]);
        }
    }

    Eigen::MatrixXd both(n, ws.mb.cols() + ws.mc.cols());
    both << ws.mb, ws.mc;
    ws.basis = span_basis(both);
    Eigen::MatrixXd x = 2 * ws.mb * (ws.mb.transpose() * ws.basis) - ws.basis;
    Eigen::MatrixXd y = 2 * ws.mc * (ws.mc.transpose() * x) - x;
    ws.u_restricted = ws.basis.transpose() * y;

    int r = static_cast<int>(ws.basis.cols());
    ws.eigphases.resize(r);
    if (r > 0) {
        Eigen::ComplexSchur<Eigen::MatrixXcd> schur(ws.u_restricted.cast<std::complex<double>>());
        ws.eigvecs = schur.matrixU();
        for (int i = 0; i < r; ++i) ws.eigphases(i) = wrap(std::arg(schur.matrixT()(i, i)));
    }
    ws.phases.assign(ws.eigphases.data(), ws.eigphases.data() + r);
    ws.phases.insert(ws.phases.end(), static_cast<std::size_t>(n - r), 0.0);
    std::sort(ws.phases.begin(), ws.phases.end());
    ws.qubits = static_cast<int>(std::ceil(std::log2(std::max(2, n))));
    return ws;
}

Eigen::MatrixXd discriminant_closed_form(const SimplicialComplex& k, int d)
{
    BoundaryOperator b = boundary_operator(k, d);
    std::vector<double> deg = degrees(k, d, b.row_simplices);
    std::vector<int> live;
    for (int r = 0; r < b.rows(); ++r)
        if (deg[r] > 0) live.push_back(r);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<int>(live.size()), b.cols());
    double inv = 1.0 / std::sqrt(static_cast<double>(d + 1));
    for (int c = 0; c < b.cols(); ++c) {
        double sw = std::sqrt(to_double(k.weight(b.col_simplices[c])));
        for (const auto& [r, s] : b.columns[c]) {
            int j = static_cast<int>(std::lower_bound(live.begin(), live.end(), r) - live.begin());
            m(j, c) = inv * s * sw / std::sqrt(deg[r]);
        }
    }
    return m;
}

PhaseGapReport szegedy_phase_gap(const SimplicialComplex& k, int d)
{
    SzegedyWorkspace ws = build_szegedy(k, d);
    PhaseGapReport g;
    g.phase_gap = M_PI;
    for (double phi : ws.phases)
        if (std::abs(phi - M_PI) > kPhaseTol) g.phase_gap = std::min(g.phase_gap, M_PI - std::abs(phi));
    Eigen::MatrixXd disc = ws.mc.transpose() * ws.mb;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(disc);
    g.sigma_min = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i) {
        double s = svd.singularValues()(i);
        if (s > kUnitTol) g.sigma_min = s;
    }
    SpectralReport sp = spectrum(laplacian(k, d - 1, LaplacianKind::NormalizedUp));
    g.lambda_min = sp.has_gap ? sp.gap : 0.0;
    g.bound = 2 * std::sqrt(g.lambda_min / (d + 1));
    return g;
}

VerificationReport verify_szegedy(const SimplicialComplex& k, int d, double tol)
{
    VerificationReport rep;
    SzegedyWorkspace ws = build_szegedy(k, d);
    int nb = static_cast<int>(ws.mb.cols()), ncc = static_cast<int>(ws.mc.cols());
    int n = static_cast<int>(ws.product_dim);

    double iso = std::max((ws.mb.transpose() * ws.mb - Eigen::MatrixXd::Identity(nb, nb)).cwiseAbs().maxCoeff(),
                          ncc ? (ws.mc.transpose() * ws.mc - Eigen::MatrixXd::Identity(ncc, ncc)).cwiseAbs().maxCoeff()
                              : 0.0);
    rep.add("isometries", iso <= tol, "max deviation " + fmt(iso));

    Eigen::MatrixXd disc = ws.mc.transpose() * ws.mb;
    double cf = (disc - discriminant_closed_form(k, d)).cwiseAbs().maxCoeff();
    rep.add("discriminant closed form", cf <= tol, "max deviation " + fmt(cf));

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(disc, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::VectorXd s = svd.singularValues();
    int num_rank = 0, ones = 0;
    std::vector<double> middle;
    for (int i = 0; i < s.size(); ++i) {
        if (s(i) > kUnitTol) ++num_rank;
        if (s(i) >= 1 - kUnitTol)
            ++ones;
        else if (s(i) > kUnitTol)
            middle.push_back(s(i));
    }
    int exact_rank = rank(boundary_operator(k, d).to_z());
    rep.add("kernel dimension", nb - num_rank == nb - exact_rank,
            "dim ker M_C^T M_B = " + std::to_string(nb - num_rank) + ", dim ker d = " + std::to_string(nb - exact_rank));

    int dim_sum = nb + ncc - ones;
    std::vector<double> expected;
    expected.insert(expected.end(), static_cast<std::size_t>(ones + n - dim_sum), 0.0);
    expected.insert(expected.end(), static_cast<std::size_t>((nb - num_rank) + (ncc - num_rank)), M_PI);
    for (double m : middle) {
        expected.push_back(2 * std::acos(m));
        expected.push_back(-2 * std::acos(m));
    }
    std::sort(expected.begin(), expected.end());
    bool phases_ok = expected.size() == ws.phases.size();
    double worst = 0;
    for (std::size_t i = 0; phases_ok && i < expected.size(); ++i) worst = std::max(worst, std::abs(expected[i] - ws.phases[i]));
    phases_ok = phases_ok && worst <= kPhaseTol;
    rep.add("eigenphases", phases_ok, "max deviation " + fmt(worst));

    // Projectors in B + C coordinates.
    int r = static_cast<int>(ws.basis.cols());
    Eigen::MatrixXcd pplus = Eigen::MatrixXcd::Zero(r, r), pminus = Eigen::MatrixXcd::Zero(r, r);
    for (int i = 0; i < r; ++i) {
        Eigen::VectorXcd v = ws.eigvecs.col(i);
        if (std::abs(ws.eigphases(i)) <= kPhaseTol) pplus += v * v.adjoint();
        if (std::abs(ws.eigphases(i) - M_PI) <= kPhaseTol) pminus += v * v.adjoint();
    }
    Eigen::MatrixXd bcoord = ws.basis.transpose() * ws.mb, ccoord = ws.basis.transpose() * ws.mc;
    std::vector<int> one_idx, kerv, kerut;
    for (int i = 0; i < nb; ++i) {
        double si = i < s.size() ? s(i) : 0.0;
        if (si >= 1 - kUnitTol) one_idx.push_back(i);
        if (si <= kUnitTol) kerv.push_back(i);
    }
    for (int i = 0; i < ncc; ++i)
        if ((i < s.size() ? s(i) : 0.0) <= kUnitTol) kerut.push_back(i);
    Eigen::MatrixXd cap = bcoord * select_cols(svd.matrixV(), one_idx);
    Eigen::MatrixXd expect_plus = cap * cap.transpose();
    Eigen::MatrixXd anti(r, static_cast<int>(kerv.size() + kerut.size()));
    anti << bcoord * select_cols(svd.matrixV(), kerv), ccoord * select_cols(svd.matrixU(), kerut);
    Eigen::MatrixXd expect_minus = anti * anti.transpose();
    double dplus = (pplus - expect_plus.cast<std::complex<double>>()).norm();
    double dminus = (pminus - expect_minus.cast<std::complex<double>>()).norm();
    rep.add("+1 projector", dplus <= tol, "Frobenius deviation " + fmt(dplus));
    rep.add("-1 projector", dminus <= tol, "Frobenius deviation " + fmt(dminus));

    Eigen::MatrixXcd bc = bcoord.cast<std::complex<double>>();
    Eigen::MatrixXd v = (2.0 * bc.adjoint() * pminus * bc).real() - Eigen::MatrixXd::Identity(nb, nb);
    Eigen::MatrixXd a = boundary_operator(k, d).to_dense();
    for (int c = 0; c < nb; ++c) a.col(c) *= std::sqrt(to_double(k.weight(ws.cols[c])));
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(a);
    Eigen::MatrixXd pker = Eigen::MatrixXd::Identity(nb, nb) - cod.pseudoInverse() * a;
    double dv = (v - (2 * pker - Eigen::MatrixXd::Identity(nb, nb))).operatorNorm();
    rep.add("V equals R_ker", dv <= tol, "operator-norm deviation " + fmt(dv));

    PhaseGapReport g = szegedy_phase_gap(k, d);
    rep.add("phase gap", g.phase_gap >= g.bound - tol,
            "gap " + fmt(g.phase_gap) + " >= 2 sqrt(lambda/(d+1)) = " + fmt(g.bound));
    double sig = g.sigma_min * g.sigma_min * (d + 1);
    rep.add("singular value identity", std::abs(sig - g.lambda_min) <= tol * std::max(1.0, g.lambda_min),
            "sigma_min^2 (d+1) = " + fmt(sig) + ", lambda_min = " + fmt(g.lambda_min));
    return rep;
}

}  // namespace homolab
