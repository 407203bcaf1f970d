#include "frpr/rank1.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "frpr/error.hpp"

namespace frpr {

void normalise_phase(CVec& v) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < v.size(); ++k) if (std::abs(v[k]) > std::abs(v[best])) best = k;
    if (v.empty() || std::abs(v[best]) == 0.0) return;
    const cplx rot = std::conj(v[best]) / std::abs(v[best]);
    for (auto& z : v) z *= rot;
}

RankOneFactor rank_one_factor(const CVec& hermitian, std::size_t n) {
    if (hermitian.size() != n * n || n == 0) throw Error(ErrorKind::InvalidInput, "rank-one factor needs an n x n matrix");
    const auto N = static_cast<Eigen::Index>(n);
    Eigen::MatrixXcd m(N, N);
    for (Eigen::Index r = 0; r < N; ++r) {
        for (Eigen::Index c = 0; c < N; ++c) {
            // symmetrise against round-off in the inputs
            m(r, c) = 0.5 * (hermitian[r * n + c] + std::conj(hermitian[c * n + r]));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    if (es.info() != Eigen::Success) throw Error(ErrorKind::Numerical, "Hermitian eigensolver failed");
    // eigenvalues ascending; u u^* is positive semidefinite, so the top one is taken
    const auto& ev = es.eigenvalues();
    const Eigen::Index top = N - 1;
    RankOneFactor f;
    f.lambda1 = ev(top);
    double second = 0.0;
    for (Eigen::Index k = 0; k < N; ++k) if (k != top) second = std::max(second, std::abs(ev(k)));
    f.lambda2 = second;
    const double s = std::sqrt(std::max(0.0, f.lambda1));
    f.vector.resize(n);
    for (Eigen::Index k = 0; k < N; ++k) f.vector[k] = s * es.eigenvectors()(k, top);
    normalise_phase(f.vector);
    return f;
}

}  // namespace frpr
