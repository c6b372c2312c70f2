#include "envwit/linalg.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace envwit {

namespace {

constexpr Complex kI{0.0, 1.0};

Mat2 make_pauli(int axis) {
  Mat2 m;
  switch (axis) {
    case 0:
      m << 1, 0, 0, 1;
      break;
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, -kI, kI, 0;
      break;
    case 3:
      m << 1, 0, 0, -1;
      break;
    default:
      throw std::invalid_argument("pauli: axis must be 0..3");
  }
  return m;
}

double hermiticity_defect(const Eigen::Ref<const Eigen::MatrixXcd>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

std::string format_violation(const char* what, double measured, double tol) {
  std::ostringstream os;
  os << what << " (deviation " << measured << ", tolerance " << tol << ")";
  return os.str();
}

DensityVerdict check_density(const Eigen::Ref<const Eigen::MatrixXcd>& rho,
                             double min_eig, double psd_tol, double herm_tol,
                             double trace_tol) {
  DensityVerdict v;
  const double herm = hermiticity_defect(rho);
  if (herm > herm_tol) {
    v.valid = false;
    v.violation = format_violation("not Hermitian", herm, herm_tol);
    return v;
  }
  const double trace_err = std::abs(rho.trace() - Complex{1.0, 0.0});
  if (trace_err > trace_tol) {
    v.valid = false;
    v.violation = format_violation("trace differs from 1", trace_err, trace_tol);
    return v;
  }
  if (min_eig < -psd_tol) {
    v.valid = false;
    v.violation = format_violation("negative eigenvalue", min_eig, psd_tol);
    return v;
  }
  return v;
}

}  // namespace

const Mat2& pauli(int axis) {
  static const Mat2 table[4] = {make_pauli(0), make_pauli(1), make_pauli(2),
                                make_pauli(3)};
  if (axis < 0 || axis > 3) throw std::invalid_argument("pauli: axis must be 0..3");
  return table[axis];
}

const Mat2& identity2() { return pauli(0); }
const Mat2& sigma_x() { return pauli(1); }
const Mat2& sigma_y() { return pauli(2); }
const Mat2& sigma_z() { return pauli(3); }

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Mat2 partial_trace_env(const Mat4& rho_se) {
  Mat2 out = Mat2::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out(i, j) = rho_se(2 * i, 2 * j) + rho_se(2 * i + 1, 2 * j + 1);
  return out;
}

Mat2 density_from_bloch(const Vec3& v, double tol) {
  const double n = v.norm();
  if (!(n <= 1.0 + tol)) {
    std::ostringstream os;
    os << "density_from_bloch: Bloch vector norm " << n << " exceeds 1";
    throw std::invalid_argument(os.str());
  }
  Mat2 rho;
  rho << Complex{1.0 + v.z(), 0.0}, Complex{v.x(), -v.y()},
      Complex{v.x(), v.y()}, Complex{1.0 - v.z(), 0.0};
  return 0.5 * rho;
}

Vec3 bloch_from_density(const Mat2& rho, double herm_tol, double trace_tol) {
  const double herm = hermiticity_defect(rho);
  if (herm > herm_tol)
    throw std::invalid_argument(
        "bloch_from_density: " + format_violation("not Hermitian", herm, herm_tol));
  const double trace_err = std::abs(rho.trace() - Complex{1.0, 0.0});
  if (trace_err > trace_tol)
    throw std::invalid_argument(
        "bloch_from_density: " +
        format_violation("trace differs from 1", trace_err, trace_tol));
  Vec3 v;
  for (int j = 0; j < 3; ++j) v[j] = (rho * pauli(j + 1)).trace().real();
  return v;
}

DensityVerdict is_valid_density(const Mat2& rho, double psd_tol, double herm_tol,
                                double trace_tol) {
  // Closed-form spectrum of a 2x2 Hermitian matrix: tr/2 +- sqrt((tr/2)^2 - det).
  const double half_tr = 0.5 * rho.trace().real();
  const double det = rho.determinant().real();
  const double disc = std::sqrt(std::max(0.0, half_tr * half_tr - det));
  const double min_eig = half_tr - disc;
  return check_density(rho, min_eig, psd_tol, herm_tol, trace_tol);
}

DensityVerdict is_valid_density(const Mat4& rho, double psd_tol, double herm_tol,
                                double trace_tol) {
  const double herm = hermiticity_defect(rho);
  if (herm > herm_tol) {
    DensityVerdict v;
    v.valid = false;
    v.violation = format_violation("not Hermitian", herm, herm_tol);
    return v;
  }
  Eigen::SelfAdjointEigenSolver<Mat4> es(rho, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  return check_density(rho, min_eig, psd_tol, herm_tol, trace_tol);
}

JointState joint_decompose(const Mat4& rho_se, double psd_tol) {
  const DensityVerdict verdict = is_valid_density(rho_se, psd_tol);
  if (!verdict)
    throw std::invalid_argument("joint_decompose: invalid density matrix: " +
                                verdict.violation);
  JointState st;
  st.rho = rho_se;
  for (int j = 0; j < 3; ++j) {
    st.s[j] = (rho_se * kron(pauli(j + 1), identity2())).trace().real();
    st.e[j] = (rho_se * kron(identity2(), pauli(j + 1))).trace().real();
    for (int k = 0; k < 3; ++k)
      st.tensor.C(j, k) = (rho_se * kron(pauli(j + 1), pauli(k + 1))).trace().real();
  }
  st.tensor.T = st.tensor.C - st.s * st.e.transpose();
  return st;
}

Mat4 joint_from_parts(const Vec3& s, const Vec3& e, const Mat3& C) {
  Mat4 rho = Mat4::Identity();
  for (int j = 0; j < 3; ++j) {
    rho += s[j] * kron(pauli(j + 1), identity2());
    rho += e[j] * kron(identity2(), pauli(j + 1));
    for (int k = 0; k < 3; ++k) rho += C(j, k) * kron(pauli(j + 1), pauli(k + 1));
  }
  return 0.25 * rho;
}

Mat4 product_joint(const Vec3& s, const Vec3& e) {
  return kron(density_from_bloch(s), density_from_bloch(e));
}

}  // namespace envwit
