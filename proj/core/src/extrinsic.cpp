#include "sjgeo/extrinsic.hpp"

#include <cmath>
#include <random>

namespace sjgeo {

namespace {

std::vector<cplx> shift_up(const std::vector<cplx>& p, int k, cplx scale) {
  std::vector<cplx> out(p.size() + k, cplx(0.0));
  for (size_t i = 0; i < p.size(); ++i) out[i + k] = scale * p[i];
  return out;
}

std::vector<cplx> derivative(const std::vector<cplx>& p) {
  if (p.size() <= 1) return {cplx(0.0)};
  std::vector<cplx> out(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) out[i - 1] = double(i) * p[i];
  return out;
}

std::vector<cplx> add(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  std::vector<cplx> out(std::max(a.size(), b.size()), cplx(0.0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

// d/dx (p w) = (p' + p (c1 + 2 c2 x)) w.
std::vector<cplx> d_dx(const std::vector<cplx>& p, const WaveFunction& w) {
  auto out = derivative(p);
  out = add(out, shift_up(p, 0, w.c1));
  out = add(out, shift_up(p, 1, 2.0 * w.c2));
  return out;
}

}  // namespace

WaveFunction psi_map(const TangentPoint& p) {
  const auto [z1, z2] = to_complex(p);
  return {cplx(-0.5 * potential(p.theta), 0.0), 0.5 * z1, 0.5 * z2};
}

cplx inner_product(const WaveFunction& w1, const WaveFunction& w2) {
  return complex_gaussian_integral(std::conj(w1.c2) + w2.c2,
                                   std::conj(w1.c1) + w2.c1,
                                   std::conj(w1.c0) + w2.c0);
}

cplx polywave_inner(const PolyWave& a, const PolyWave& b) {
  // conj(p_a)(x) p_b(x), x real.
  std::vector<cplx> prod(a.poly.size() + b.poly.size() - 1, cplx(0.0));
  for (size_t i = 0; i < a.poly.size(); ++i)
    for (size_t j = 0; j < b.poly.size(); ++j)
      prod[i + j] += std::conj(a.poly[i]) * b.poly[j];
  return gaussian_poly_integral(prod, std::conj(a.w.c2) + b.w.c2,
                                std::conj(a.w.c1) + b.w.c1,
                                std::conj(a.w.c0) + b.w.c0);
}

PolyWave psi_pushforward(const TangentPoint& p, const Vec4& a) {
  const ExpectationPoint e = to_expectation(p.theta);
  const cplx x1(a[0], a[2]);
  const cplx x2(a[1], a[3]);
  const cplx constant = -e.eta1 * a[0] - e.eta2 * a[1];
  return {{0.5 * constant, 0.5 * x1, 0.5 * x2}, psi_map(p)};
}

cplx pullback_residual(const TangentPoint& p, const Vec4& a, const Vec4& b) {
  const cplx lhs = polywave_inner(psi_pushforward(p, a), psi_pushforward(p, b));

  const KahlerTensors t = kahler_tensors(p, Chart::Natural);
  const ExpectationPoint e = to_expectation(p.theta);
  const Vec2 eta(e.eta1, e.eta2);
  const double s = (eta.dot(a.tail<2>())) * (eta.dot(b.tail<2>()));
  const double g = a.dot(t.g * b);
  const double om = a.dot(t.omega * b);
  return lhs - 0.25 * cplx(g + s, om);
}

PolyWave apply_generator(int basis_index, const PolyWave& pw) {
  const cplx i(0.0, 1.0);
  const auto& p = pw.poly;
  const WaveFunction& w = pw.w;
  switch (basis_index) {
    case 0:  // F: multiply by -x^2
      return {shift_up(p, 2, -1.0), w};
    case 1: {  // G: -d^2/dx^2
      auto first = d_dx(p, w);
      auto second = d_dx(first, w);
      for (auto& c : second) c = -c;
      return {second, w};
    }
    case 2: {  // H: 2i (x d/dx + 1/2)
      auto dp = d_dx(p, w);
      auto out = add(shift_up(dp, 1, 1.0), shift_up(p, 0, 0.5));
      for (auto& c : out) c *= 2.0 * i;
      return {out, w};
    }
    case 3: {  // P: -i d/dx
      auto dp = d_dx(p, w);
      for (auto& c : dp) c *= -i;
      return {dp, w};
    }
    case 4:  // Q: multiply by x
      return {shift_up(p, 1, 1.0), w};
    case 5: {  // R: -1/4
      auto out = p;
      for (auto& c : out) c *= -0.25;
      return {out, w};
    }
    default:
      throw std::invalid_argument("apply_generator: basis index out of range");
  }
}

PolyWave q_apply(const AlgebraElement& l, const PolyWave& pw) {
  std::vector<cplx> acc{cplx(0.0)};
  for (int i = 0; i < 6; ++i) {
    if (l.coeffs[i] == 0.0) continue;
    auto term = apply_generator(i, pw).poly;
    for (auto& c : term) c *= l.coeffs[i];
    acc = add(acc, term);
  }
  return {acc, pw.w};
}

PolynomialOperatorAction q_apply(const AlgebraElement& l,
                                 const WaveFunction& w) {
  const PolyWave out = q_apply(l, PolyWave{{cplx(1.0)}, w});
  PolynomialOperatorAction act{0.0, 0.0, 0.0};
  if (out.poly.size() > 3)
    throw std::logic_error("q_apply: generator action exceeded degree 2");
  if (out.poly.size() > 0) act.q0 = out.poly[0];
  if (out.poly.size() > 1) act.q1 = out.poly[1];
  if (out.poly.size() > 2) act.q2 = out.poly[2];
  return act;
}

double commutator_residual(const AlgebraElement& l1, const AlgebraElement& l2,
                           const Grid1D& grid) {
  // Deterministic family of test wave functions (fixed internal seed).
  std::mt19937 rng(0x5eed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 3; ++trial) {
    const WaveFunction w(cplx(unit(rng), unit(rng)), cplx(unit(rng), unit(rng)),
                         cplx(-0.3 - 0.6 * std::abs(unit(rng)), unit(rng)));
    const PolyWave base{{cplx(1.0)}, w};
    const PolyWave ab = q_apply(l1, q_apply(l2, base));
    const PolyWave ba = q_apply(l2, q_apply(l1, base));
    const PolyWave br = q_apply(bracket(l1, l2), base);

    auto res = add(ab.poly, shift_up(ba.poly, 0, -1.0));
    res = add(res, shift_up(br.poly, 0, cplx(0.0, -2.0)));
    const PolyWave residual{res, w};
    for (double x : grid.points())
      worst = std::max(worst, std::abs(residual(x)));
  }
  return worst;
}

double expectation(const AlgebraElement& l, const TangentPoint& p) {
  const WaveFunction w = psi_map(p);
  const PolyWave base{{cplx(1.0)}, w};
  const cplx val = polywave_inner(base, q_apply(l, base));
  if (std::abs(val.imag()) > 1e-12)
    throw HermiticityError("expectation: imaginary part " +
                           std::to_string(val.imag()) + " exceeds 1e-12");
  return val.real();
}

cplx kappa(const TangentPoint& p, const AlgebraElement& l) {
  const ExpectationPoint e = to_expectation(p.theta);
  const double e1 = e.eta1, e2 = e.eta2;
  const double t1 = p.theta.theta1, t2 = p.theta.theta2;
  const double d1 = p.thetadot[0], d2 = p.thetadot[1];
  const cplx i(0.0, 1.0);

  const Vec6& c = l.coeffs;
  cplx v = 0.0;
  // F and Q map to 0.
  v += c[1] * (i * e1 * (d1 * t2 + t1 * d2) + 2.0 * i * e2 * t2 * d2 -
               0.25 * d1 * d1 + t2 + i * d2 + 0.25 * t1 * t1 +
               0.5 * i * t1 * d1);
  v += c[2] * (-i * (e1 * t1 + 2.0 * e2 * t2 + 1.0));
  v += c[3] * (i * (0.5 * cplx(t1, d1) + t2 * e1));
  v += c[5] * 0.25;
  return v;
}

}  // namespace sjgeo
