#include <doctest.h>

#include <filesystem>

#include "koopman/calculus.hpp"
#include "koopman/errors.hpp"
#include "koopman/snapshot.hpp"
#include "test_helpers.hpp"

using namespace koopman;

TEST_CASE("grid construction validates its inputs") {
  CHECK_NOTHROW(make_grid(8, 8, {-1, 1, -1, 1}, 1.0));
  CHECK_THROWS_AS(make_grid(6, 8, {-1, 1, -1, 1}, 1.0), GridError);
  CHECK_THROWS_AS(make_grid(9, 8, {-1, 1, -1, 1}, 1.0), GridError);
  CHECK_THROWS_AS(make_grid(8, 8, {1, -1, -1, 1}, 1.0), GridError);
  CHECK_THROWS_AS(make_grid(8, 8, {-1, 1, -1, 1}, 0.0), GridError);
  CHECK_THROWS_AS(make_grid(8, 8, {-1, 1, -1, 1}, -2.0), GridError);
}

TEST_CASE("grid geometry and node layout") {
  auto g = make_grid(16, 32, {-4, 4, -8, 8}, 0.5);
  CHECK(g->dq() == doctest::Approx(0.5));
  CHECK(g->dp() == doctest::Approx(0.5));
  CHECK(g->q(0) == doctest::Approx(-4.0));
  CHECK(g->p(31) == doctest::Approx(7.5));
  CHECK(g->size() == 16u * 32u);
  CHECK(g->index(2, 3) == 2u * 32u + 3u);
  CHECK(g->hbar() == 0.5);
  // wavenumbers: fftfreq layout with the Nyquist slot zeroed
  CHECK(g->kq()[0] == 0.0);
  CHECK(g->kq()[1] == doctest::Approx(2.0 * std::numbers::pi / 8.0));
  CHECK(g->kq()[8] == 0.0);
  CHECK(g->kq()[15] == doctest::Approx(-2.0 * std::numbers::pi / 8.0));
}

TEST_CASE("integrate and norms on a unit Gaussian") {
  auto g = kt::grid64();
  auto chi = kt::gauss_field(g);
  CHECK(norm2(chi) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(integrate(abs2(chi)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(inner(chi, chi) - cplx(norm2(chi), 0.0)) < 1e-14);
}

TEST_CASE("inner product is conjugate-linear in the first slot") {
  auto g = kt::grid64();
  auto f = kt::gauss_field(g);
  ComplexField gphase = f;
  gphase *= cplx(0.0, 1.0);
  const cplx ip = inner(gphase, f);  // conj(i f) . f = -i ||f||^2
  CHECK(std::abs(ip.real()) < 1e-14);
  CHECK(ip.imag() == doctest::Approx(-1.0).epsilon(1e-12));
  const cplx ip2 = inner(f, gphase);  // linear second slot: +i ||f||^2
  CHECK(ip2.imag() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("l1_distance requires the identical grid object") {
  auto g1 = kt::grid64();
  auto g2 = kt::grid64();
  RealField a(g1), b(g2);
  CHECK_THROWS_AS((void)l1_distance(a, b), MismatchError);
  RealField c(g1);
  CHECK(l1_distance(a, c) == 0.0);
}

TEST_CASE("boundary_mass sees only the frame") {
  auto g = kt::grid64();
  auto centered = kt::gauss_field(g);
  CHECK(boundary_mass(centered) < 1e-12);
  // a blob parked in the frame: almost all mass in the boundary band
  auto edge = kt::gauss_field(g, 7.2, 0.0, 0.3);
  CHECK(boundary_mass(edge) > 0.5);
}

TEST_CASE("snapshot round trips preserve bits") {
  auto g = kt::grid64();
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "kw_snapshot_test";
  fs::create_directories(dir);

  auto chi = kt::gauss_field(g, 0.3, -0.7);
  write_snapshot(dir / "c.kwph", chi);
  auto back = read_complex_snapshot(dir / "c.kwph", g);
  CHECK(kt::max_abs_diff(chi, back) == 0.0);

  RealField r = abs2(chi);
  write_snapshot(dir / "r.kwph", r);
  auto rback = read_real_snapshot(dir / "r.kwph", g);
  CHECK(kt::max_abs_diff(r, rback) == 0.0);

  MatrixField m(g, 2);
  for (std::size_t i = 0; i < m.nodes(); ++i) {
    m.entry(i, 0, 0) = chi[i];
    m.entry(i, 0, 1) = cplx(0.25, -0.5) * chi[i];
    m.entry(i, 1, 0) = std::conj(m.entry(i, 0, 1));
    m.entry(i, 1, 1) = 0.5 * chi[i];
  }
  write_snapshot(dir / "m.kwph", m);
  auto mback = read_matrix_snapshot(dir / "m.kwph", g);
  double md = 0.0;
  for (std::size_t i = 0; i < m.nodes(); ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        md = std::max(md, std::abs(m.entry(i, j, k) - mback.entry(i, j, k)));
  CHECK(md == 0.0);
  fs::remove_all(dir);
}

TEST_CASE("matrix field trace, hermiticity bookkeeping, min eigenvalue") {
  auto g = kt::grid64();
  MatrixField m(g, 2);
  for (std::size_t i = 0; i < m.nodes(); ++i) {
    m.entry(i, 0, 0) = 2.0;
    m.entry(i, 1, 1) = 1.0;
    m.entry(i, 0, 1) = cplx(0.5, 0.25);
    m.entry(i, 1, 0) = cplx(0.5, -0.25);
  }
  RealField tr = m.trace_real();
  CHECK(tr[0] == doctest::Approx(3.0));
  CHECK(m.max_hermiticity_defect() < 1e-15);
  // eigenvalues of [[2, .5+.25i], [.5-.25i, 1]]: 1.5 +- sqrt(0.25 + 0.3125)
  CHECK(m.min_eigenvalue() ==
        doctest::Approx(1.5 - std::sqrt(0.5625)).epsilon(1e-12));

  m.entry(5, 0, 1) += cplx(0.0, 2e-3);
  CHECK(m.max_hermiticity_defect() > 1e-4);
  const double removed = m.resymmetrize();
  CHECK(removed > 1e-4);
  CHECK(m.max_hermiticity_defect() < 1e-15);
}

TEST_CASE("polar decomposition recovers density and phase") {
  auto g = kt::grid64();
  const double hbar = g->hbar();
  auto chi = ComplexField::from_function(g, [&](double q, double p) {
    const double s = 0.5 * std::sin(2.0 * std::numbers::pi * q / 16.0) *
                     std::cos(2.0 * std::numbers::pi * p / 16.0);
    return kt::gauss(q, p) * std::exp(cplx(0.0, s / hbar));
  });
  auto pol = polar_decompose(chi);
  double derr = 0.0, serr = 0.0;
  for (int iq = 0; iq < 64; ++iq)
    for (int ip = 0; ip < 64; ++ip) {
      const double q = g->q(iq), p = g->p(ip);
      const std::size_t i = g->index(iq, ip);
      if (!pol.mask[i]) continue;
      const double d = std::norm(kt::gauss(q, p));
      const double s = 0.5 * std::sin(2.0 * std::numbers::pi * q / 16.0) *
                       std::cos(2.0 * std::numbers::pi * p / 16.0);
      derr = std::max(derr, std::abs(pol.density[i] - d));
      serr = std::max(serr, std::abs(pol.phase[i] - s));
    }
  CHECK(derr < 1e-14);
  CHECK(serr < 1e-12);
}
