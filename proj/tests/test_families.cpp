#include <random>
#include <vector>

#include "doctest.h"
#include "rext/errors.hpp"
#include "rext/families.hpp"
#include "rext/sturm.hpp"

using namespace rext;

namespace {

const Rat half = make_rat(1, 2);

Poly px(std::initializer_list<long> cs) {
  std::vector<Rat> v;
  for (long c : cs) v.emplace_back(c);
  return Poly(v);
}

Poly pz(std::vector<Rat> cs) { return Poly(std::move(cs), Var::z); }

bool is_eigen(const Potential& v, const Seed& s) { return apply_hamiltonian(v, s.f) == s.f * s.energy; }

}  // namespace

TEST_CASE("hermite examples") {
  CHECK(hermite(0) == px({1}));
  CHECK(hermite(1) == px({0, 2}));
  CHECK(hermite(2) == px({-2, 0, 4}));
  CHECK(hermite(3) == px({0, -12, 0, 8}));
  for (unsigned m = 1; m < 15; ++m) {
    Poly lhs = hermite(m + 1);
    Poly rhs = px({0, 2}) * hermite(m) - hermite(m - 1) * Rat(2 * m);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("pseudo-hermite examples and positivity") {
  CHECK(pseudo_hermite(0) == px({1}));
  CHECK(pseudo_hermite(2) == px({2, 0, 4}));
  CHECK(pseudo_hermite(3) == px({0, 12, 0, 8}));
  for (unsigned m = 0; m < 16; ++m) {
    Poly p = pseudo_hermite(m);
    CHECK(p.degree() == static_cast<long>(m));
    for (std::size_t i = 0; i <= m; ++i) {
      if ((m - i) % 2 == 0)
        CHECK(p.coeff(i) > 0);
      else
        CHECK(sgn(p.coeff(i)) == 0);
    }
    if (m % 2 == 0) CHECK(count_real_roots(p, Interval::real_line()) == 0);
  }
}

TEST_CASE("laguerre examples") {
  CHECK(laguerre(0, make_rat(7, 3)) == pz({Rat(1)}));
  for (Rat beta : {Rat(0), make_rat(-5, 2), make_rat(3, 2), Rat(4)}) {
    CHECK(laguerre(1, beta) == pz({beta + 1, Rat(-1)}));
    // L_2 = z^2/2 - (beta+2) z + (beta+1)(beta+2)/2
    CHECK(laguerre(2, beta) == pz({(beta + 1) * (beta + 2) / 2, -(beta + 2), half}));
  }
  CHECK(laguerre(2, make_rat(-5, 2)) == pz({make_rat(3, 8), half, half}));
  CHECK(laguerre(3, Rat(0)).var() == Var::z);
}

TEST_CASE("laguerre three-term recurrence") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 6);
  const Poly z = Poly::variable(Var::z);
  for (int trial = 0; trial < 8; ++trial) {
    Rat beta = make_rat(num(rng), den(rng));
    for (unsigned n = 1; n < 12; ++n) {
      Poly lhs = laguerre(n + 1, beta) * Rat(n + 1);
      Poly rhs = (Poly::constant(Rat(2 * n + 1) + beta, Var::z) - z) * laguerre(n, beta) -
                 laguerre(n - 1, beta) * (Rat(n) + beta);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("oscillator seeds are eigenfunctions") {
  Potential v = ho_potential();
  CHECK(seed_phi_ho(0).f == QuasiRat::make(Rat(0), half, px({1})));
  CHECK(seed_psi_ho(0).f == QuasiRat::make(Rat(0), -half, px({1})));
  CHECK(apply_hamiltonian(v, seed_psi_ho(0).f) == seed_psi_ho(0).f);
  CHECK(apply_hamiltonian(v, seed_phi_ho(2).f) == seed_phi_ho(2).f * Rat(-5));
  for (unsigned m = 0; m < 12; ++m) {
    CHECK(seed_phi_ho(m).energy == Rat(-2 * static_cast<long>(m) - 1));
    CHECK(seed_psi_ho(m).energy == Rat(2 * m + 1));
    CHECK(is_eigen(v, seed_phi_ho(m)));
    CHECK(is_eigen(v, seed_psi_ho(m)));
  }
}

TEST_CASE("radial seeds are eigenfunctions") {
  for (long l = 0; l <= 6; ++l) {
    const Rat L(l);
    Potential v = rho_potential(L);
    CHECK(seed_psi_rho(L, 0).f == QuasiRat::make(L + 1, -make_rat(1, 4), px({1})));
    CHECK(seed_psi_rho(L, 0).energy == L + make_rat(3, 2));
    CHECK(seed_phi_tilde_rho(L, 0).f == QuasiRat::make(-L, -make_rat(1, 4), px({1})));
    CHECK(seed_phi_tilde_rho(L, 0).energy == -L + half);
    for (unsigned n = 0; n < 8; ++n) {
      CHECK(is_eigen(v, seed_psi_rho(L, n)));
      CHECK(seed_psi_rho(L, n).energy == Rat(2 * n) + L + make_rat(3, 2));
    }
    for (unsigned m = 0; Rat(m) < L + half; ++m) {
      CHECK(is_eigen(v, seed_phi_rho(L, m)));
      CHECK(seed_phi_rho(L, m).energy == Rat(-2 * static_cast<long>(m)) + L - half);
      CHECK(is_eigen(v, seed_phi_tilde_rho(L, m)));
      CHECK(seed_phi_tilde_rho(L, m).energy == Rat(2 * m) - L + half);
    }
  }
  // half-integer L
  const Rat L = make_rat(5, 2);
  CHECK(is_eigen(rho_potential(L), seed_psi_rho(L, 3)));
  CHECK(is_eigen(rho_potential(L), seed_phi_rho(L, 2)));
}

TEST_CASE("radial seed bounds") {
  CHECK_THROWS_AS(seed_phi_rho(Rat(1), 2), AdmissibilityError);
  CHECK_THROWS_AS(seed_phi_tilde_rho(Rat(2), 3), AdmissibilityError);
  CHECK_NOTHROW(seed_phi_tilde_rho(Rat(2), 2));
  try {
    seed_phi_tilde_rho(Rat(0), 1);
    FAIL("expected an admissibility error");
  } catch (const AdmissibilityError& e) {
    CHECK(e.rules() == std::vector<std::string>{"tilde-seed-bound"});
  }
}

TEST_CASE("index list parsing") {
  CHECK(parse_index_list("0,1,4").m == std::vector<long>{0, 1, 4});
  CHECK(parse_index_list(" 2 ").m == std::vector<long>{2});
  CHECK_THROWS_AS(parse_index_list(""), InputError);
  CHECK_THROWS_AS(parse_index_list("1,,2"), InputError);
  CHECK_THROWS_AS(parse_index_list("a"), InputError);
}

TEST_CASE("potentials evaluate to the base forms") {
  CHECK(ho_potential().as_ratfun() == RatFun(px({0, 0, 1})));
  // V_1 at x = 2: 1 + 2/4
  CHECK(rho_potential(Rat(1)).as_ratfun().eval(Rat(2)) == make_rat(3, 2));
  CHECK(FamilyTag::rho(Rat(2)).alpha() == make_rat(5, 2));
}
