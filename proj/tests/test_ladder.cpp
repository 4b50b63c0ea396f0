#include <cmath>
#include <vector>

#include "doctest.h"
#include "grid.hpp"
#include "rext/errors.hpp"
#include "rext/ladder.hpp"

using namespace rext;
using rext::testing::oscillator_grid;
using rext::testing::radial_grid;

namespace {

IndexList idx(std::vector<long> m) { return IndexList{std::move(m)}; }

Poly factor(const Rat& root) { return Poly({-root, Rat(1)}, Var::e); }

Poly product(std::initializer_list<Rat> roots) {
  Poly p = Poly::constant(1, Var::e);
  for (const auto& r : roots) p *= factor(r);
  return p;
}

// Formal adjoint sum_i (-1)^i (a_i f)^{(i)} of sum_i a_i d^i.
QuasiRat formal_adjoint(const std::vector<QuasiRat>& a, const QuasiRat& f) {
  QuasiRat total;
  for (std::size_t i = 0; i < a.size(); ++i) {
    QuasiRat term = a[i] * f;
    for (std::size_t d = 0; d < i; ++d) term = term.derivative();
    total = (i % 2 == 0) ? total + term : total - term;
  }
  return total;
}

Rat product_of_gaps(const Rat& e, const std::vector<Rat>& eps) {
  Rat p(1);
  for (const auto& x : eps) p *= e - x;
  return p;
}

}  // namespace

TEST_CASE("darboux map examples") {
  auto p = build_state_adding(FamilyTag::ho(), idx({2}));
  DarbouxMap a = DarbouxMap::forward(p.base, p.seeds);
  CHECK(a.order() == 1);
  CHECK(a(seed_phi_ho(2).f).is_zero());
  QuasiRat out = a(seed_psi_ho(0).f);
  CHECK_FALSE(out.is_zero());
  CHECK(apply_hamiltonian(p.potential, out) == out * Rat(1));
  CHECK(a.target().as_ratfun() == p.potential.as_ratfun());

  // two seeds: the span is killed
  auto q = build_state_adding(FamilyTag::ho(), idx({0, 1}));
  DarbouxMap b = DarbouxMap::forward(q.base, q.seeds);
  CHECK(b(seed_phi_ho(1).f).is_zero());
  CHECK(b(seed_phi_ho(0).f * Rat(3) - seed_phi_ho(1).f).is_zero());

  DarbouxMap id = DarbouxMap::forward(ho_potential(), {});
  CHECK(id(seed_psi_ho(3).f) == seed_psi_ho(3).f);
}

TEST_CASE("adjoint after forward is the factorization polynomial") {
  auto check_config = [](const ExtendedPotential& p, const std::vector<Seed>& states) {
    DarbouxMap a = DarbouxMap::forward(p.base, p.seeds);
    DarbouxMap ad = a.adjoint();
    CHECK(ad.direction() == Direction::adjoint);
    CHECK(ad.order() == a.order());
    auto eps = a.factorization_energies();
    for (const auto& s : states) {
      QuasiRat back = ad(a(s.f));
      CHECK(back == s.f * product_of_gaps(s.energy, eps));
    }
  };
  for (const auto& m : oscillator_grid()) {
    CAPTURE(m.to_string());
    std::vector<Seed> states;
    for (unsigned n = 0; n < 5; ++n) states.push_back(seed_psi_ho(n));
    check_config(build_state_adding(FamilyTag::ho(), m), states);
  }
  auto r = build_state_adding(FamilyTag::rho(Rat(3)), idx({0, 1}));
  std::vector<Seed> rs;
  for (unsigned n = 0; n < 4; ++n) rs.push_back(seed_psi_rho(radial_base_l(r.family, r.indices, Mode::adding), n));
  check_config(r, rs);
}

TEST_CASE("hat-seed adjoint equals the formal adjoint") {
  for (const auto& m : {idx({2}), idx({0, 1}), idx({2, 3, 4})}) {
    auto p = build_state_adding(FamilyTag::ho(), m);
    DarbouxMap a = DarbouxMap::forward(p.base, p.seeds);
    DarbouxMap ad = a.adjoint();
    ExtendedSystem sys(p);
    for (long nu : p.labels(6)) {
      QuasiRat psi = sys.state(nu);
      CHECK(ad(psi) == formal_adjoint(a.coefficients(), psi));
    }
    // the adjoint of the adjoint acts as the forward map
    DarbouxMap again = ad.adjoint();
    CHECK(again.direction() == Direction::forward);
    CHECK(again(seed_psi_ho(4).f) == a(seed_psi_ho(4).f));
  }
}

TEST_CASE("maps intertwine source and target Hamiltonians") {
  auto check_map = [](const DarbouxMap& map, const std::vector<Seed>& states) {
    for (const auto& s : states) {
      REQUIRE(apply_hamiltonian(map.source(), s.f) == s.f * s.energy);
      QuasiRat out = map(s.f);
      CHECK(apply_hamiltonian(map.target(), out) == out * s.energy);
    }
  };
  for (const auto& m : oscillator_grid()) {
    CAPTURE(m.to_string());
    std::vector<Seed> states;
    for (unsigned n = 0; n < 6; ++n) states.push_back(seed_psi_ho(n));
    auto add = build_state_adding(FamilyTag::ho(), m);
    check_map(DarbouxMap::forward(add.base, add.seeds), states);
    auto del = build_state_deleting(FamilyTag::ho(), m);
    check_map(DarbouxMap::forward(del.base, del.seeds), states);
  }
  for (const auto& c : radial_grid()) {
    if (c.ell != Rat(2)) continue;
    CAPTURE(c.indices.to_string());
    const FamilyTag f = FamilyTag::rho(c.ell);
    for (Mode mode : {Mode::adding, Mode::deleting}) {
      auto p = mode == Mode::adding ? build_state_adding(f, c.indices) : build_state_deleting(f, c.indices);
      std::vector<Seed> states;
      const Rat L = radial_base_l(f, c.indices, mode);
      for (unsigned n = 0; n < 4; ++n) states.push_back(seed_psi_rho(L, n));
      check_map(DarbouxMap::forward(p.base, p.seeds), states);
    }
    auto t = build_tilde_rho(f, c.indices).potential;
    std::vector<Seed> states;
    for (unsigned n = 0; n < 4; ++n) states.push_back(seed_psi_rho(radial_base_l(f, c.indices, Mode::tilde), n));
    check_map(DarbouxMap::forward(t.base, t.seeds), states);
  }
}

TEST_CASE("base ladders") {
  for (const FamilyTag& f : {FamilyTag::ho(), FamilyTag::rho(Rat(0)), FamilyTag::rho(Rat(3)), FamilyTag::rho(make_rat(5, 2))}) {
    CAPTURE(f.name());
    BaseLadder a = base_ladder(f);
    CHECK(a.lambda == Rat(2));
    CHECK(a.p1.degree() == a.order());
    Potential v = f.is_radial() ? rho_potential(f.ell) : ho_potential();
    auto state = [&](unsigned n) { return f.is_radial() ? seed_psi_rho(f.ell, n) : seed_psi_ho(n); };
    CHECK(a.lower(state(0).f).is_zero());
    for (unsigned n = 0; n < 6; ++n) {
      Seed s = state(n);
      QuasiRat up = a.raise(s.f);
      // [H, a^dagger] = 2 a^dagger
      CHECK(apply_hamiltonian(v, up) - a.raise(apply_hamiltonian(v, s.f)) == up * Rat(2));
      CHECK(qr_ratio_constant(up, state(n + 1).f).has_value());
      // a^dagger a = P1(H)
      CHECK(a.raise(a.lower(s.f)) == s.f * a.p1.eval(s.energy));
      if (n > 0) CHECK(qr_ratio_constant(a.lower(s.f), state(n - 1).f).has_value());
    }
  }
  CHECK(base_ladder(FamilyTag::ho()).p1 == factor(Rat(1)));
  // (2E - 3 - 2l)(2E - 1 + 2l)/16 at l = 2
  CHECK(base_ladder(FamilyTag::rho(Rat(2))).p1 == product({make_rat(7, 2), make_rat(-3, 2)}) * make_rat(1, 4));
}

TEST_CASE("b-type operator") {
  LadderOperator b = build_ladder_b(FamilyTag::ho(), idx({2}));
  CHECK(b.order == 3);
  CHECK(b.lambda == Rat(2));
  CHECK(b.q_poly.degree() == 3);
  // P1(E) f(E-2) f(E) with f(E) = E + 5
  CHECK(b.q_poly == product({Rat(1), Rat(-3), Rat(-5)}));
  ExtendedSystem sys(build_state_adding(FamilyTag::ho(), idx({2})));
  CHECK(b(sys.state(-3)).is_zero());
  CHECK(b(sys.state(0)).is_zero());
  auto r = norm_ratio_check(sys, b, 1, default_grid(FamilyTag::ho()));
  REQUIRE(r.has_value());
  CHECK(r->expected == b.q_poly.eval(Rat(3)));
  CHECK(r->rel_error < 1e-6);

  LadderOperator rb = build_ladder_b(FamilyTag::rho(Rat(2)), idx({0, 1}));
  CHECK(rb.order == 2 * 2 + 2);
  CHECK(rb.q_poly.degree() == 6);
}

TEST_CASE("c-type operator shapes") {
  LadderOperator c = build_ladder_c(FamilyTag::ho(), idx({2}));
  CHECK(c.order == 3);
  CHECK(c.lambda == Rat(6));
  CHECK(c.q_poly.degree() == c.order);
  LadderOperator c0 = build_ladder_c(FamilyTag::ho(), idx({0}));
  CHECK(c0.order == 1);
  CHECK(c0.lambda == Rat(2));
  // shifted oscillator: c lowers psi_1 onto psi_0 and kills the added level
  ExtendedSystem s0(build_state_adding(FamilyTag::ho(), idx({0})));
  CHECK(c0(s0.state(-1)).is_zero());
  CHECK(qr_ratio_constant(c0(s0.state(1)), s0.state(0)).has_value());
  for (const auto& cse : radial_grid()) {
    LadderOperator rc = build_ladder_c(FamilyTag::rho(cse.ell), cse.indices);
    CHECK(rc.order == 2 * cse.indices.back() + 2);
    CHECK(rc.lambda == Rat(2 * cse.indices.back() + 2));
    CHECK(rc.q_poly.degree() == rc.order);
  }
  for (const auto& m : oscillator_grid()) {
    LadderOperator hc = build_ladder_c(FamilyTag::ho(), m);
    CHECK(hc.order == m.back() + 1);
    CHECK(hc.q_poly.degree() == hc.order);
  }
  CHECK_THROWS_AS(build_ladder_c(FamilyTag::ho(), idx({1})), AdmissibilityError);
  CHECK_THROWS_AS(build_ladder_c(FamilyTag::rho(Rat(0)), idx({2})), AdmissibilityError);
}

TEST_CASE("Q polynomial examples") {
  CHECK(q_polynomial(FamilyTag::ho(), idx({2})) == product({Rat(-5), Rat(3), Rat(5)}));
  CHECK(q_polynomial(FamilyTag::ho(), idx({2})).eval(Rat(1)) == Rat(48));
  // l = 3, k = 1, m = (2): alpha = 7/2
  Poly want = product({make_rat(-1, 2), make_rat(-7, 2), make_rat(-3, 2), make_rat(1, 2), make_rat(15, 2), make_rat(19, 2)});
  CHECK(q_polynomial(FamilyTag::rho(Rat(3)), idx({2})) == want);
  // Q is nonnegative on the spectrum
  for (const auto& m : oscillator_grid()) {
    auto p = build_state_adding(FamilyTag::ho(), m);
    Poly q = q_polynomial(FamilyTag::ho(), m);
    for (long nu : p.labels(25)) CHECK(sgn(q.eval(p.energy(nu))) >= 0);
  }
}

TEST_CASE("Hamiltonian on added states") {
  auto p = build_state_adding(FamilyTag::ho(), idx({2}));
  ExtendedSystem sys(p);
  CHECK(apply_hamiltonian(p.potential, sys.state(-3)) == sys.state(-3) * Rat(-5));
  auto r = build_state_adding(FamilyTag::rho(Rat(2)), idx({2}));
  ExtendedSystem rs(r);
  CHECK(apply_hamiltonian(r.potential, rs.state(-3)) == rs.state(-3) * make_rat(-3, 2));
  CHECK_THROWS_AS(sys.state(-2), InputError);
}

TEST_CASE("PHA and zero modes for m = (2)") {
  auto p = build_state_adding(FamilyTag::ho(), idx({2}));
  ExtendedSystem sys(p);
  LadderOperator c = build_ladder_c(FamilyTag::ho(), idx({2}));
  auto tests = test_states(sys, 6);
  auto report = verify_pha(p.potential, c, tests);
  CHECK(report.pass());
  CHECK(report.entries.size() >= 6);

  CHECK(qr_is_zero(c(sys.state(1))));
  CHECK(qr_is_zero(c(sys.state(2))));
  auto kappa0 = qr_ratio_constant(c(sys.state(0)), sys.state(-3));
  REQUIRE(kappa0.has_value());
  CHECK(sgn(*kappa0) != 0);
  CHECK(qr_ratio_constant(c(sys.state(3)), sys.state(0)).has_value());

  auto zm = verify_zero_modes(sys, c, 10);
  CHECK(zm.pass());
  CHECK(zm.found == std::vector<long>{-3, 1, 2});
  CHECK(expected_zero_modes(idx({2})) == std::vector<long>{-3, 1, 2});
  CHECK(expected_zero_modes(idx({0, 1})) == std::vector<long>{-2, -1});
}

TEST_CASE("a broken ladder fails verification") {
  auto p = build_state_adding(FamilyTag::ho(), idx({2}));
  ExtendedSystem sys(p);
  LadderOperator c = build_ladder_c(FamilyTag::ho(), idx({2}));
  c.lambda = Rat(4);
  CHECK_FALSE(verify_pha(p.potential, c, test_states(sys, 4)).pass());
  LadderOperator b = build_ladder_b(FamilyTag::ho(), idx({2}));
  // b has no kernel on psi_3: zero-mode detection must notice the mismatch
  auto zm = verify_zero_modes(sys, b, 6);
  CHECK_FALSE(zm.pass());
}

TEST_CASE("action coefficients") {
  CHECK(oscillator_coefficient_sq(idx({2}), 0) == Rat(48));
  CHECK(oscillator_coefficient_sq(idx({2}), 1) == Rat(0));
  CHECK(oscillator_coefficient_sq(idx({2}), -3) == Rat(0));
  const Poly q = q_polynomial(FamilyTag::ho(), idx({2}));
  CHECK(oscillator_coefficient_sq(idx({2}), 4) == q.eval(Rat(9)));
  CHECK_THROWS_AS(oscillator_coefficient_sq(idx({2}), -1), InputError);
  for (const auto& m : oscillator_grid()) {
    CAPTURE(m.to_string());
    auto report = verify_action_coefficients(FamilyTag::ho(), m, 20);
    CHECK(report.pass());
    long lowest_weight = 0;
    for (const auto& e : report.entries) lowest_weight += e.zero_mode;
    CHECK(lowest_weight == m.back() + 1);
  }
  for (const auto& c : radial_grid()) CHECK(verify_action_coefficients(FamilyTag::rho(c.ell), c.indices, 20).pass());
}

TEST_CASE("norm ratios reproduce Q") {
  auto p = build_state_adding(FamilyTag::ho(), idx({2}));
  ExtendedSystem sys(p);
  LadderOperator c = build_ladder_c(FamilyTag::ho(), idx({2}));
  for (long nu : {0L, 3L, 4L}) {
    auto r = norm_ratio_check(sys, c, nu, default_grid(FamilyTag::ho()));
    REQUIRE(r.has_value());
    CHECK(r->rel_error < 1e-6);
  }
  auto r0 = norm_ratio_check(sys, c, 0, default_grid(FamilyTag::ho()));
  CHECK(r0->expected == Rat(48));
  CHECK(r0->ratio == doctest::Approx(48.0).epsilon(1e-6));
  CHECK_FALSE(norm_ratio_check(sys, c, 1, default_grid(FamilyTag::ho())).has_value());
}

TEST_CASE("b singlets against c") {
  for (const auto& m : {idx({2}), idx({0, 3}), idx({2, 3, 4})}) {
    ExtendedSystem sys(build_state_adding(FamilyTag::ho(), m));
    auto report = verify_b_singlets(sys, build_ladder_b(FamilyTag::ho(), m), build_ladder_c(FamilyTag::ho(), m));
    CHECK(report.pass());
    CHECK(report.added.size() == m.k());
  }
}
