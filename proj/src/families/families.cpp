#include "rext/families.hpp"

#include <sstream>

#include "rext/errors.hpp"

namespace rext {

std::string IndexList::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < m.size(); ++i) out << (i ? "," : "") << m[i];
  out << ")";
  return out.str();
}

IndexList parse_index_list(const std::string& text) {
  IndexList out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw InputError("bad index \"" + item + "\" in list \"" + text + "\"");
    }
    while (used < item.size() && item[used] == ' ') ++used;
    if (used != item.size()) throw InputError("bad index \"" + item + "\" in list \"" + text + "\"");
    out.m.push_back(v);
  }
  if (out.m.empty()) throw InputError("empty index list");
  return out;
}

RatFun Potential::as_ratfun() const {
  RatFun v = correction;
  if (sgn(quadratic) != 0) v += RatFun(Poly::monomial(quadratic, 2));
  if (sgn(centrifugal) != 0) v += RatFun(Poly::constant(centrifugal), Poly::monomial(1, 2));
  if (sgn(offset) != 0) v += RatFun::constant(offset);
  return v;
}

Potential ho_potential() { return Potential{Rat(1), Rat(0), Rat(0), RatFun()}; }

Potential rho_potential(const Rat& L) { return Potential{Rat(1, 4), L * (L + 1), Rat(0), RatFun()}; }

QuasiRat apply_hamiltonian(const Potential& v, const QuasiRat& f) {
  return QuasiRat(v.as_ratfun()) * f - f.derivative().derivative();
}

Poly hermite(unsigned m) {
  Poly prev = Poly::constant(1);
  if (m == 0) return prev;
  Poly cur = Poly::monomial(2, 1);
  Poly two_x = cur;
  for (unsigned n = 1; n < m; ++n) {
    Poly next = two_x * cur - prev * Rat(2 * n);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly pseudo_hermite(unsigned m) {
  Poly h = hermite(m);
  std::vector<Rat> cs = h.coeffs();
  for (std::size_t j = 0; j < cs.size(); ++j)
    if (((m - j) / 2) % 2 == 1) cs[j] = -cs[j];
  return Poly(std::move(cs));
}

Poly laguerre(unsigned m, const Rat& beta) {
  Poly prev = Poly::constant(1, Var::z);
  if (m == 0) return prev;
  Poly cur({beta + 1, Rat(-1)}, Var::z);
  for (unsigned n = 1; n < m; ++n) {
    Rat rn(n);
    Poly lin({2 * rn + 1 + beta, Rat(-1)}, Var::z);
    Poly next = (lin * cur - prev * (rn + beta)) * Rat(1, n + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Seed seed_phi_ho(unsigned m) {
  return {QuasiRat::make(0, Rat(1, 2), pseudo_hermite(m)), Rat(-2 * static_cast<long>(m) - 1)};
}

Seed seed_psi_ho(unsigned nu) { return {QuasiRat::make(0, Rat(-1, 2), hermite(nu)), Rat(2 * nu + 1)}; }

namespace {

void require_below(const Rat& L, unsigned m, const char* rule, const char* what) {
  if (!(Rat(m) < L + Rat(1, 2)))
    throw AdmissibilityError({rule}, std::string(what) + ": index " + std::to_string(m) +
                                         " must be below L + 1/2 = " + to_string(Rat(L + Rat(1, 2))));
}

}  // namespace

Seed seed_phi_rho(const Rat& L, unsigned m) {
  require_below(L, m, "alpha-plus-k-exceeds-mk", "seed_phi_rho");
  Poly p = laguerre(m, -L - Rat(1, 2)).scale_argument(-1).substitute_half_square();
  return {QuasiRat::make(-L, Rat(1, 4), p), Rat(-2 * static_cast<long>(m)) + L - Rat(1, 2)};
}

Seed seed_psi_rho(const Rat& L, unsigned nu) {
  Poly p = laguerre(nu, L + Rat(1, 2)).substitute_half_square();
  return {QuasiRat::make(L + 1, Rat(-1, 4), p), Rat(2 * nu) + L + Rat(3, 2)};
}

Seed seed_phi_tilde_rho(const Rat& L, unsigned i) {
  require_below(L, i, "tilde-seed-bound", "seed_phi_tilde_rho");
  Poly p = laguerre(i, -L - Rat(1, 2)).substitute_half_square();
  return {QuasiRat::make(-L, Rat(-1, 4), p), Rat(2 * i) - L + Rat(1, 2)};
}

}  // namespace rext
