#include "rext/darboux.hpp"

#include "rext/errors.hpp"

namespace rext {
namespace {

std::vector<QuasiRat> functions_of(const std::vector<Seed>& seeds) {
  std::vector<QuasiRat> fs;
  fs.reserve(seeds.size());
  for (const auto& s : seeds) fs.push_back(s.f);
  return fs;
}

}  // namespace

DarbouxMap::DarbouxMap(std::vector<Seed> seeds, Potential source, Potential target, Direction direction, int sign)
    : seeds_(std::move(seeds)),
      source_(std::move(source)),
      target_(std::move(target)),
      direction_(direction),
      sign_(sign) {
  auto fs = functions_of(seeds_);
  auto cof = qr_wronskian_cofactors(fs);
  const QuasiRat& w = cof.back();
  if (w.is_zero()) throw InputError("DarbouxMap: seeds are linearly dependent");
  coeffs_.reserve(cof.size());
  for (std::size_t i = 0; i + 1 < cof.size(); ++i) coeffs_.push_back(cof[i] / w * Rat(sign_));
  coeffs_.push_back(QuasiRat::constant(sign_));
}

DarbouxMap DarbouxMap::forward(const Potential& source, std::vector<Seed> seeds) {
  Potential target = darboux_partner(source, seeds);
  return DarbouxMap(std::move(seeds), source, std::move(target));
}

QuasiRat apply_differential(const std::vector<QuasiRat>& coeffs, const QuasiRat& f) {
  if (f.is_zero()) return {};
  QuasiRat acc;
  QuasiRat d = f;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) acc += coeffs[i] * d;
    if (i + 1 < coeffs.size()) d = d.derivative();
  }
  return acc;
}

QuasiRat DarbouxMap::apply(const QuasiRat& f) const { return apply_differential(coeffs_, f); }

std::vector<Rat> DarbouxMap::factorization_energies() const {
  std::vector<Rat> out;
  for (const auto& s : seeds_) out.push_back(s.energy);
  return out;
}

std::vector<QuasiRat> kernel_of_adjoint(const std::vector<Seed>& seeds) {
  auto fs = functions_of(seeds);
  QuasiRat w = qr_wronskian(fs);
  std::vector<QuasiRat> out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    std::vector<QuasiRat> rest;
    for (std::size_t j = 0; j < fs.size(); ++j)
      if (j != i) rest.push_back(fs[j]);
    QuasiRat wi = rest.empty() ? QuasiRat::constant(1) : qr_wronskian(rest);
    out.push_back(wi / w);
  }
  return out;
}

DarbouxMap DarbouxMap::adjoint() const {
  if (direction_ == Direction::adjoint) return DarbouxMap(forward_seeds_, target_, source_, Direction::forward, 1);
  auto hats = kernel_of_adjoint(seeds_);
  std::vector<Seed> hat_seeds;
  for (std::size_t i = 0; i < hats.size(); ++i) hat_seeds.push_back({hats[i], seeds_[i].energy});
  int sign = (seeds_.size() % 2 == 0) ? 1 : -1;
  DarbouxMap adj(std::move(hat_seeds), target_, source_, Direction::adjoint, sign);
  adj.forward_seeds_ = seeds_;
  return adj;
}

}  // namespace rext
