#include "rext/sturm.hpp"

#include <vector>

#include "rext/errors.hpp"

namespace rext {
namespace {

// Sign of q(a + t) for t -> 0+ (from_right) or t -> 0- (otherwise).
int one_sided_sign(const Poly& q, const Rat& a, bool from_right) {
  Poly shifted = q.taylor_shift(a);
  std::size_t j = shifted.low_order();
  int s = sgn(shifted.coeff(j));
  if (!from_right && (j % 2 == 1)) s = -s;
  return s;
}

int sign_at_infinity(const Poly& q, bool positive) {
  int s = sgn(q.leading());
  if (!positive && (q.degree() % 2 == 1)) s = -s;
  return s;
}

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t count_real_roots(const Poly& p, const Interval& interval) {
  if (p.is_zero()) throw InputError("count_real_roots: zero polynomial");
  if (interval.lo && interval.hi && *interval.lo >= *interval.hi) return 0;
  if (p.degree() == 0) return 0;

  std::vector<Poly> seq{p, p.derivative()};
  while (true) {
    Poly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }

  std::vector<int> at_lo, at_hi;
  for (const auto& q : seq) {
    at_lo.push_back(interval.lo ? one_sided_sign(q, *interval.lo, true) : sign_at_infinity(q, false));
    at_hi.push_back(interval.hi ? one_sided_sign(q, *interval.hi, false) : sign_at_infinity(q, true));
  }
  std::size_t lo = sign_changes(at_lo), hi = sign_changes(at_hi);
  return lo >= hi ? lo - hi : 0;
}

}  // namespace rext
