#include "triplication/crt.hpp"

#include <string>

#include "triplication/modular.hpp"

namespace triplication {

namespace {

long long reduce(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

// Inverse of a modulo n for coprime a, n (n >= 1).
long long coprime_inverse(long long a, long long n) {
  long long old_r = reduce(a, n), r = n, old_s = 1, s = 0;
  while (r != 0) {
    long long quotient = old_r / r;
    old_r -= quotient * r;
    std::swap(old_r, r);
    old_s -= quotient * s;
    std::swap(old_s, s);
  }
  return reduce(old_s, n);
}

}  // namespace

long long crt_general(const CrtProblem& p) {
  if (p.m < 1 || p.h < 1) throw Error(ErrorCode::InvalidInput, "moduli must be positive");
  const long long d = gcd(p.m, p.h);
  const long long u = reduce(p.u, p.m);
  const long long U = reduce(p.U, p.h);
  if (u % d != U % d) {
    throw Error(ErrorCode::IncompatibleResidues,
                std::to_string(u) + " mod " + std::to_string(p.m) + " and " + std::to_string(U) + " mod " +
                    std::to_string(p.h) + " disagree modulo " + std::to_string(d));
  }
  const long long common = u % d;
  const long long a = p.m / d;
  const long long b = p.h / d;
  const long long ra = (u - common) / d;
  const long long rb = (U - common) / d;
  // x' = ra + a * k with a * k = rb - ra (mod b).
  const long long k = reduce((rb - ra) % b * coprime_inverse(a, b), b);
  const long long x_prime = ra + a * k;
  return reduce(common + d * x_prime, d * a * b);
}

}  // namespace triplication
