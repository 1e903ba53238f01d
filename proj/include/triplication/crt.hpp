#pragma once

// Reconstruction from residues modulo two moduli that need not be coprime.

namespace triplication {

struct CrtProblem {
  long long u = 0;  // residue modulo m
  long long m = 1;
  long long U = 0;  // residue modulo h
  long long h = 1;
};

/// The unique x in [0, lcm(m, h)) with x = u (mod m) and x = U (mod h).
///
/// With d = gcd(m, h) and c = u mod d, x = c + d * x' where x' solves the
/// coprime system x' = (u - c)/d (mod m/d), x' = (U - c)/d (mod h/d).
/// Throws IncompatibleResidues when u and U disagree modulo d.
long long crt_general(const CrtProblem& problem);

}  // namespace triplication
