#pragma once

#include <cstdint>
#include <stdexcept>

#include "sigtqft/bigint.hpp"
#include "sigtqft/hpreal.hpp"

namespace sigtqft::genus2 {

struct TrigEvalConfig {
  long mantissa_bits = 128;  // raised automatically to 6*log2(p) + 64
  int max_retries = 8;
};

/// Integer obtained by rounding a floating sum, together with the distance
/// of the sum from that integer. Certification demands residual < 0.25.
struct CertifiedInteger {
  BigInt value;
  double residual = 0.0;
  long bits_used = 0;
};

/// Thrown when the floating sum refuses to settle near an integer.
class CertificationError : public std::runtime_error {
 public:
  CertificationError(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual(best_residual) {}
  double best_residual;
};

/// Exact lattice-point sum over Delta_p = {0 < j,k,l < p, strict triangle,
/// j+k+l < 2p, j+k+l odd} of (-1)^{floor(jq/p)+floor(kq/p)+floor(lq/p)}.
/// Accepts any coprime pair 0 < q < p (both parities); iterates sorted
/// triples with multiplicity.
int64_t sigma2_lattice(int64_t p, int64_t q);

/// The four-sine combination f(n,p,q) of the trigonometric formula.
HPReal f_term(int64_t n, int64_t p, int64_t q, const TrigEvalConfig& cfg = {});

/// (1-p^2)/(6p^2) + (1/4p^2) sum over odd n of
/// f(n,p,q) / (sin^3(n pi/2p) sin^2(q n pi/p)), rounded to the nearest
/// integer with a certified residual; doubles the mantissa until the
/// residual drops below 0.25 or retries run out.
CertifiedInteger sigma2_trig(int64_t p, int64_t q, TrigEvalConfig cfg = {});

/// Raw value of the trigonometric expression (no rounding); mostly useful
/// for mixed-parity pairs where the expression is not integer-valued.
HPReal sigma2_trig_value(int64_t p, int64_t q, const TrigEvalConfig& cfg = {});

/// Method dispatch: charpoly trace for odd coprime pairs with p <= 2000,
/// the certified trig formula for larger odd pairs, and the lattice sum for
/// mixed-parity pairs (where the trig expression has no certified integer).
BigInt sigma2_auto(int64_t p, int64_t q);

}  // namespace sigtqft::genus2
