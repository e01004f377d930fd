#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "hopfbrauer/cyclotomic.hpp"
#include "hopfbrauer/ff_matrix.hpp"

namespace hopfbrauer {

/// Correspondence between the m-th roots of unity of a finite field and of
/// Q(ζ_m): ωbar^j <-> ζ_m^j with ωbar = g^((q-1)/m) for the field's primitive
/// element g.
struct BrauerLift {
  FieldPtr field;
  unsigned m = 1;
  GaloisField::Elem omega = 1;
  /// dlog[code] = j with ωbar^j = code, or -1 outside <ωbar>.
  std::vector<int> dlog;

  unsigned p() const { return field->characteristic(); }
  GaloisField::Elem power(long long j) const;
  /// f^-1: lifts an m-th root of unity of the field to ζ_m^j.
  Cyc lift(GaloisField::Elem root) const;
};

/// Lift on GF(p^d) with d = ord_m(p).
BrauerLift build_lift(unsigned p, unsigned m);
/// Lift on a given field; requires m | q - 1.
BrauerLift make_lift(const FieldPtr& field, unsigned m);

/// Σ_j dim ker(A - ωbar^j) ζ_m^j. Requires A^m = 1 and the eigenspaces to
/// fill the whole space; throws InternalError otherwise.
Cyc brauer_value(const FFMatrix& a, const BrauerLift& lift);

/// As brauer_value, but for A with A^(m+1) = A: the zero eigenvalue is
/// allowed and contributes nothing.
Cyc lifted_trace(const FFMatrix& a, const BrauerLift& lift);

/// Reduction map f: ζ_m^j -> ωbar^j, extended to elements of Z[ζ_m] (and of
/// Z_(p)[ζ_m]). The conductor of c must divide lift.m.
GaloisField::Elem reduce(const Cyc& c, const BrauerLift& lift);

nlohmann::json lift_to_json(const BrauerLift& lift);

}  // namespace hopfbrauer
