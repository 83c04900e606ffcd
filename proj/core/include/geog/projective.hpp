#pragma once

#include "geog/invariants.hpp"
#include "geog/numeric.hpp"

#include <string>
#include <vector>

namespace geog {

/// Product of projective spaces P^{n_1} x ... x P^{n_f}.
struct AmbientProduct {
  std::vector<int> dims;
};

/// Complete intersection cut out by hypersurfaces of the given
/// multidegrees (one vector of length f per hypersurface).
struct MultidegreeCI {
  AmbientProduct ambient;
  std::vector<std::vector<Int>> degrees;
};

/// Throws InvalidArgument for empty data or a multidegree with no
/// positive entry; NotASurface unless sum(n_i) - #degrees == 2.
void validate_surface(const MultidegreeCI& x);

struct CiInvariants {
  CharNumbers cn;
  bool negative_euler_flag = false;  // sanity flag; value still returned
};

/// Chern numbers of the complete-intersection surface, computed in the
/// ring Z[H_1..H_f]/(H_i^{n_i+1}) by expanding the ambient Chern class,
/// dividing by prod (1 + D_a) as a truncated series, and integrating
/// against prod D_a.
CiInvariants ci_invariants(const MultidegreeCI& x);

struct CanonicalVector {
  std::vector<Int> coefficients;  // K = sum_a D_a - sum_i (n_i + 1) H_i
  Int divisibility;               // gcd of the entries (0 for K = 0)
  bool spin;                      // divisibility even
  bool ampleness_unverified;      // some defining multidegree entry was 0
};

/// Canonical class of the surface in hyperplane coordinates and the gcd
/// divisibility; primitivity of the restriction needs every defining
/// class ample (entrywise positive), so zero entries only downgrade the
/// certificate, never the value.
CanonicalVector canonical_vector(const MultidegreeCI& x);

struct CatalogEntry {
  std::string name;
  CharNumbers cn;
  bool ke_exists;       // ample canonical class
  bool simply_connected;
  Parity parity;
};

/// Small fixed catalog of named surfaces used as witnesses elsewhere.
/// Errors: UnknownEntry.
CatalogEntry catalog_lookup(const std::string& name);

/// Every catalog name, for listings.
std::vector<std::string> catalog_names();

}  // namespace geog
