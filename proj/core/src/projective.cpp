#include "geog/projective.hpp"

#include "geog/errors.hpp"

#include <map>
#include <numeric>

namespace geog {

namespace {

// Dense polynomial on monomials H_1^{a_1} ... H_f^{a_f} with a_i <= n_i,
// exact integer coefficients, truncated at total degree <= cap.
class TruncatedRing {
 public:
  TruncatedRing(std::vector<int> dims, int degree_cap)
      : dims_(std::move(dims)), cap_(degree_cap) {}

  using Poly = std::map<std::vector<int>, Int>;

  Poly one() const { return Poly{{std::vector<int>(dims_.size(), 0), Int(1)}}; }

  Poly variable(size_t i) const {
    std::vector<int> e(dims_.size(), 0);
    e[i] = 1;
    return Poly{{e, Int(1)}};
  }

  Poly linear(const std::vector<Int>& coeffs) const {
    Poly p;
    for (size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) {
        std::vector<int> e(dims_.size(), 0);
        e[i] = 1;
        p[e] = coeffs[i];
      }
    return p;
  }

  static void add_in(Poly& a, const Poly& b, const Int& scale = Int(1)) {
    for (const auto& [e, c] : b) {
      Int& slot = a[e];
      slot += c * scale;
      if (slot == 0) a.erase(e);
    }
  }

  Poly mul(const Poly& a, const Poly& b) const {
    Poly out;
    for (const auto& [ea, ca] : a)
      for (const auto& [eb, cb] : b) {
        std::vector<int> e(dims_.size());
        int total = 0;
        bool dead = false;
        for (size_t i = 0; i < e.size(); ++i) {
          e[i] = ea[i] + eb[i];
          if (e[i] > dims_[i]) {
            dead = true;  // H_i^{n_i+1} = 0
            break;
          }
          total += e[i];
        }
        if (dead || total > cap_) continue;
        Int& slot = out[e];
        slot += ca * cb;
        if (slot == 0) out.erase(e);
      }
    return out;
  }

  /// (1 + x)^n for a linear class x, binomially, truncated.
  Poly power_of_one_plus(const Poly& x, int n) const {
    Poly acc = one();
    Poly xp = one();
    Int coeff = 1;
    for (int j = 1; j <= std::min(n, cap_); ++j) {
      xp = mul(xp, x);
      coeff = coeff * (n - j + 1) / j;
      if (xp.empty()) break;
      add_in(acc, xp, coeff);
    }
    return acc;
  }

  /// 1 / (1 + x) = sum (-x)^j, truncated.
  Poly inverse_of_one_plus(const Poly& x) const {
    Poly acc = one();
    Poly xp = one();
    Int sign = 1;
    for (int j = 1; j <= cap_; ++j) {
      xp = mul(xp, x);
      sign = -sign;
      if (xp.empty()) break;
      add_in(acc, xp, sign);
    }
    return acc;
  }

  /// Coefficient of the top monomial H_1^{n_1} ... H_f^{n_f}.
  Int integrate(const Poly& p) const {
    std::vector<int> top(dims_.begin(), dims_.end());
    auto it = p.find(top);
    return it == p.end() ? Int(0) : it->second;
  }

  Poly graded_part(const Poly& p, int degree) const {
    Poly out;
    for (const auto& [e, c] : p)
      if (std::accumulate(e.begin(), e.end(), 0) == degree) out[e] = c;
    return out;
  }

 private:
  std::vector<int> dims_;
  int cap_;
};

}  // namespace

void validate_surface(const MultidegreeCI& x) {
  if (x.ambient.dims.empty()) raise(Errc::invalid_argument, "empty ambient product");
  for (int n : x.ambient.dims)
    if (n < 1) raise(Errc::invalid_argument, "ambient factors need dimension >= 1");
  if (x.degrees.empty()) raise(Errc::invalid_argument, "need at least one defining hypersurface");
  int total = 0;
  for (int n : x.ambient.dims) total += n;
  for (const auto& deg : x.degrees) {
    if (deg.size() != x.ambient.dims.size())
      raise(Errc::invalid_argument, "multidegree length must match the number of factors");
    bool positive = false;
    for (const auto& v : deg) {
      if (v < 0) raise(Errc::invalid_argument, "multidegree entries must be non-negative");
      if (v > 0) positive = true;
    }
    if (!positive) raise(Errc::invalid_argument, "each multidegree needs a positive entry");
  }
  if (total - static_cast<int>(x.degrees.size()) != 2)
    raise(Errc::not_a_surface, "complex dimension is " +
                                   std::to_string(total - static_cast<int>(x.degrees.size())) +
                                   ", need 2");
}

CiInvariants ci_invariants(const MultidegreeCI& x) {
  validate_surface(x);
  int total = 0;
  for (int n : x.ambient.dims) total += n;
  TruncatedRing ring(x.ambient.dims, total);

  // Restricted tangent Chern class up to degree 2:
  //   c(TX) = prod_i (1 + H_i)^{n_i + 1} * prod_a (1 + D_a)^{-1}.
  auto c = ring.one();
  for (size_t i = 0; i < x.ambient.dims.size(); ++i)
    c = ring.mul(c, ring.power_of_one_plus(ring.variable(i), x.ambient.dims[i] + 1));
  auto cut = ring.one();  // prod D_a, the class of X
  for (const auto& deg : x.degrees) {
    auto d = ring.linear(deg);
    c = ring.mul(c, ring.inverse_of_one_plus(d));
    cut = ring.mul(cut, d);
  }

  auto c1 = ring.graded_part(c, 1);
  auto c2 = ring.graded_part(c, 2);
  const Int c1sq = ring.integrate(ring.mul(ring.mul(c1, c1), cut));
  const Int e = ring.integrate(ring.mul(c2, cut));

  if ((c1sq + e) % 12 != 0)
    raise(Errc::inconsistent_formulas, "c1^2 + c2 = " + Int(c1sq + e).str() + " not divisible by 12");
  CiInvariants out;
  out.cn = from_chi_c1sq((c1sq + e) / 12, c1sq);
  out.negative_euler_flag = e < 0;
  return out;
}

CanonicalVector canonical_vector(const MultidegreeCI& x) {
  validate_surface(x);
  CanonicalVector out;
  out.ampleness_unverified = false;
  for (size_t i = 0; i < x.ambient.dims.size(); ++i) {
    Int k = -Int(x.ambient.dims[i] + 1);
    for (const auto& deg : x.degrees) {
      k += deg[i];
      if (deg[i] == 0) out.ampleness_unverified = true;
    }
    out.coefficients.push_back(k);
  }
  Int g = 0;
  for (const auto& k : out.coefficients) g = gcd(g, abs(k));
  out.divisibility = g;
  out.spin = g % 2 == 0;
  return out;
}

namespace {

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> kEntries = [] {
    std::vector<CatalogEntry> v;
    // Double-double cover of the plane through a nodal quartic-like K3; the
    // smallest known general-type surface with chi = 2, c1^2 = 1.
    v.push_back({"catanese_1_2", from_chi_c1sq(2, 1), true, true, Parity::non_spin});
    // Double-double cover of the quadric; chi = 2, c1^2 = 2.
    v.push_back({"catanese_debarre_2_2", from_chi_c1sq(2, 2), true, true, Parity::non_spin});
    return v;
  }();
  return kEntries;
}

}  // namespace

CatalogEntry catalog_lookup(const std::string& name) {
  for (const auto& entry : catalog())
    if (entry.name == name) return entry;
  raise(Errc::unknown_entry, "no catalog surface named '" + name + "'");
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& entry : catalog()) names.push_back(entry.name);
  return names;
}

}  // namespace geog
