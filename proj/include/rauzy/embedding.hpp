#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rauzy/eigen.hpp"
#include "rauzy/padic.hpp"

namespace rauzy {

struct ArchPlace {
  Complex root;  // imaginary part > 0 for complex places
  bool is_complex = false;
};

// K_sigma: the non-dominant Archimedean places followed by one alpha-part
// ring per prime dividing N(alpha).
class RepresentationSpace {
 public:
  RepresentationSpace(const NumberField& field, const PisotVerdict& verdict, int padic_precision = 64);

  const NumberField& field() const { return *field_; }
  const std::vector<ArchPlace>& arch() const { return arch_; }
  std::size_t padic_count() const { return padic_.size(); }
  const AlphaPartRing& padic(std::size_t i) const { return *padic_[i]; }
  long double dominant() const { return dominant_; }

  // Number of real coordinates of the Archimedean part.
  int arch_dimension() const;
  std::vector<std::string> column_names() const;
  std::string layout() const;

  Complex arch_value(const AlgebraicNumber& x, std::size_t place) const;
  // |alpha| at every place of K_sigma (complex places squared).
  std::vector<long double> alpha_abs() const;

 private:
  const NumberField* field_;
  long double dominant_;
  std::vector<ArchPlace> arch_;
  std::vector<std::unique_ptr<AlphaPartRing>> padic_;
};

struct EmbeddedPoint {
  std::vector<Complex> arch;
  std::vector<PadicElement> padic;
  std::vector<std::optional<int>> valuation;  // nullopt for zero
};

EmbeddedPoint phi_prime(const AlgebraicNumber& x, const RepresentationSpace& space);
// Place absolute values: |z| at real places, |z|^2 at complex places, N(P)^-v at p-adic ones.
std::vector<long double> place_abs(const EmbeddedPoint& z, const RepresentationSpace& space);
long double norm(const EmbeddedPoint& z, const RepresentationSpace& space);

long double bound_M(const RepresentationSpace& space, const DigitSet& digits);

struct ContractionCertificate {
  long double product = 0;    // product of |alpha| over the places of K_sigma
  long double deviation = 0;  // |product * alpha - 1|
};
ContractionCertificate contraction_certificate(const RepresentationSpace& space);

// d_P = min_i v_P(v_i), one entry per p-adic place.
std::vector<int> d_p_values(const EigenData& eigen, const RepresentationSpace& space);

// Fast embedding of points given by integer v-coordinates (x = sum c_i v_i).
// Output columns: Archimedean real/imaginary parts, then one Euclidean-model
// value per p-adic place.
class CloudEmbedder {
 public:
  CloudEmbedder(const RepresentationSpace& space, const EigenData& eigen, int padic_digits = 24);

  int columns() const { return arch_dim_ + static_cast<int>(padic_.size()); }
  int arch_dimension() const { return arch_dim_; }
  void embed(const std::int64_t* c, long double* out) const;
  void arch(const std::int64_t* c, long double* out) const;
  // alpha^(-d_P) * x in the fast ring of place i (only for digit-model rings).
  bool fast(std::size_t i) const { return padic_[i].ring != nullptr; }
  FastPadicRing::Elem padic(const std::int64_t* c, std::size_t i) const;
  const FastPadicRing& ring(std::size_t i) const { return *padic_[i].ring; }
  int d_p(std::size_t i) const { return padic_[i].d; }
  int digits() const { return digits_; }

 private:
  struct PadicPart {
    std::unique_ptr<FastPadicRing> ring;
    std::vector<FastPadicRing::Elem> basis;
    int d = 0;
  };
  const RepresentationSpace* space_;
  const EigenData* eigen_;
  int n_, arch_dim_, digits_;
  std::vector<long double> arch_basis_;  // arch_dim_ x n, row-major
  std::vector<PadicPart> padic_;
};

}  // namespace rauzy
