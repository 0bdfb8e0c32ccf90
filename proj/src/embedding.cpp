#include "rauzy/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rauzy/error.hpp"

namespace rauzy {

RepresentationSpace::RepresentationSpace(const NumberField& field, const PisotVerdict& verdict, int padic_precision)
    : field_(&field), dominant_(field.alpha_approx()) {
  if (!verdict.pisot) fail(ErrorKind::Validation, "representation space needs a Pisot number");
  std::vector<ArchPlace> reals, complexes;
  for (std::size_t i = 1; i < verdict.discs.size(); ++i) {
    const RootDisc& d = verdict.discs[i];
    if (std::fabs(d.center.imag()) <= d.radius) {
      reals.push_back({Complex(d.center.real(), 0), false});
    } else if (d.center.imag() > 0) {
      complexes.push_back({d.center, true});
    }
  }
  auto by_real = [](const ArchPlace& a, const ArchPlace& b) { return a.root.real() < b.root.real(); };
  std::sort(reals.begin(), reals.end(), by_real);
  std::sort(complexes.begin(), complexes.end(), by_real);
  arch_ = reals;
  arch_.insert(arch_.end(), complexes.begin(), complexes.end());
  int dim = 1 + static_cast<int>(reals.size()) + 2 * static_cast<int>(complexes.size());
  if (dim != field.degree()) fail(ErrorKind::Precision, "root discs do not separate the conjugates");
  for (const BigInt& p : alpha_primes(field.minpoly()))
    padic_.push_back(std::make_unique<AlphaPartRing>(field.minpoly(), p, padic_precision));
}

int RepresentationSpace::arch_dimension() const {
  int d = 0;
  for (auto& a : arch_) d += a.is_complex ? 2 : 1;
  return d;
}

std::vector<std::string> RepresentationSpace::column_names() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < arch_.size(); ++i) {
    names.push_back("re_" + std::to_string(i + 1));
    if (arch_[i].is_complex) names.push_back("im_" + std::to_string(i + 1));
  }
  for (auto& r : padic_) names.push_back("padic_p" + r->prime().get_str() + "_model");
  return names;
}

std::string RepresentationSpace::layout() const {
  std::vector<std::string> parts;
  for (auto& a : arch_) parts.push_back(a.is_complex ? "C" : "R");
  for (auto& r : padic_) {
    std::string q = "Q_" + r->prime().get_str();
    if (r->degree() > 1)
      q += "(deg " + std::to_string(r->degree()) + ", e=" + std::to_string(r->ramification()) +
           ", f=" + std::to_string(r->inertia()) + ")";
    parts.push_back(q);
  }
  if (parts.empty()) return "{0}";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " x " + parts[i];
  return s;
}

Complex RepresentationSpace::arch_value(const AlgebraicNumber& x, std::size_t place) const {
  const Complex z = arch_[place].root;
  Complex acc = 0;
  const auto& num = x.numerators();
  for (std::size_t i = num.size(); i-- > 0;) acc = acc * z + Complex(to_long_double(num[i]), 0);
  return acc / to_long_double(x.denominator());
}

std::vector<long double> RepresentationSpace::alpha_abs() const {
  std::vector<long double> r;
  for (auto& a : arch_) {
    long double m = std::abs(a.root);
    r.push_back(a.is_complex ? m * m : m);
  }
  for (auto& ring : padic_) r.push_back(abs_value(ring->alpha_valuation(), *ring));
  return r;
}

EmbeddedPoint phi_prime(const AlgebraicNumber& x, const RepresentationSpace& space) {
  EmbeddedPoint z;
  for (std::size_t i = 0; i < space.arch().size(); ++i) z.arch.push_back(space.arch_value(x, i));
  for (std::size_t i = 0; i < space.padic_count(); ++i) {
    z.padic.push_back(embed_padic(x, space.padic(i)));
    z.valuation.push_back(exact_valuation(x, space.padic(i)));
  }
  return z;
}

std::vector<long double> place_abs(const EmbeddedPoint& z, const RepresentationSpace& space) {
  std::vector<long double> r;
  for (std::size_t i = 0; i < z.arch.size(); ++i) {
    long double m = std::abs(z.arch[i]);
    r.push_back(space.arch()[i].is_complex ? m * m : m);
  }
  for (std::size_t i = 0; i < z.padic.size(); ++i)
    r.push_back(z.valuation[i] ? abs_value(*z.valuation[i], space.padic(i)) : 0.0L);
  return r;
}

long double norm(const EmbeddedPoint& z, const RepresentationSpace& space) {
  long double m = 0;
  for (long double v : place_abs(z, space)) m = std::max(m, v);
  return m;
}

long double bound_M(const RepresentationSpace& space, const DigitSet& digits) {
  long double num = 0;
  for (auto& d : digits.values) num = std::max(num, norm(phi_prime(d, space), space));
  long double a = norm(phi_prime(space.field().alpha(), space), space);
  if (a >= 1) fail(ErrorKind::Internal, "alpha does not contract the representation space");
  return num / (1 - a);
}

ContractionCertificate contraction_certificate(const RepresentationSpace& space) {
  ContractionCertificate c;
  c.product = 1;
  for (long double v : space.alpha_abs()) c.product *= v;
  c.deviation = std::fabs(c.product * space.dominant() - 1);
  return c;
}

std::vector<int> d_p_values(const EigenData& eigen, const RepresentationSpace& space) {
  std::vector<int> d;
  for (std::size_t i = 0; i < space.padic_count(); ++i) {
    int m = 1 << 30;
    for (auto& v : eigen.left()) m = std::min(m, *exact_valuation(v, space.padic(i)));
    d.push_back(m);
  }
  return d;
}

CloudEmbedder::CloudEmbedder(const RepresentationSpace& space, const EigenData& eigen, int padic_digits)
    : space_(&space), eigen_(&eigen), n_(eigen.size()), arch_dim_(space.arch_dimension()), digits_(padic_digits) {
  arch_basis_.assign(static_cast<std::size_t>(arch_dim_) * n_, 0);
  for (int i = 0; i < n_; ++i) {
    int row = 0;
    for (std::size_t p = 0; p < space.arch().size(); ++p) {
      Complex z = space.arch_value(eigen.left()[i], p);
      arch_basis_[row++ * n_ + i] = z.real();
      if (space.arch()[p].is_complex) arch_basis_[row++ * n_ + i] = z.imag();
    }
  }
  std::vector<int> d = d_p_values(eigen, space);
  for (std::size_t p = 0; p < space.padic_count(); ++p) {
    PadicPart part;
    part.d = d[p];
    const AlphaPartRing& ring = space.padic(p);
    if (ring.digit_model() && ring.degree() <= FastPadicRing::kMaxDegree) {
      part.ring = std::make_unique<FastPadicRing>(ring);
      // each extracted digit costs one p-adic digit of coefficient precision
      int k = part.ring->digits_precision() - 1;
      if (digits_ > k) digits_ = k;
      for (auto& v : eigen.left()) part.basis.push_back(part.ring->from(embed_padic(v, ring), -part.d));
    }
    padic_.push_back(std::move(part));
  }
}

void CloudEmbedder::arch(const std::int64_t* c, long double* out) const {
  for (int r = 0; r < arch_dim_; ++r) {
    long double s = 0;
    for (int i = 0; i < n_; ++i) s += arch_basis_[r * n_ + i] * static_cast<long double>(c[i]);
    out[r] = s;
  }
}

FastPadicRing::Elem CloudEmbedder::padic(const std::int64_t* c, std::size_t p) const {
  const PadicPart& part = padic_[p];
  FastPadicRing::Elem acc;
  for (int i = 0; i < n_; ++i)
    if (c[i] != 0) acc = part.ring->add(acc, part.ring->scale(part.basis[i], c[i]));
  return acc;
}

void CloudEmbedder::embed(const std::int64_t* c, long double* out) const {
  arch(c, out);
  for (std::size_t p = 0; p < padic_.size(); ++p) {
    if (padic_[p].ring) {
      out[arch_dim_ + p] = padic_[p].ring->model(padic(c, p), -padic_[p].d, digits_);
    } else {
      std::vector<std::int64_t> cv(c, c + n_);
      AlgebraicNumber x = eigen_->pair(cv);
      out[arch_dim_ + p] = coefficient_model(embed_padic(x, space_->padic(p)), 12);
    }
  }
}

}  // namespace rauzy
