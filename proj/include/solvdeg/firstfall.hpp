#pragma once

#include <optional>
#include <vector>

#include "solvdeg/polynomial.hpp"

namespace solvdeg {

/// B = F_q[x_1..x_n] / (x_1^q, ..., x_n^q) with q the field size.
class TruncatedRing {
 public:
  explicit TruncatedRing(RingPtr ring);

  std::uint32_t q() const { return ring_->field.modulus(); }
  const RingPtr& ring() const noexcept { return ring_; }
  /// Monomials of degree e with every exponent below q.
  std::vector<Monomial> basis(unsigned e) const;
  bool is_standard(const Monomial& m) const;
  /// Image of f in B (terms with an exponent >= q dropped).
  Polynomial reduce(const Polynomial& f) const;
  unsigned top_degree() const { return static_cast<unsigned>(ring_->nvars()) * (q() - 1); }

 private:
  RingPtr ring_;
};

/// dim of the kernel of B_e^r -> B_{e+2}, (b_i) -> sum b_i f_i.
std::size_t syzygy_dim(std::span<const Polynomial> F, unsigned e);
/// dim of the degree-e part of the module spanned by the Koszul syzygies
/// f_j e_i - f_i e_j and the field syzygies f_i^(q-1) e_i.
std::size_t trivial_syzygy_dim(std::span<const Polynomial> F, unsigned e);

struct FirstFallReport {
  std::optional<int> first_fall_degree;
  struct Dims {
    unsigned e;
    std::size_t syz, triv;
  };
  std::vector<Dims> dims;
};

/// Smallest d with Syz_{d-2} strictly larger than Triv_{d-2}, for quadratic
/// generators (inhomogeneous ones are replaced by their top parts). Searches
/// d - 2 up to n(q - 1); beyond that B is zero.
FirstFallReport first_fall_degree(const Ideal& I);

}  // namespace solvdeg
