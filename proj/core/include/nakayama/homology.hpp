#pragma once

#include <compare>
#include <optional>
#include <string>

#include "nakayama/algebra.hpp"

namespace nakayama {

/// Natural number or infinity; used for projective, injective and global
/// dimensions.
class ExtendedNat {
 public:
  constexpr ExtendedNat() = default;
  constexpr ExtendedNat(unsigned value) : value_(value) {}  // NOLINT(implicit)
  static constexpr ExtendedNat infinity() {
    ExtendedNat x;
    x.value_.reset();
    return x;
  }

  constexpr bool is_infinite() const noexcept { return !value_.has_value(); }
  /// Precondition: finite.
  constexpr unsigned value() const { return *value_; }

  friend constexpr bool operator==(const ExtendedNat&, const ExtendedNat&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtendedNat& a, const ExtendedNat& b) {
    if (a.is_infinite() || b.is_infinite())
      return a.is_infinite() == b.is_infinite()
                 ? std::strong_ordering::equal
                 : (a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less);
    return *a.value_ <=> *b.value_;
  }

 private:
  std::optional<unsigned> value_ = 0u;
};

std::string to_string(const ExtendedNat& x);

/// dim Hom(m, n): one basis map per length k whose quotient of m equals the
/// length-k submodule of n.
int hom_dim(const Algebra& a, const IndecModule& m, const IndecModule& n);

/// Kernel of the projective cover P(top) -> m.
MaybeModule syzygy(const Algebra& a, const IndecModule& m);
/// Cokernel of the injective envelope m -> I(soc m).
MaybeModule cosyzygy(const Algebra& a, const IndecModule& m);

/// Length of the syzygy chain; infinity once a (top,len) recurs.
ExtendedNat proj_dim(const Algebra& a, const IndecModule& m);
ExtendedNat inj_dim(const Algebra& a, const IndecModule& m);

/// Auslander-Reiten translate: M(top-1, len), zero on projectives.
MaybeModule tau(const Algebra& a, const IndecModule& m);
/// Inverse translate: M(top+1, len), zero on injectives.
MaybeModule tau_inv(const Algebra& a, const IndecModule& m);

/// dim Ext^1(m, n) from 0 -> Ωm -> P(top m) -> m -> 0:
/// hom(Ωm, n) - hom(P, n) + hom(m, n).
int ext1_dim(const Algebra& a, const IndecModule& m, const IndecModule& n);
/// dim Ext^i(m, n) for i >= 1 by dimension shifting.
int ext_dim(const Algebra& a, int degree, const IndecModule& m, const IndecModule& n);
/// Sum of ext1_dim over all ordered summand pairs.
int ext1_dim(const Algebra& a, const ModuleSet& m, const ModuleSet& n);

struct GorensteinProfile {
  ExtendedNat gldim;
  ModuleSet i0;  ///< basic part of the injective envelope of the regular module
  ModuleSet i1;  ///< basic part of the second term of its injective resolution
  bool i0_projective = false;
  bool i1_projective = false;
  bool is_1_gorenstein = false;
  bool is_auslander = false;
};

GorensteinProfile gorenstein_profile(const Algebra& a);

/// Ω^{-1} of the regular module: cosyzygies of the P(i), zeros dropped.
ModuleSet cosyzygy_of_regular(const Algebra& a);

}  // namespace nakayama
