#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>

#include "qym/algebra.hpp"

namespace qym {

/// Element of A (x) A with both legs in normal form.
class TensorElement {
 public:
  explicit TensorElement(const AlgebraPresentation* p) : pres_(p) {}

  const std::map<std::pair<Word, Word>, ScalarExpr>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Word& w1, const Word& w2, const ScalarExpr& c);
  friend TensorElement operator+(const TensorElement& a, const TensorElement& b);
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  TensorElement scaled(const ScalarExpr& c) const;
  friend bool operator==(const TensorElement& a, const TensorElement& b);

  const AlgebraPresentation* pres() const { return pres_; }

 private:
  const AlgebraPresentation* pres_;
  std::map<std::pair<Word, Word>, ScalarExpr> terms_;
};

struct HopfGenData {
  std::vector<std::pair<AlgebraElement, AlgebraElement>> coproduct;
  ScalarExpr counit = ScalarExpr::zero();
  AlgebraElement antipode;
};

/// Hopf structure on a presented algebra: coproduct / counit / antipode
/// tables on generators, extended (anti)multiplicatively. validate()
/// machine-checks well-definedness and the Hopf axioms on generators.
class HopfData {
 public:
  HopfData(const AlgebraPresentation* p, std::vector<HopfGenData> gens);

  const AlgebraPresentation* pres() const { return pres_; }

  TensorElement coproduct(const AlgebraElement& x) const;
  TensorElement coproduct_word(const Word& w) const;
  ScalarExpr counit(const AlgebraElement& x) const;
  AlgebraElement antipode(const AlgebraElement& x) const;

  void validate() const;

 private:
  const AlgebraPresentation* pres_;
  std::vector<HopfGenData> gens_;
  mutable std::mutex mu_;
  mutable std::map<Word, std::map<std::pair<Word, Word>, ScalarExpr>> cop_cache_;
};

/// Nondegenerate Hopf pairing H x A -> k given on generator pairs and
/// extended by <hh', x> = <h (x) h', Delta x>, <h, xy> = <Delta h, x (x) y>.
class DualPairing {
 public:
  DualPairing(const HopfData* h, const HopfData* a,
              std::map<std::pair<int, int>, ScalarExpr> table);

  ScalarExpr pair(const AlgebraElement& h, const AlgebraElement& x) const;
  /// h |> x = x_(1) <h, x_(2)>
  AlgebraElement act_left(const AlgebraElement& h, const AlgebraElement& x) const;
  /// x <| h = <h, x_(1)> x_(2)
  AlgebraElement act_right(const AlgebraElement& x, const AlgebraElement& h) const;

  const HopfData* hopf_h() const { return h_; }
  const HopfData* hopf_a() const { return a_; }

 private:
  ScalarExpr pair_words(const Word& hw, const Word& aw) const;
  ScalarExpr pair_gen_word(int g, const Word& aw) const;

  const HopfData* h_;
  const HopfData* a_;
  std::map<std::pair<int, int>, ScalarExpr> table_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<Word, Word>, ScalarExpr> cache_;
};

/// The quantum tangent space of the 3D left-covariant calculus: operators
/// X_-, X_+, X_z in U_q(su(2)), the sigma-commutator structure constants
/// and the constant lambda = 1 + q^2.
struct TangentSpace {
  std::array<AlgebraElement, 3> X;  // indices 0,1,2 = -,+,z
  ScalarExpr f[3][3][3];
  ScalarExpr lambda;
};

std::shared_ptr<HopfData> make_suq2_hopf(const AlgebraPresentation* suq2,
                                         const ScalarExpr& q);
std::shared_ptr<HopfData> make_glq_hopf(const AlgebraPresentation* r4q);
std::shared_ptr<HopfData> make_uq_hopf(const AlgebraPresentation* uq, const ScalarExpr& q);

std::shared_ptr<DualPairing> make_uq_suq2_pairing(const HopfData* uq_hopf,
                                                  const HopfData* suq2_hopf);

TangentSpace make_tangent_space(const AlgebraPresentation* uq);

/// sigma-commutator [X_a, X_b]_sigma = X_a X_b - T^{ab}_{cd} X_c X_d, where
/// T^{ab}_{cd} is the coefficient of w_a (x) w_b in sigma(w_c (x) w_d).
/// Used to verify the structure-constant table against the braiding.
AlgebraElement sigma_commutator(const TangentSpace& ts,
                                const std::map<std::pair<int, int>,
                                               std::vector<std::pair<ScalarExpr, std::pair<int, int>>>>& braid,
                                int a, int b);

}  // namespace qym
