#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "qym/hopf.hpp"

namespace qym {

/// A wedge word: sequence of basis-1-form ids.
using WedgeWord = Word;

using WedgeLin = std::vector<std::pair<ScalarExpr, WedgeWord>>;

/// Braiding on pairs of basis 1-forms: (c,d) -> sum of coeff * (a,b).
using BraidTable =
    std::map<std::pair<int, int>, std::vector<std::pair<ScalarExpr, std::pair<int, int>>>>;

struct BasisForm {
  std::string name;
  int factor = 0;  // index into CalculusSpec::factors
};

enum class DiffStrategy {
  kLeibnizTable,   // d on generators from a table, extended by the Leibniz rule
  kTangentAction,  // d x = sum_a (X_a |> x) w_a
};

struct FactorSpec {
  const AlgebraPresentation* factor_pres = nullptr;
  int gen_begin = 0;  // generator id range within the full presentation
  int gen_end = 0;
  int gen_offset = 0;   // full id = factor id + gen_offset
  int form_offset = 0;  // full basis id = factor basis id + form_offset
  DiffStrategy strategy = DiffStrategy::kLeibnizTable;
  bool coefficients_cross_forms = true;
  // kTangentAction only:
  std::shared_ptr<const DualPairing> pairing;
  std::array<AlgebraElement, 3> tangent_ops;
  std::array<int, 3> form_ids{};  // full basis ids of w_-, w_+, w_z
};

class FormElement;

/// A differential calculus as data: basis 1-forms, wedge rewrite rules,
/// differential tables, form involution, optional braiding.
class CalculusSpec {
 public:
  std::string name;
  const AlgebraPresentation* pres = nullptr;
  int top_degree = 0;
  std::vector<BasisForm> basis;
  std::map<std::pair<int, int>, WedgeLin> wedge_rules;
  // d on basis 1-forms (scalar coefficients) and on algebra generators.
  std::map<int, WedgeLin> dbasis;
  std::vector<std::vector<std::pair<AlgebraElement, int>>> dgen;
  std::map<int, std::pair<ScalarExpr, int>> star1;
  std::vector<FactorSpec> factors;
  std::optional<BraidTable> braiding;

  int factor_of_gen(int g) const;

  /// Normalizes a wedge word with the rewrite rules; result words are normal.
  WedgeLin wedge_normalize(const WedgeWord& w) const;
  bool word_is_normal(const WedgeWord& w) const;

  /// All normal wedge words of the given degree, ascending order.
  std::vector<WedgeWord> basis_words(int degree) const;
  /// Factor-1 degree of a wedge word (bidegree bookkeeping for products).
  int bidegree1(const WedgeWord& w) const;

  /// True if the coefficient may move across every 1-form of the word.
  bool can_cross(const AlgebraElement& coeff, const WedgeWord& w) const;

  /// d of a factor-local algebra word segment (letters all in one factor).
  FormElement d_segment(int factor_idx, const Word& seg) const;

  std::string render_wedge(const WedgeWord& w) const;
};

/// Graded element of a calculus: per wedge word, a left algebra coefficient.
class FormElement {
 public:
  FormElement() : calc_(nullptr) {}
  explicit FormElement(const CalculusSpec* c) : calc_(c) {}

  static FormElement zero(const CalculusSpec* c) { return FormElement(c); }
  static FormElement from_algebra(const CalculusSpec* c, const AlgebraElement& a);
  static FormElement scalar(const CalculusSpec* c, const ScalarExpr& s);
  static FormElement basis(const CalculusSpec* c, int b, const ScalarExpr& coeff = ScalarExpr::one());
  static FormElement word(const CalculusSpec* c, const WedgeWord& w,
                          const AlgebraElement& coeff);

  const CalculusSpec* calc() const { return calc_; }
  const std::map<WedgeWord, AlgebraElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous(int* degree_out = nullptr) const;
  FormElement degree_part(int k) const;
  AlgebraElement coefficient(const WedgeWord& w) const;

  void add_term(const WedgeWord& w, const AlgebraElement& c);

  friend FormElement operator+(const FormElement& a, const FormElement& b);
  friend FormElement operator-(const FormElement& a, const FormElement& b);
  friend FormElement operator-(const FormElement& a);
  FormElement scaled(const ScalarExpr& c) const;
  /// Left multiplication by an algebra element (always permitted).
  FormElement left_mul(const AlgebraElement& a) const;
  friend bool operator==(const FormElement& a, const FormElement& b);
  friend bool operator!=(const FormElement& a, const FormElement& b) { return !(a == b); }

  std::string str() const;

  FormElement substitute(const std::map<Var, ScalarExpr>& bindings) const;
  FormElement bind_q(const mpq_class& q0) const;

 private:
  const CalculusSpec* calc_;
  std::map<WedgeWord, AlgebraElement> terms_;
};

/// Wedge product. Throws EngineError("unsupported bimodule move ...") if a
/// right coefficient cannot be moved across the left factor's forms.
FormElement wedge(const FormElement& x, const FormElement& y);

/// Exterior differential (graded Leibniz; d on degree 0 per factor strategy).
FormElement differential(const FormElement& x);

/// Graded involution; requires coefficients that can cross the starred words.
FormElement form_star(const FormElement& x);

/// sigma applied to an element of Gamma (x) Gamma (basis-pair combination).
std::map<std::pair<int, int>, ScalarExpr> braid_apply(
    const CalculusSpec& c, const std::map<std::pair<int, int>, ScalarExpr>& v);

// --- built-in calculi --------------------------------------------------------

/// Woronowicz 3D left-covariant calculus on A(SU_q(2)). The z-wedge signs
/// are exponents of q in w_z^w_- = -q^{e_minus} w_-^w_z and
/// w_z^w_+ = -q^{e_plus} w_+^w_z; (4, -4) is the consistent assignment
/// (see the sign-resolution check).
std::shared_ptr<CalculusSpec> make_woronowicz(const AlgebraPresentation* suq2,
                                              std::shared_ptr<const DualPairing> pairing,
                                              const TangentSpace& ts, int e_minus = 4,
                                              int e_plus = -4);

/// Classical su(2)-invariant calculus on S^3 (basis w1, w2, w3).
std::shared_ptr<CalculusSpec> make_classical_s3(const AlgebraPresentation* su2);

/// One-dimensional radial calculus on C[r, r^-1].
std::shared_ptr<CalculusSpec> make_radial_calculus(const AlgebraPresentation* radial);

/// Commutative R^4 chart calculus (basis dx0..dx3).
std::shared_ptr<CalculusSpec> make_chart_calculus(const AlgebraPresentation* chart);

/// Tensor product calculus on make_product(pres1, pres2).
std::shared_ptr<CalculusSpec> make_product_calculus(const CalculusSpec& c1,
                                                    const CalculusSpec& c2,
                                                    const AlgebraPresentation* product_pres,
                                                    const std::string& name);

/// Embeds a factor algebra element / form into a product calculus.
AlgebraElement embed_algebra(const CalculusSpec& prod, int factor_idx, const AlgebraElement& a);
FormElement embed_form(const CalculusSpec& prod, int factor_idx, const FormElement& f);

}  // namespace qym
