#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qym/scalar.hpp"

namespace qym {

/// A word in the generators of a presentation (sequence of generator ids).
using Word = std::basic_string<unsigned char>;

using LinTerms = std::vector<std::pair<ScalarExpr, Word>>;

struct GenInfo {
  std::string name;
  int weight = 1;     // term-order weight
  bool central = false;
  int factor = 0;     // tensor factor tag (0 for plain algebras)
  ScalarExpr star_coeff = ScalarExpr::one();
  Word star_word;     // image of the involution on this generator
};

struct Rule {
  Word lhs;
  LinTerms rhs;
};

class AlgebraElement;

/// A *-algebra presented by generators, a weighted deglex word order and a
/// terminating rewrite system with unique normal forms (local confluence is
/// machine-checked on all rule overlaps at construction).
class AlgebraPresentation {
 public:
  AlgebraPresentation(std::string name, std::vector<GenInfo> gens, std::vector<Rule> rules,
                      bool commutative);

  const std::string& name() const { return name_; }
  const std::vector<GenInfo>& gens() const { return gens_; }
  size_t num_gens() const { return gens_.size(); }
  bool commutative() const { return commutative_; }
  const std::vector<Rule>& rules() const { return rules_; }

  int gen_by_name(const std::string& n) const;  // -1 if absent

  /// Strict weighted-deglex order: (weight, length, lex).
  bool word_less(const Word& a, const Word& b) const;

  /// Normal form of a single word as a linear combination of normal words.
  AlgebraElement normal_form_word(const Word& w) const;

  bool word_is_normal(const Word& w) const;
  bool word_is_central(const Word& w) const;

  /// Validation run at construction; throws EngineError with the first
  /// violated property. Exposed for tests.
  void validate() const;

  std::string render_word(const Word& w) const;

 private:
  struct RedexPos {
    int rule = -1;
    size_t pos = 0;
  };
  RedexPos find_redex(const Word& w) const;

  std::string name_;
  std::vector<GenInfo> gens_;
  std::vector<Rule> rules_;
  bool commutative_;
  mutable std::mutex cache_mu_;
  mutable std::map<Word, std::map<Word, ScalarExpr>> nf_cache_;
};

/// Normal-form linear combination of words over a presentation.
class AlgebraElement {
 public:
  AlgebraElement() : pres_(nullptr) {}
  explicit AlgebraElement(const AlgebraPresentation* p) : pres_(p) {}

  static AlgebraElement zero(const AlgebraPresentation* p) { return AlgebraElement(p); }
  static AlgebraElement unit(const AlgebraPresentation* p);
  static AlgebraElement scalar(const AlgebraPresentation* p, const ScalarExpr& c);
  static AlgebraElement gen(const AlgebraPresentation* p, int g);
  /// Normal form of an arbitrary word.
  static AlgebraElement word(const AlgebraPresentation* p, const Word& w,
                             const ScalarExpr& c = ScalarExpr::one());

  const AlgebraPresentation* pres() const { return pres_; }
  const std::map<Word, ScalarExpr>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  ScalarExpr scalar_value() const;  // requires is_scalar()
  bool is_central() const;

  void add_term(const Word& w, const ScalarExpr& c);

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a);
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  AlgebraElement scaled(const ScalarExpr& c) const;
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  /// Antimultiplicative conjugate-linear involution.
  AlgebraElement star() const;

  /// Inverse of a single-term element whose word consists of central
  /// invertible generators (e.g. scalar * r^k). Throws otherwise.
  AlgebraElement central_inverse() const;

  AlgebraElement substitute(const std::map<Var, ScalarExpr>& bindings) const;
  AlgebraElement bind_q(const mpq_class& q0) const;

  std::string str() const;

 private:
  const AlgebraPresentation* pres_;
  std::map<Word, ScalarExpr> terms_;
};

/// Algebra morphism given by generator images; validated so that every
/// rewrite rule maps to zero and the involution is intertwined.
class Morphism {
 public:
  Morphism(std::string name, const AlgebraPresentation* src, const AlgebraPresentation* dst,
           std::vector<AlgebraElement> images);

  const std::string& name() const { return name_; }
  const AlgebraPresentation* src() const { return src_; }
  const AlgebraPresentation* dst() const { return dst_; }
  const AlgebraElement& image(int g) const { return images_.at(g); }

  AlgebraElement apply(const AlgebraElement& x) const;

  /// Throws EngineError naming the first violated relation.
  void validate() const;

 private:
  std::string name_;
  const AlgebraPresentation* src_;
  const AlgebraPresentation* dst_;
  std::vector<AlgebraElement> images_;
};

/// Derivation on a commutative presentation from a generator table,
/// validated to annihilate every rewrite rule.
class Derivation {
 public:
  Derivation(const AlgebraPresentation* p, std::vector<AlgebraElement> images);
  AlgebraElement apply(const AlgebraElement& x) const;

 private:
  const AlgebraPresentation* pres_;
  std::vector<AlgebraElement> images_;
};

// --- built-in presentations -------------------------------------------------

/// A(SU_q(2)) with generators a < a* < c < c* and the standard relations
/// ac = q ca, ac* = q c*a, cc* = c*c, a*a + c*c = 1, aa* + q^2 cc* = 1.
/// Passing q = 1 gives the commutative coordinate algebra of SU(2).
std::shared_ptr<AlgebraPresentation> make_suq2(const ScalarExpr& q, const std::string& name);

/// A(R^4_q \ {0}): x1..x4 with the q-plane relations, a central invertible
/// r with r^2 = q x1x4 + q^2 x2x3.
std::shared_ptr<AlgebraPresentation> make_r4q();

/// Commutative Laurent algebra in r, r^-1.
std::shared_ptr<AlgebraPresentation> make_radial();

/// Commutative chart algebra x0..x3, s_c with s_c * sum(x_mu^2) = 1.
std::shared_ptr<AlgebraPresentation> make_chart();

/// U_q(su(2)) as a presented algebra with PBW normal words F^a K^b E^c.
std::shared_ptr<AlgebraPresentation> make_uq(const ScalarExpr& q);

/// Tensor product presentation: factor-1 generators first, cross
/// commutation between factors, factor tags 1 and 2.
std::shared_ptr<AlgebraPresentation> make_product(const AlgebraPresentation& a1,
                                                  const AlgebraPresentation& a2,
                                                  const std::string& name);

/// Generator-index helpers for product presentations.
inline int product_gen1(int g) { return g; }
int product_gen2(const AlgebraPresentation& a1, int g);

}  // namespace qym
