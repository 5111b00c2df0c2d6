#include "qym/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace qym {

namespace {

Word mkword(std::initializer_list<int> ids) {
  Word w;
  for (int i : ids) w.push_back(static_cast<unsigned char>(i));
  return w;
}

}  // namespace

AlgebraPresentation::AlgebraPresentation(std::string name, std::vector<GenInfo> gens,
                                         std::vector<Rule> rules, bool commutative)
    : name_(std::move(name)), gens_(std::move(gens)), rules_(std::move(rules)),
      commutative_(commutative) {
  validate();
}

int AlgebraPresentation::gen_by_name(const std::string& n) const {
  for (size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == n) return static_cast<int>(i);
  return -1;
}

bool AlgebraPresentation::word_less(const Word& a, const Word& b) const {
  long wa = 0, wb = 0;
  for (unsigned char g : a) wa += gens_[g].weight;
  for (unsigned char g : b) wb += gens_[g].weight;
  if (wa != wb) return wa < wb;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

AlgebraPresentation::RedexPos AlgebraPresentation::find_redex(const Word& w) const {
  for (size_t pos = 0; pos < w.size(); ++pos) {
    for (size_t r = 0; r < rules_.size(); ++r) {
      const Word& l = rules_[r].lhs;
      if (pos + l.size() > w.size()) continue;
      if (w.compare(pos, l.size(), l) == 0) return {static_cast<int>(r), pos};
    }
  }
  return {};
}

bool AlgebraPresentation::word_is_normal(const Word& w) const {
  return find_redex(w).rule < 0;
}

bool AlgebraPresentation::word_is_central(const Word& w) const {
  if (commutative_) return true;
  for (unsigned char g : w)
    if (!gens_[g].central) return false;
  return true;
}

AlgebraElement AlgebraPresentation::normal_form_word(const Word& w) const {
  for (unsigned char g : w)
    if (g >= gens_.size()) throw EngineError(name_ + ": unknown generator in word");
  {
    std::lock_guard<std::mutex> lk(cache_mu_);
    auto it = nf_cache_.find(w);
    if (it != nf_cache_.end()) {
      AlgebraElement out(this);
      for (const auto& [nw, c] : it->second) out.add_term(nw, c);
      return out;
    }
  }
  RedexPos rp = find_redex(w);
  AlgebraElement out(this);
  if (rp.rule < 0) {
    out.add_term(w, ScalarExpr::one());
  } else {
    const Rule& rule = rules_[rp.rule];
    Word prefix = w.substr(0, rp.pos);
    Word suffix = w.substr(rp.pos + rule.lhs.size());
    for (const auto& [c, rw] : rule.rhs) {
      Word nw = prefix + rw + suffix;
      AlgebraElement part = normal_form_word(nw);
      for (const auto& [pw, pc] : part.terms()) out.add_term(pw, pc * c);
    }
  }
  {
    std::lock_guard<std::mutex> lk(cache_mu_);
    nf_cache_.emplace(w, out.terms());
  }
  return out;
}

void AlgebraPresentation::validate() const {
  // Termination: every rule strictly decreases the word order.
  for (const Rule& r : rules_) {
    if (r.lhs.size() < 2) throw EngineError(name_ + ": rule pattern shorter than two letters");
    for (const auto& [c, w] : r.rhs) {
      if (!word_less(w, r.lhs))
        throw EngineError(name_ + ": rule does not decrease the word order: " + render_word(r.lhs));
    }
  }
  // Star well-defined: star maps each relation to a combination reducing to zero.
  for (const Rule& r : rules_) {
    AlgebraElement lhs = AlgebraElement::word(this, r.lhs).star();
    AlgebraElement rhs(this);
    for (const auto& [c, w] : r.rhs) {
      AlgebraElement t = AlgebraElement::word(this, w, c).star();
      rhs = rhs + t;
    }
    if (lhs != rhs)
      throw EngineError(name_ + ": involution does not preserve relation " + render_word(r.lhs));
  }
  // Star is an involution on generators.
  for (size_t g = 0; g < gens_.size(); ++g) {
    AlgebraElement gg = AlgebraElement::gen(this, static_cast<int>(g));
    if (gg.star().star() != gg)
      throw EngineError(name_ + ": involution not involutive on " + gens_[g].name);
  }
  // Local confluence on all rule overlaps.
  for (const Rule& r1 : rules_) {
    for (const Rule& r2 : rules_) {
      // Suffix of r1.lhs equals prefix of r2.lhs.
      for (size_t k = 1; k < std::min(r1.lhs.size(), r2.lhs.size()); ++k) {
        if (r1.lhs.compare(r1.lhs.size() - k, k, r2.lhs, 0, k) != 0) continue;
        Word w = r1.lhs + r2.lhs.substr(k);
        AlgebraElement a(this), b(this);
        for (const auto& [c, rw] : r1.rhs) {
          AlgebraElement t = AlgebraElement::word(this, rw + r2.lhs.substr(k), c);
          a = a + t;
        }
        for (const auto& [c, rw] : r2.rhs) {
          AlgebraElement t =
              AlgebraElement::word(this, r1.lhs.substr(0, r1.lhs.size() - k) + rw, c);
          b = b + t;
        }
        if (a != b)
          throw EngineError(name_ + ": rewrite system not locally confluent on overlap " +
                            render_word(w));
      }
      // Containment overlap: r2.lhs inside r1.lhs.
      if (&r1 != &r2 && r1.lhs.size() > r2.lhs.size()) {
        for (size_t pos = 0; pos + r2.lhs.size() <= r1.lhs.size(); ++pos) {
          if (r1.lhs.compare(pos, r2.lhs.size(), r2.lhs) != 0) continue;
          AlgebraElement a(this), b(this);
          for (const auto& [c, rw] : r1.rhs) a = a + AlgebraElement::word(this, rw, c);
          for (const auto& [c, rw] : r2.rhs) {
            Word w = r1.lhs.substr(0, pos) + rw + r1.lhs.substr(pos + r2.lhs.size());
            b = b + AlgebraElement::word(this, w, c);
          }
          if (a != b)
            throw EngineError(name_ + ": rewrite system not locally confluent (containment)");
        }
      }
    }
  }
}

std::string AlgebraPresentation::render_word(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ".";
    os << gens_[w[i]].name;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement AlgebraElement::unit(const AlgebraPresentation* p) {
  AlgebraElement e(p);
  e.add_term(Word(), ScalarExpr::one());
  return e;
}

AlgebraElement AlgebraElement::scalar(const AlgebraPresentation* p, const ScalarExpr& c) {
  AlgebraElement e(p);
  e.add_term(Word(), c);
  return e;
}

AlgebraElement AlgebraElement::gen(const AlgebraPresentation* p, int g) {
  if (g < 0 || g >= static_cast<int>(p->num_gens()))
    throw EngineError(p->name() + ": unknown generator");
  Word w;
  w.push_back(static_cast<unsigned char>(g));
  return word(p, w);
}

AlgebraElement AlgebraElement::word(const AlgebraPresentation* p, const Word& w,
                                    const ScalarExpr& c) {
  return p->normal_form_word(w).scaled(c);
}

bool AlgebraElement::is_scalar() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.empty();
}

ScalarExpr AlgebraElement::scalar_value() const {
  if (terms_.empty()) return ScalarExpr::zero();
  if (!is_scalar()) throw EngineError("AlgebraElement: not a scalar");
  return terms_.begin()->second;
}

bool AlgebraElement::is_central() const {
  if (!pres_) return true;
  for (const auto& [w, c] : terms_)
    if (!pres_->word_is_central(w)) return false;
  return true;
}

void AlgebraElement::add_term(const Word& w, const ScalarExpr& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_[w] = c;
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

static void check_same(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.pres() && b.pres() && a.pres() != b.pres())
    throw EngineError("AlgebraElement: presentation mismatch");
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  check_same(a, b);
  AlgebraElement r = a.pres() ? a : b;
  if (!a.pres()) return b;
  for (const auto& [w, c] : b.terms_) r.add_term(w, c);
  return r;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  check_same(a, b);
  AlgebraElement r = a;
  for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
  return r;
}

AlgebraElement operator-(const AlgebraElement& a) {
  AlgebraElement r(a.pres());
  for (const auto& [w, c] : a.terms_) r.terms_[w] = -c;
  return r;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  check_same(a, b);
  const AlgebraPresentation* p = a.pres() ? a.pres() : b.pres();
  AlgebraElement r(p);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      AlgebraElement part = p->normal_form_word(wa + wb);
      ScalarExpr c = ca * cb;
      for (const auto& [w, pc] : part.terms()) r.add_term(w, pc * c);
    }
  }
  return r;
}

AlgebraElement AlgebraElement::scaled(const ScalarExpr& c) const {
  AlgebraElement r(pres_);
  if (c.is_zero()) return r;
  for (const auto& [w, k] : terms_) r.terms_[w] = k * c;
  return r;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  check_same(a, b);
  return a.terms_ == b.terms_;
}

AlgebraElement AlgebraElement::star() const {
  AlgebraElement r(pres_);
  for (const auto& [w, c] : terms_) {
    AlgebraElement img = AlgebraElement::scalar(pres_, c.conj());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const GenInfo& g = pres_->gens()[*it];
      img = img * AlgebraElement::word(pres_, g.star_word, g.star_coeff);
    }
    r = r + img;
  }
  return r;
}

AlgebraElement AlgebraElement::central_inverse() const {
  if (terms_.size() != 1) throw EngineError("central_inverse: not a single term");
  const auto& [w, c] = *terms_.begin();
  if (c.is_zero()) throw EngineError("central_inverse: zero");
  AlgebraElement r = AlgebraElement::scalar(pres_, c.inv());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const GenInfo& g = pres_->gens()[*it];
    if (!g.central && !pres_->commutative())
      throw EngineError("central_inverse: non-central letter " + g.name);
    // Find a generator h with g*h = 1 (e.g. r and r^-1).
    bool found = false;
    for (size_t h = 0; h < pres_->num_gens(); ++h) {
      Word pair;
      pair.push_back(*it);
      pair.push_back(static_cast<unsigned char>(h));
      AlgebraElement prod = pres_->normal_form_word(pair);
      if (prod.is_scalar() && prod.scalar_value().is_one()) {
        Word hw;
        hw.push_back(static_cast<unsigned char>(h));
        r = r * AlgebraElement::word(pres_, hw);
        found = true;
        break;
      }
    }
    if (!found) throw EngineError("central_inverse: letter not invertible: " + g.name);
  }
  return r;
}

AlgebraElement AlgebraElement::substitute(const std::map<Var, ScalarExpr>& bindings) const {
  AlgebraElement r(pres_);
  for (const auto& [w, c] : terms_) r.add_term(w, c.substitute(bindings));
  return r;
}

AlgebraElement AlgebraElement::bind_q(const mpq_class& q0) const {
  AlgebraElement r(pres_);
  for (const auto& [w, c] : terms_) r.add_term(w, c.bind_q(q0));
  return r;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.str();
    if (w.empty()) {
      os << cs;
    } else if (cs == "1") {
      os << pres_->render_word(w);
    } else {
      bool atomic = cs.find_first_of("+- ") == std::string::npos;
      os << (atomic ? cs : "(" + cs + ")") << "*" << pres_->render_word(w);
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Morphism

Morphism::Morphism(std::string name, const AlgebraPresentation* src,
                   const AlgebraPresentation* dst, std::vector<AlgebraElement> images)
    : name_(std::move(name)), src_(src), dst_(dst), images_(std::move(images)) {
  if (images_.size() != src_->num_gens())
    throw EngineError(name_ + ": morphism needs one image per generator");
  validate();
}

AlgebraElement Morphism::apply(const AlgebraElement& x) const {
  if (x.pres() != src_) throw EngineError(name_ + ": element from the wrong algebra");
  AlgebraElement out(dst_);
  for (const auto& [w, c] : x.terms()) {
    AlgebraElement img = AlgebraElement::scalar(dst_, c);
    for (unsigned char g : w) img = img * images_[g];
    out = out + img;
  }
  return out;
}

void Morphism::validate() const {
  for (const Rule& r : src_->rules()) {
    AlgebraElement lhs = AlgebraElement::unit(dst_);
    for (unsigned char g : r.lhs) lhs = lhs * images_[g];
    AlgebraElement rhs(dst_);
    for (const auto& [c, w] : r.rhs) {
      AlgebraElement t = AlgebraElement::scalar(dst_, c);
      for (unsigned char g : w) t = t * images_[g];
      rhs = rhs + t;
    }
    if (lhs != rhs)
      throw EngineError(name_ + ": morphism violates relation " + src_->render_word(r.lhs));
  }
  for (size_t g = 0; g < src_->num_gens(); ++g) {
    AlgebraElement via_src = apply(AlgebraElement::gen(src_, static_cast<int>(g)).star());
    AlgebraElement via_dst = images_[g].star();
    if (via_src != via_dst)
      throw EngineError(name_ + ": morphism does not intertwine the involution on " +
                        src_->gens()[g].name);
  }
}

// ---------------------------------------------------------------------------
// Derivation

Derivation::Derivation(const AlgebraPresentation* p, std::vector<AlgebraElement> images)
    : pres_(p), images_(std::move(images)) {
  if (!p->commutative()) throw EngineError("Derivation: commutative presentations only");
  if (images_.size() != p->num_gens()) throw EngineError("Derivation: one image per generator");
  for (const Rule& r : p->rules()) {
    AlgebraElement lhs = apply(AlgebraElement::word(p, r.lhs));
    AlgebraElement rhs(p);
    for (const auto& [c, w] : r.rhs) rhs = rhs + apply(AlgebraElement::word(p, w, c));
    if (lhs != rhs) throw EngineError("Derivation: does not annihilate relation");
  }
}

AlgebraElement Derivation::apply(const AlgebraElement& x) const {
  AlgebraElement out(pres_);
  for (const auto& [w, c] : x.terms()) {
    for (size_t i = 0; i < w.size(); ++i) {
      AlgebraElement t = AlgebraElement::word(pres_, w.substr(0, i), c);
      t = t * images_[w[i]];
      t = t * AlgebraElement::word(pres_, w.substr(i + 1));
      out = out + t;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Built-in presentations

std::shared_ptr<AlgebraPresentation> make_suq2(const ScalarExpr& q, const std::string& name) {
  // ids: 0 = a, 1 = a*, 2 = c, 3 = c*
  const int A = 0, AS = 1, C = 2, CS = 3;
  bool classical = q.is_one();
  std::vector<GenInfo> gens(4);
  gens[A] = {"a", 2, classical, 0, ScalarExpr::one(), mkword({AS})};
  gens[AS] = {"a*", 2, classical, 0, ScalarExpr::one(), mkword({A})};
  gens[C] = {"c", 1, classical, 0, ScalarExpr::one(), mkword({CS})};
  gens[CS] = {"c*", 1, classical, 0, ScalarExpr::one(), mkword({C})};
  ScalarExpr one = ScalarExpr::one();
  ScalarExpr qinv = one / q;
  std::vector<Rule> rules = {
      {mkword({C, A}), {{qinv, mkword({A, C})}}},
      {mkword({CS, A}), {{qinv, mkword({A, CS})}}},
      {mkword({C, AS}), {{q, mkword({AS, C})}}},
      {mkword({CS, AS}), {{q, mkword({AS, CS})}}},
      {mkword({CS, C}), {{one, mkword({C, CS})}}},
      {mkword({AS, A}), {{one, {}}, {-one, mkword({C, CS})}}},
      {mkword({A, AS}), {{one, {}}, {-(q * q), mkword({C, CS})}}},
  };
  return std::make_shared<AlgebraPresentation>(name, gens, rules, classical);
}

std::shared_ptr<AlgebraPresentation> make_r4q() {
  // ids: 0 = r^-1, 1 = r, 2 = x2, 3 = x3, 4 = x1, 5 = x4
  const int RI = 0, R = 1, X2 = 2, X3 = 3, X1 = 4, X4 = 5;
  ScalarExpr q = ScalarExpr::q_pow(1), qi = ScalarExpr::q_pow(-1), one = ScalarExpr::one();
  std::vector<GenInfo> gens(6);
  gens[RI] = {"r^-1", 1, true, 0, one, mkword({RI})};
  gens[R] = {"r", 1, true, 0, one, mkword({R})};
  gens[X2] = {"x2", 1, false, 0, one, mkword({X3})};
  gens[X3] = {"x3", 1, false, 0, one, mkword({X2})};
  gens[X1] = {"x1", 1, false, 0, q, mkword({X4})};
  gens[X4] = {"x4", 1, false, 0, qi, mkword({X1})};
  std::vector<Rule> rules;
  // q-plane commutations (x_i x_j = q x_j x_i for i < j numerically, i+j != 5).
  rules.push_back({mkword({X2, X1}), {{qi, mkword({X1, X2})}}});   // x2.x1 -> q^-1 x1.x2
  rules.push_back({mkword({X3, X1}), {{qi, mkword({X1, X3})}}});
  rules.push_back({mkword({X4, X2}), {{qi, mkword({X2, X4})}}});
  rules.push_back({mkword({X4, X3}), {{qi, mkword({X3, X4})}}});
  rules.push_back({mkword({X3, X2}), {{one, mkword({X2, X3})}}});  // x2x3 = x3x2
  // Localization: x1x4 rewrites to q^-1 r^2 - q x2x3, and the derived x4x1 form.
  rules.push_back({mkword({X1, X4}), {{qi, mkword({R, R})}, {-q, mkword({X2, X3})}}});
  rules.push_back({mkword({X4, X1}), {{qi, mkword({R, R})}, {-qi, mkword({X2, X3})}}});
  // r, r^-1 central and mutually inverse.
  for (int x : {X2, X3, X1, X4}) {
    rules.push_back({mkword({x, R}), {{one, mkword({R, x})}}});
    rules.push_back({mkword({x, RI}), {{one, mkword({RI, x})}}});
  }
  rules.push_back({mkword({R, RI}), {{one, {}}}});
  rules.push_back({mkword({RI, R}), {{one, {}}}});
  return std::make_shared<AlgebraPresentation>("R4q", gens, rules, false);
}

std::shared_ptr<AlgebraPresentation> make_radial() {
  const int R = 0, RI = 1;
  ScalarExpr one = ScalarExpr::one();
  std::vector<GenInfo> gens(2);
  gens[R] = {"r", 1, true, 0, one, mkword({R})};
  gens[RI] = {"r^-1", 1, true, 0, one, mkword({RI})};
  std::vector<Rule> rules = {
      {mkword({R, RI}), {{one, {}}}},
      {mkword({RI, R}), {{one, {}}}},
  };
  return std::make_shared<AlgebraPresentation>("radial", gens, rules, true);
}

std::shared_ptr<AlgebraPresentation> make_chart() {
  // ids: 0..3 = x0..x3, 4 = s_c (inverse squared norm).
  const int SC = 4;
  ScalarExpr one = ScalarExpr::one();
  std::vector<GenInfo> gens(5);
  for (int i = 0; i < 4; ++i)
    gens[i] = {"x" + std::to_string(i), 1, true, 0, one, mkword({i})};
  gens[SC] = {"s_c", 1, true, 0, one, mkword({SC})};
  std::vector<Rule> rules;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < i; ++j)
      rules.push_back({mkword({i, j}), {{one, mkword({j, i})}}});
  // s_c * |x|^2 = 1, oriented to eliminate x3^2 s_c.
  rules.push_back({mkword({3, 3, SC}),
                   {{one, {}},
                    {-one, mkword({0, 0, SC})},
                    {-one, mkword({1, 1, SC})},
                    {-one, mkword({2, 2, SC})}}});
  return std::make_shared<AlgebraPresentation>("chart", gens, rules, true);
}

std::shared_ptr<AlgebraPresentation> make_uq(const ScalarExpr& q) {
  // ids: 0 = F, 1 = K, 2 = K^-1, 3 = E; PBW normal words F^a K^b E^c.
  const int F = 0, K = 1, KI = 2, E = 3;
  ScalarExpr one = ScalarExpr::one();
  ScalarExpr qi = one / q;
  ScalarExpr lam = one / (q - qi);  // 1/(q - q^-1)
  std::vector<GenInfo> gens(4);
  gens[F] = {"F", 1, false, 0, one, mkword({E})};
  gens[K] = {"K", 1, false, 0, one, mkword({K})};
  gens[KI] = {"K^-1", 1, false, 0, one, mkword({KI})};
  gens[E] = {"E", 1, false, 0, one, mkword({F})};
  std::vector<Rule> rules = {
      {mkword({E, F}), {{one, mkword({F, E})}, {lam, mkword({K, K})}, {-lam, mkword({KI, KI})}}},
      {mkword({E, K}), {{qi, mkword({K, E})}}},
      {mkword({E, KI}), {{q, mkword({KI, E})}}},
      {mkword({K, F}), {{qi, mkword({F, K})}}},
      {mkword({KI, F}), {{q, mkword({F, KI})}}},
      {mkword({K, KI}), {{one, {}}}},
      {mkword({KI, K}), {{one, {}}}},
  };
  return std::make_shared<AlgebraPresentation>("Uq(su2)", gens, rules, false);
}

int product_gen2(const AlgebraPresentation& a1, int g) {
  return static_cast<int>(a1.num_gens()) + g;
}

std::shared_ptr<AlgebraPresentation> make_product(const AlgebraPresentation& a1,
                                                  const AlgebraPresentation& a2,
                                                  const std::string& name) {
  size_t n1 = a1.num_gens();
  std::vector<GenInfo> gens;
  for (const GenInfo& g : a1.gens()) {
    GenInfo gg = g;
    gg.factor = 1;
    gens.push_back(gg);
  }
  for (const GenInfo& g : a2.gens()) {
    GenInfo gg = g;
    gg.factor = 2;
    Word sw;
    for (unsigned char x : g.star_word) sw.push_back(static_cast<unsigned char>(x + n1));
    gg.star_word = sw;
    gens.push_back(gg);
  }
  auto shift = [n1](const Word& w) {
    Word out;
    for (unsigned char x : w) out.push_back(static_cast<unsigned char>(x + n1));
    return out;
  };
  std::vector<Rule> rules;
  for (const Rule& r : a1.rules()) rules.push_back(r);
  for (const Rule& r : a2.rules()) {
    Rule rr;
    rr.lhs = shift(r.lhs);
    for (const auto& [c, w] : r.rhs) rr.rhs.push_back({c, shift(w)});
    rules.push_back(rr);
  }
  ScalarExpr one = ScalarExpr::one();
  for (size_t g2 = 0; g2 < a2.num_gens(); ++g2) {
    for (size_t g1 = 0; g1 < n1; ++g1) {
      Word lhs;
      lhs.push_back(static_cast<unsigned char>(n1 + g2));
      lhs.push_back(static_cast<unsigned char>(g1));
      Word rhs;
      rhs.push_back(static_cast<unsigned char>(g1));
      rhs.push_back(static_cast<unsigned char>(n1 + g2));
      rules.push_back({lhs, {{one, rhs}}});
    }
  }
  return std::make_shared<AlgebraPresentation>(name, gens, rules,
                                               a1.commutative() && a2.commutative());
}

}  // namespace qym
