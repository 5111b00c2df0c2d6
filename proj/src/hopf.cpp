#include "qym/hopf.hpp"

namespace qym {

void TensorElement::add(const Word& w1, const Word& w2, const ScalarExpr& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(w1, w2);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_[key] = c;
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement operator+(const TensorElement& a, const TensorElement& b) {
  TensorElement r = a;
  for (const auto& [k, c] : b.terms_) r.add(k.first, k.second, c);
  return r;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  TensorElement r(a.pres_);
  const AlgebraPresentation* p = a.pres_;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      AlgebraElement l1 = p->normal_form_word(ka.first + kb.first);
      AlgebraElement l2 = p->normal_form_word(ka.second + kb.second);
      ScalarExpr c = ca * cb;
      for (const auto& [w1, c1] : l1.terms())
        for (const auto& [w2, c2] : l2.terms()) r.add(w1, w2, c * c1 * c2);
    }
  }
  return r;
}

TensorElement TensorElement::scaled(const ScalarExpr& c) const {
  TensorElement r(pres_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
  return r;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  return a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------

HopfData::HopfData(const AlgebraPresentation* p, std::vector<HopfGenData> gens)
    : pres_(p), gens_(std::move(gens)) {
  if (gens_.size() != p->num_gens()) throw EngineError("HopfData: one entry per generator");
  validate();
}

TensorElement HopfData::coproduct_word(const Word& w) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = cop_cache_.find(w);
    if (it != cop_cache_.end()) {
      TensorElement out(pres_);
      for (const auto& [k, c] : it->second) out.add(k.first, k.second, c);
      return out;
    }
  }
  TensorElement out(pres_);
  out.add(Word(), Word(), ScalarExpr::one());
  for (unsigned char g : w) {
    TensorElement dg(pres_);
    for (const auto& [l1, l2] : gens_[g].coproduct) {
      for (const auto& [w1, c1] : l1.terms())
        for (const auto& [w2, c2] : l2.terms()) dg.add(w1, w2, c1 * c2);
    }
    out = out * dg;
  }
  {
    std::lock_guard<std::mutex> lk(mu_);
    cop_cache_.emplace(w, out.terms());
  }
  return out;
}

TensorElement HopfData::coproduct(const AlgebraElement& x) const {
  TensorElement out(pres_);
  for (const auto& [w, c] : x.terms()) out = out + coproduct_word(w).scaled(c);
  return out;
}

ScalarExpr HopfData::counit(const AlgebraElement& x) const {
  ScalarExpr out = ScalarExpr::zero();
  for (const auto& [w, c] : x.terms()) {
    ScalarExpr t = c;
    for (unsigned char g : w) t = t * gens_[g].counit;
    out = out + t;
  }
  return out;
}

AlgebraElement HopfData::antipode(const AlgebraElement& x) const {
  AlgebraElement out(pres_);
  for (const auto& [w, c] : x.terms()) {
    AlgebraElement t = AlgebraElement::scalar(pres_, c);
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = t * gens_[*it].antipode;
    out = out + t;
  }
  return out;
}

void HopfData::validate() const {
  auto elem_of_word = [&](const Word& w) { return AlgebraElement::word(pres_, w); };
  // Well-definedness on every rewrite rule.
  for (const Rule& r : pres_->rules()) {
    TensorElement dl = coproduct_word(r.lhs);
    TensorElement dr(pres_);
    ScalarExpr el = ScalarExpr::one();
    for (unsigned char g : r.lhs) el = el * gens_[g].counit;
    ScalarExpr er = ScalarExpr::zero();
    AlgebraElement sl = antipode(elem_of_word(r.lhs));
    AlgebraElement sr(pres_);
    for (const auto& [c, w] : r.rhs) {
      dr = dr + coproduct_word(w).scaled(c);
      ScalarExpr t = c;
      for (unsigned char g : w) t = t * gens_[g].counit;
      er = er + t;
      sr = sr + antipode(AlgebraElement::word(pres_, w, c));
    }
    if (!(dl == dr)) throw EngineError(pres_->name() + ": coproduct violates a relation");
    if (!(el == er)) throw EngineError(pres_->name() + ": counit violates a relation");
    if (sl != sr) throw EngineError(pres_->name() + ": antipode violates a relation");
  }
  // Hopf axioms on generators.
  for (size_t g = 0; g < pres_->num_gens(); ++g) {
    const auto& cop = gens_[g].coproduct;
    // Coassociativity.
    std::map<std::tuple<Word, Word, Word>, ScalarExpr> lhs3, rhs3;
    auto add3 = [](std::map<std::tuple<Word, Word, Word>, ScalarExpr>& m, const Word& a,
                   const Word& b, const Word& c, const ScalarExpr& v) {
      if (v.is_zero()) return;
      auto key = std::make_tuple(a, b, c);
      auto it = m.find(key);
      if (it == m.end()) {
        m[key] = v;
      } else {
        it->second = it->second + v;
        if (it->second.is_zero()) m.erase(it);
      }
    };
    for (const auto& [x1, x2] : cop) {
      TensorElement d1 = coproduct(x1);
      for (const auto& [k, c] : d1.terms())
        for (const auto& [w2, c2] : x2.terms()) add3(lhs3, k.first, k.second, w2, c * c2);
      TensorElement d2 = coproduct(x2);
      for (const auto& [w1, c1] : x1.terms())
        for (const auto& [k, c] : d2.terms()) add3(rhs3, w1, k.first, k.second, c1 * c);
    }
    if (!(lhs3 == rhs3)) throw EngineError(pres_->name() + ": coproduct not coassociative");
    // Counit axioms.
    AlgebraElement left(pres_), right(pres_), self = AlgebraElement::gen(pres_, g);
    for (const auto& [x1, x2] : cop) {
      left = left + x2.scaled(counit(x1));
      right = right + x1.scaled(counit(x2));
    }
    if (left != self || right != self)
      throw EngineError(pres_->name() + ": counit axiom fails on " + pres_->gens()[g].name);
    // Antipode axioms.
    AlgebraElement sx(pres_), xs(pres_);
    for (const auto& [x1, x2] : cop) {
      sx = sx + antipode(x1) * x2;
      xs = xs + x1 * antipode(x2);
    }
    AlgebraElement eps1 = AlgebraElement::scalar(pres_, gens_[g].counit);
    if (sx != eps1 || xs != eps1)
      throw EngineError(pres_->name() + ": antipode axiom fails on " + pres_->gens()[g].name);
  }
}

// ---------------------------------------------------------------------------

DualPairing::DualPairing(const HopfData* h, const HopfData* a,
                         std::map<std::pair<int, int>, ScalarExpr> table)
    : h_(h), a_(a), table_(std::move(table)) {}

ScalarExpr DualPairing::pair_gen_word(int g, const Word& aw) const {
  if (aw.empty()) return h_->counit(AlgebraElement::gen(h_->pres(), g));
  if (aw.size() == 1) {
    auto it = table_.find({g, static_cast<int>(aw[0])});
    return it == table_.end() ? ScalarExpr::zero() : it->second;
  }
  // <g, xy> = sum <g_(1), x> <g_(2), y> over the coproduct of g.
  Word head = aw.substr(0, 1), tail = aw.substr(1);
  ScalarExpr out = ScalarExpr::zero();
  TensorElement dg = h_->coproduct(AlgebraElement::gen(h_->pres(), g));
  for (const auto& [k, c] : dg.terms())
    out = out + c * pair_words(k.first, head) * pair_words(k.second, tail);
  return out;
}

ScalarExpr DualPairing::pair_words(const Word& hw, const Word& aw) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = cache_.find({hw, aw});
    if (it != cache_.end()) return it->second;
  }
  ScalarExpr out = ScalarExpr::zero();
  if (hw.empty()) {
    out = a_->counit(AlgebraElement::word(a_->pres(), aw));
  } else if (hw.size() == 1) {
    out = pair_gen_word(hw[0], aw);
  } else {
    // <g h', x> = sum <g, x_(1)> <h', x_(2)>.
    int g = hw[0];
    Word rest = hw.substr(1);
    TensorElement dx = a_->coproduct_word(aw);
    for (const auto& [k, c] : dx.terms())
      out = out + c * pair_gen_word(g, k.first) * pair_words(rest, k.second);
  }
  {
    std::lock_guard<std::mutex> lk(mu_);
    cache_.emplace(std::make_pair(hw, aw), out);
  }
  return out;
}

ScalarExpr DualPairing::pair(const AlgebraElement& h, const AlgebraElement& x) const {
  if (h.pres() != h_->pres() || x.pres() != a_->pres())
    throw EngineError("pair: element from the wrong algebra");
  ScalarExpr out = ScalarExpr::zero();
  for (const auto& [hw, hc] : h.terms())
    for (const auto& [aw, ac] : x.terms()) out = out + hc * ac * pair_words(hw, aw);
  return out;
}

AlgebraElement DualPairing::act_left(const AlgebraElement& h, const AlgebraElement& x) const {
  if (x.pres() != a_->pres()) throw EngineError("act_left: element from the wrong algebra");
  AlgebraElement out(a_->pres());
  for (const auto& [aw, ac] : x.terms()) {
    TensorElement dx = a_->coproduct_word(aw);
    for (const auto& [k, c] : dx.terms()) {
      ScalarExpr v = pair(h, AlgebraElement::word(a_->pres(), k.second));
      if (!v.is_zero()) out.add_term(k.first, ac * c * v);
    }
  }
  return out;
}

AlgebraElement DualPairing::act_right(const AlgebraElement& x, const AlgebraElement& h) const {
  if (x.pres() != a_->pres()) throw EngineError("act_right: element from the wrong algebra");
  AlgebraElement out(a_->pres());
  for (const auto& [aw, ac] : x.terms()) {
    TensorElement dx = a_->coproduct_word(aw);
    for (const auto& [k, c] : dx.terms()) {
      ScalarExpr v = pair(h, AlgebraElement::word(a_->pres(), k.first));
      if (!v.is_zero()) out.add_term(k.second, ac * c * v);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Built-in Hopf structures

std::shared_ptr<HopfData> make_suq2_hopf(const AlgebraPresentation* p, const ScalarExpr& q) {
  const int A = 0, AS = 1, C = 2, CS = 3;
  auto g = [&](int i) { return AlgebraElement::gen(p, i); };
  ScalarExpr one = ScalarExpr::one();
  std::vector<HopfGenData> data(4);
  // Delta u = u (x) u for u = [[a, -q c*], [c, a*]].
  data[A].coproduct = {{g(A), g(A)}, {g(CS).scaled(-q), g(C)}};
  data[AS].coproduct = {{g(AS), g(AS)}, {g(C).scaled(-q), g(CS)}};
  data[C].coproduct = {{g(C), g(A)}, {g(AS), g(C)}};
  data[CS].coproduct = {{g(CS), g(AS)}, {g(A), g(CS)}};
  data[A].counit = one;
  data[AS].counit = one;
  data[C].counit = ScalarExpr::zero();
  data[CS].counit = ScalarExpr::zero();
  // S(u) = u*.
  data[A].antipode = g(AS);
  data[AS].antipode = g(A);
  data[C].antipode = g(C).scaled(-q);
  data[CS].antipode = g(CS).scaled(-(one / q));
  return std::make_shared<HopfData>(p, std::move(data));
}

std::shared_ptr<HopfData> make_glq_hopf(const AlgebraPresentation* p) {
  const int RI = 0, R = 1, X2 = 2, X3 = 3, X1 = 4, X4 = 5;
  auto g = [&](int i) { return AlgebraElement::gen(p, i); };
  ScalarExpr q = ScalarExpr::q_pow(1), qi = ScalarExpr::q_pow(-1), one = ScalarExpr::one();
  std::vector<HopfGenData> data(6);
  // Delta Q = Q (x) Q for Q = [[x1, -q x3], [x2, q x4]]; r group-like.
  data[X1].coproduct = {{g(X1), g(X1)}, {g(X3).scaled(-q), g(X2)}};
  data[X3].coproduct = {{g(X1), g(X3)}, {g(X3).scaled(q), g(X4)}};
  data[X2].coproduct = {{g(X2), g(X1)}, {g(X4).scaled(q), g(X2)}};
  data[X4].coproduct = {{g(X2).scaled(-one), g(X3)}, {g(X4).scaled(q), g(X4)}};
  data[R].coproduct = {{g(R), g(R)}};
  data[RI].coproduct = {{g(RI), g(RI)}};
  data[X1].counit = one;
  data[X2].counit = ScalarExpr::zero();
  data[X3].counit = ScalarExpr::zero();
  data[X4].counit = qi;
  data[R].counit = one;
  data[RI].counit = one;
  // Localized antipode S(Q) = r^-2 Q*, S(r) = r^-1.
  AlgebraElement rim2 = g(RI) * g(RI);
  data[X1].antipode = rim2 * g(X4).scaled(q);
  data[X3].antipode = rim2 * g(X3).scaled(-qi);
  data[X2].antipode = rim2 * g(X2).scaled(-q);
  data[X4].antipode = rim2 * g(X1).scaled(qi);
  data[R].antipode = g(RI);
  data[RI].antipode = g(R);
  return std::make_shared<HopfData>(p, std::move(data));
}

std::shared_ptr<HopfData> make_uq_hopf(const AlgebraPresentation* p, const ScalarExpr& q) {
  const int F = 0, K = 1, KI = 2, E = 3;
  auto g = [&](int i) { return AlgebraElement::gen(p, i); };
  ScalarExpr one = ScalarExpr::one();
  std::vector<HopfGenData> data(4);
  data[K].coproduct = {{g(K), g(K)}};
  data[KI].coproduct = {{g(KI), g(KI)}};
  data[E].coproduct = {{g(E), g(K)}, {g(KI), g(E)}};
  data[F].coproduct = {{g(F), g(K)}, {g(KI), g(F)}};
  data[K].counit = one;
  data[KI].counit = one;
  data[E].counit = ScalarExpr::zero();
  data[F].counit = ScalarExpr::zero();
  data[K].antipode = g(KI);
  data[KI].antipode = g(K);
  data[E].antipode = g(E).scaled(-q);
  data[F].antipode = g(F).scaled(-(one / q));
  return std::make_shared<HopfData>(p, std::move(data));
}

std::shared_ptr<DualPairing> make_uq_suq2_pairing(const HopfData* uq_hopf,
                                                  const HopfData* suq2_hopf) {
  const int F = 0, K = 1, KI = 2, E = 3;
  const int A = 0, AS = 1, C = 2, CS = 3;
  std::map<std::pair<int, int>, ScalarExpr> table;
  table[{K, A}] = ScalarExpr::s_pow(-1);   // <K, a> = q^-1/2
  table[{KI, A}] = ScalarExpr::s_pow(1);
  table[{K, AS}] = ScalarExpr::s_pow(1);   // <K, a*> = q^1/2
  table[{KI, AS}] = ScalarExpr::s_pow(-1);
  table[{E, C}] = ScalarExpr::one();
  table[{F, CS}] = -ScalarExpr::q_pow(-1);
  return std::make_shared<DualPairing>(uq_hopf, suq2_hopf, std::move(table));
}

TangentSpace make_tangent_space(const AlgebraPresentation* uq) {
  const int F = 0, K = 1, KI = 2, E = 3;
  TangentSpace ts;
  ScalarExpr q = ScalarExpr::q_pow(1), one = ScalarExpr::one();
  Word fk, ek;
  fk.push_back(F);
  fk.push_back(K);
  ek.push_back(E);
  ek.push_back(K);
  ts.X[0] = AlgebraElement::word(uq, fk, ScalarExpr::s_pow(-1));  // X_- = q^-1/2 F K
  ts.X[1] = AlgebraElement::word(uq, ek, ScalarExpr::s_pow(1));   // X_+ = q^1/2 E K
  Word k4;
  for (int i = 0; i < 4; ++i) k4.push_back(K);
  ScalarExpr pref = one / (one - ScalarExpr::q_pow(-1) * ScalarExpr::q_pow(-1));
  ts.X[2] = (AlgebraElement::unit(uq) - AlgebraElement::word(uq, k4)).scaled(pref);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) ts.f[a][b][c] = ScalarExpr::zero();
  ScalarExpr q2 = ScalarExpr::q_pow(2), qm2 = ScalarExpr::q_pow(-2);
  ScalarExpr lam = one + q2;
  ts.f[0][1][2] = q2;                         // [X-, X+] = q^2 X_z
  ts.f[1][0][2] = -qm2;                       // [X+, X-] = -q^-2 X_z
  ts.f[0][2][0] = -ScalarExpr::q_pow(4) * lam;  // [X-, X_z] = -q^4 (1+q^2) X_-
  ts.f[2][0][0] = one + qm2;                  // [X_z, X-] = (1+q^-2) X_-
  ts.f[1][2][1] = one + qm2;                  // [X+, X_z] = (1+q^-2) X_+
  ts.f[2][1][1] = -ScalarExpr::q_pow(4) * lam;  // [X_z, X+] = -q^4 (1+q^2) X_+
  ts.lambda = lam;
  return ts;
}

AlgebraElement sigma_commutator(
    const TangentSpace& ts,
    const std::map<std::pair<int, int>,
                   std::vector<std::pair<ScalarExpr, std::pair<int, int>>>>& braid,
    int a, int b) {
  AlgebraElement out = ts.X[a] * ts.X[b];
  // Subtract T^{ab}_{cd} X_c X_d with T^{ab}_{cd} = coeff of w_a (x) w_b
  // in sigma(w_c (x) w_d).
  for (const auto& [cd, img] : braid) {
    for (const auto& [coeff, ab] : img) {
      if (ab.first == a && ab.second == b)
        out = out - (ts.X[cd.first] * ts.X[cd.second]).scaled(coeff);
    }
  }
  return out;
}

}  // namespace qym
