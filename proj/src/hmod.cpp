#include "hopfchrom/hmod.hpp"

#include <list>
#include <mutex>
#include <optional>

#include "hopfchrom/errors.hpp"

namespace hopfchrom {

HModule::HModule(HopfRef algebra, std::vector<Matrix> action, std::string label)
    : algebra_(std::move(algebra)), action_(std::move(action)), dim_(0), label_(std::move(label)) {
  if (!algebra_) throw ModuleError("module without an algebra");
  if (action_.size() != algebra_->dim())
    throw ModuleError("expected " + std::to_string(algebra_->dim()) + " action matrices, got " +
                      std::to_string(action_.size()));
  dim_ = action_.empty() ? 0 : action_[0].rows();
  for (std::size_t i = 0; i < action_.size(); ++i) {
    if (action_[i].rows() != dim_ || action_[i].cols() != dim_)
      throw ModuleError("action matrix " + std::to_string(i) + " is not " + std::to_string(dim_) + "x" +
                        std::to_string(dim_));
    if (!(action_[i].field() == algebra_->field())) throw FieldError("action matrix over a different field");
  }
}

HModule HModule::make(HopfRef algebra, std::vector<Matrix> action, std::string label) {
  HModule m(std::move(algebra), std::move(action), std::move(label));
  validate_module(*m.algebra_, m.action_);
  return m;
}

HModule HModule::trusted(HopfRef algebra, std::vector<Matrix> action, std::string label) {
  return HModule(std::move(algebra), std::move(action), std::move(label));
}

Matrix HModule::act(const Vector& h) const {
  Matrix r(algebra_->field(), dim_, dim_);
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!h[i].is_zero()) r += action_[i].scaled(h[i]);
  return r;
}

void validate_module(const HopfAlgebra& h, const std::vector<Matrix>& action) {
  const std::size_t n = h.dim();
  if (action.size() != n) throw ModuleError("wrong number of action matrices");
  const std::size_t d = action.empty() ? 0 : action[0].rows();
  const Field& f = h.field();
  Matrix one(f, d, d);
  for (std::size_t i = 0; i < n; ++i)
    if (!h.unit()[i].is_zero()) one += action[i].scaled(h.unit()[i]);
  if (!(one == Matrix::identity(f, d))) throw ModuleError("unit does not act as the identity");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix rhs(f, d, d);
      for (std::size_t k = 0; k < n; ++k)
        if (!h.mult(i, j, k).is_zero()) rhs += action[k].scaled(h.mult(i, j, k));
      if (!(action[i] * action[j] == rhs))
        throw ModuleError("action is not multiplicative at (" + h.basis_names()[i] + ", " + h.basis_names()[j] + ")");
    }
}

std::size_t word_dim(const TensorWord& word) {
  std::size_t d = 1;
  for (const auto& m : word) d *= m->dim();
  return d;
}

bool same_word(const TensorWord& a, const TensorWord& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    if (a[i]->algebra_ref() != b[i]->algebra_ref() || a[i]->label() != b[i]->label() || a[i]->dim() != b[i]->dim())
      return false;
  }
  return true;
}

std::string word_label(const TensorWord& word) {
  if (word.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += " (x) ";
    s += word[i]->label();
  }
  return s;
}

std::vector<Matrix> word_basis_actions(const HopfAlgebra& h, const TensorWord& word) {
  const std::size_t n = h.dim();
  const Field& f = h.field();
  std::vector<Matrix> acts;
  if (word.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      Matrix m(f, 1, 1);
      m(0, 0) = h.counit()[i];
      acts.push_back(std::move(m));
    }
    return acts;
  }
  acts = word[0]->actions();
  for (std::size_t w = 1; w < word.size(); ++w) {
    const auto& next = word[w]->actions();
    const std::size_t d = acts[0].rows() * next[0].rows();
    std::vector<Matrix> grown;
    grown.reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
      Matrix m(f, d, d);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          const Scalar& k = h.comult(c, a, b);
          if (!k.is_zero()) m += kron(acts[a], next[b]).scaled(k);
        }
      grown.push_back(std::move(m));
    }
    acts = std::move(grown);
  }
  return acts;
}

Matrix word_action(const HopfAlgebra& h, const TensorWord& word, const Vector& element) {
  const Field& f = h.field();
  if (word.empty()) {
    Matrix m(f, 1, 1);
    m(0, 0) = counit_apply(h, element);
    return m;
  }
  const std::size_t n = h.dim(), k = word.size(), d = word_dim(word);
  const Vector t = coproduct_iter(h, k - 1, element);
  Matrix r(f, d, d);
  for (std::size_t idx = 0; idx < t.size(); ++idx) {
    if (t[idx].is_zero()) continue;
    std::size_t rest = idx, stride = t.size();
    std::optional<Matrix> term;
    for (std::size_t w = 0; w < k; ++w) {
      stride /= n;
      const Matrix& a = word[w]->action(rest / stride);
      rest %= stride;
      term = term ? kron(*term, a) : a;
    }
    r += term->scaled(t[idx]);
  }
  return r;
}

ModuleRef regular_module(const HopfRef& h) {
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < h->dim(); ++i) acts.push_back(h->left_mult(i));
  return std::make_shared<const HModule>(HModule::trusted(h, std::move(acts), "H"));
}

namespace {

ModuleRef character_module(const HopfRef& h, const Vector& chi, std::string label) {
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < h->dim(); ++i) {
    Matrix m(h->field(), 1, 1);
    m(0, 0) = chi[i];
    acts.push_back(std::move(m));
  }
  return std::make_shared<const HModule>(HModule::make(h, std::move(acts), std::move(label)));
}

}  // namespace

ModuleRef trivial_module(const HopfRef& h) { return character_module(h, h->counit(), "k"); }

ModuleRef alpha_module(const HopfRef& h, const IntegralData& data) {
  return character_module(h, data.alpha.coeffs, "alpha");
}

ModuleRef tensor_module(const ModuleRef& m, const ModuleRef& n) {
  if (m->algebra_ref() != n->algebra_ref()) throw ModuleError("tensor product of modules over different algebras");
  auto acts = word_basis_actions(m->algebra(), {m, n});
  return std::make_shared<const HModule>(
      HModule::trusted(m->algebra_ref(), std::move(acts), "(" + m->label() + "(x)" + n->label() + ")"));
}

ModuleRef dual_module(const ModuleRef& m, Side side) {
  const HopfAlgebra& h = m->algebra();
  const Matrix& s = side == Side::left ? h.antipode() : h.antipode_inverse();
  std::vector<Matrix> acts;
  for (std::size_t j = 0; j < h.dim(); ++j) acts.push_back(m->act(s.column_vector(j)).transpose());
  std::string label = (side == Side::left ? "ld(" : "rd(") + m->label() + ")";
  return std::make_shared<const HModule>(HModule::trusted(m->algebra_ref(), std::move(acts), std::move(label)));
}

ModuleRef direct_sum(const ModuleRef& m, const ModuleRef& n) {
  if (m->algebra_ref() != n->algebra_ref()) throw ModuleError("direct sum of modules over different algebras");
  const Field& f = m->algebra().field();
  const std::size_t a = m->dim(), b = n->dim();
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < m->algebra().dim(); ++i) {
    Matrix r(f, a + b, a + b);
    for (std::size_t x = 0; x < a; ++x)
      for (std::size_t y = 0; y < a; ++y) r(x, y) = m->action(i)(x, y);
    for (std::size_t x = 0; x < b; ++x)
      for (std::size_t y = 0; y < b; ++y) r(a + x, a + y) = n->action(i)(x, y);
    acts.push_back(std::move(r));
  }
  return std::make_shared<const HModule>(
      HModule::trusted(m->algebra_ref(), std::move(acts), "(" + m->label() + "+" + n->label() + ")"));
}

ModuleRef regular_power(const HopfRef& h, std::size_t copies) {
  if (copies == 0) throw ModuleError("regular_power needs at least one copy");
  ModuleRef r = regular_module(h);
  ModuleRef acc = r;
  for (std::size_t i = 1; i < copies; ++i) acc = direct_sum(acc, r);
  if (copies > 1) {
    auto acts = acc->actions();
    acc = std::make_shared<const HModule>(HModule::trusted(h, std::move(acts), "H^" + std::to_string(copies)));
  }
  return acc;
}

Morphism identity_morphism(const Field& field, const TensorWord& word) {
  return {word, word, Matrix::identity(field, word_dim(word)), "id"};
}

namespace {

using ActionList = std::shared_ptr<const std::vector<Matrix>>;

// Keyed by the factor pointers; the cached word keeps its modules (and through
// them the algebra) alive, so a key can never be reused by other objects.
ActionList cached_word_actions(const HopfAlgebra& h, const TensorWord& word) {
  bool cacheable = !word.empty();
  for (const auto& m : word) cacheable = cacheable && m->algebra_ref().get() == &h;
  if (!cacheable) return std::make_shared<const std::vector<Matrix>>(word_basis_actions(h, word));

  struct Entry {
    TensorWord word;
    ActionList actions;
  };
  static std::mutex mutex;
  static std::list<Entry> cache;
  {
    std::lock_guard lock(mutex);
    for (auto it = cache.begin(); it != cache.end(); ++it)
      if (it->word == word) {
        cache.splice(cache.begin(), cache, it);
        return cache.front().actions;
      }
  }
  auto acts = std::make_shared<const std::vector<Matrix>>(word_basis_actions(h, word));
  std::lock_guard lock(mutex);
  cache.push_front({word, acts});
  if (cache.size() > 64) cache.pop_back();
  return acts;
}

}  // namespace

bool is_h_linear(const HopfAlgebra& h, const Morphism& f) {
  const ActionList src = cached_word_actions(h, f.source);
  const ActionList tgt = cached_word_actions(h, f.target);
  for (std::size_t i = 0; i < h.dim(); ++i)
    if (!((*tgt)[i] * f.matrix == f.matrix * (*src)[i])) return false;
  return true;
}

void require_h_linear(const HopfAlgebra& h, const Morphism& f) {
  const auto src = word_basis_actions(h, f.source);
  const auto tgt = word_basis_actions(h, f.target);
  for (std::size_t i = 0; i < h.dim(); ++i)
    if (!(tgt[i] * f.matrix == f.matrix * src[i]))
      throw NotHLinear(f.name + " does not commute with the action of " + h.basis_names()[i]);
}

namespace {

Vector identity_pattern(const Field& f, std::size_t d) {
  Vector v = zero_vector(f, d * d);
  for (std::size_t i = 0; i < d; ++i) v[i * d + i] = f.one();
  return v;
}

}  // namespace

Evaluations evaluation_morphisms(const ModuleRef& m) {
  const Field& f = m->algebra().field();
  const ModuleRef l = dual_module(m, Side::left);
  const ModuleRef r = dual_module(m, Side::right);
  const Vector pattern = identity_pattern(f, m->dim());
  return {
      {{l, m}, {}, Matrix::row(f, pattern), "ev(" + m->label() + ")"},
      {{}, {m, l}, Matrix::column(f, pattern), "coev(" + m->label() + ")"},
      {{m, r}, {}, Matrix::row(f, pattern), "evt(" + m->label() + ")"},
      {{}, {r, m}, Matrix::column(f, pattern), "coevt(" + m->label() + ")"},
  };
}

std::vector<Matrix> hom_space(const HModule& m, const HModule& n) {
  if (m.algebra_ref() != n.algebra_ref()) throw ModuleError("Hom between modules over different algebras");
  const HopfAlgebra& h = m.algebra();
  const Field& f = h.field();
  const std::size_t dm = m.dim(), dn = n.dim(), k = h.dim();
  Matrix sys(f, k * dn * dm, dn * dm);
  for (std::size_t i = 0; i < k; ++i) {
    const Matrix& rm = m.action(i);
    const Matrix& rn = n.action(i);
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dm; ++c) {
        const std::size_t row = (i * dn + r) * dm + c;
        for (std::size_t t = 0; t < dn; ++t) sys(row, t * dm + c) += rn(r, t);
        for (std::size_t t = 0; t < dm; ++t) sys(row, r * dm + t) -= rm(t, c);
      }
  }
  const Matrix ns = nullspace(sys);
  std::vector<Matrix> basis;
  for (std::size_t b = 0; b < ns.cols(); ++b) {
    Matrix fm(f, dn, dm);
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dm; ++c) fm(r, c) = ns(r * dm + c, b);
    basis.push_back(std::move(fm));
  }
  return basis;
}

HopfContext HopfContext::make(HopfRef algebra) {
  HopfContext ctx;
  ctx.algebra = std::move(algebra);
  ctx.integrals = normalized_pair(*ctx.algebra);
  ctx.regular = regular_module(ctx.algebra);
  ctx.trivial = trivial_module(ctx.algebra);
  ctx.alpha = alpha_module(ctx.algebra, ctx.integrals);
  return ctx;
}

Morphism lambda_transform(const HopfContext& ctx, const TensorWord& word, Side side) {
  const HopfAlgebra& h = ctx.h();
  if (side == Side::left) {
    TensorWord src = word;
    src.push_back(ctx.alpha);
    return {src, word, word_action(h, word, antipode_inverse_apply(h, ctx.integrals.cointegral)), "lamL"};
  }
  TensorWord src{ctx.alpha};
  src.insert(src.end(), word.begin(), word.end());
  return {src, word, word_action(h, word, antipode_apply(h, ctx.integrals.cointegral)), "lamR"};
}

Morphism lambda_endo(const HopfContext& ctx, const TensorWord& word) {
  const HopfAlgebra& h = ctx.h();
  if (!is_unimodular(h, ctx.integrals)) throw NotSpherical(h.name() + " is not unimodular");
  return {word, word, word_action(h, word, antipode_inverse_apply(h, ctx.integrals.cointegral)), "lamT"};
}

Morphism pivotal_coev_tilde(const HopfContext& ctx, const ModuleRef& m, const PivotData& pivot) {
  const Field& f = ctx.h().field();
  const Matrix ginv = m->act(pivot.g_inverse);
  const std::size_t d = m->dim();
  Matrix col(f, d * d, 1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) col(i * d + j, 0) = ginv(j, i);
  return {{}, {dual_module(m, Side::left), m}, std::move(col), "pcoevt(" + m->label() + ")"};
}

}  // namespace hopfchrom
