#include "hopfchrom/expr.hpp"

#include "hopfchrom/errors.hpp"

namespace hopfchrom {

namespace {

TensorWord concat(const TensorWord& a, const TensorWord& b) {
  TensorWord w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

}  // namespace

MorphismExpr MorphismExpr::primitive(Morphism m) {
  if (m.matrix.rows() != word_dim(m.target) || m.matrix.cols() != word_dim(m.source))
    throw TypeMismatch(m.name + ": matrix is " + std::to_string(m.matrix.rows()) + "x" +
                       std::to_string(m.matrix.cols()) + " but the words are " + word_label(m.source) + " -> " +
                       word_label(m.target));
  Node n{Kind::primitive, m.matrix.field(), m.source, m.target, std::move(m), std::nullopt, std::nullopt};
  return MorphismExpr(std::make_shared<const Node>(std::move(n)));
}

MorphismExpr MorphismExpr::identity(const Field& field, TensorWord word) {
  Node n{Kind::identity, field, word, word, std::nullopt, std::nullopt, std::nullopt};
  return MorphismExpr(std::make_shared<const Node>(std::move(n)));
}

MorphismExpr MorphismExpr::compose(const MorphismExpr& after, const MorphismExpr& before) {
  if (!same_word(after.source(), before.target()))
    throw TypeMismatch("cannot compose " + before.describe() + " : " + word_label(before.source()) + " -> " +
                       word_label(before.target()) + " with " + after.describe() + " : " +
                       word_label(after.source()) + " -> " + word_label(after.target()));
  if (!(after.field() == before.field())) throw FieldError("composing morphisms over different fields");
  Node n{Kind::compose, after.field(), before.source(), after.target(), std::nullopt, after, before};
  return MorphismExpr(std::make_shared<const Node>(std::move(n)));
}

MorphismExpr MorphismExpr::tensor(const MorphismExpr& left, const MorphismExpr& right) {
  if (!(left.field() == right.field())) throw FieldError("tensoring morphisms over different fields");
  Node n{Kind::tensor, left.field(), concat(left.source(), right.source()), concat(left.target(), right.target()),
         std::nullopt, left, right};
  return MorphismExpr(std::make_shared<const Node>(std::move(n)));
}

MorphismExpr::Kind MorphismExpr::kind() const { return node_->kind; }
const TensorWord& MorphismExpr::source() const { return node_->source; }
const TensorWord& MorphismExpr::target() const { return node_->target; }
const Field& MorphismExpr::field() const { return node_->field; }

std::string MorphismExpr::describe() const {
  switch (node_->kind) {
    case Kind::primitive:
      return node_->morphism->name.empty() ? "<morphism>" : node_->morphism->name;
    case Kind::identity: {
      std::string s = "id(";
      for (std::size_t i = 0; i < node_->source.size(); ++i) s += (i ? "," : "") + node_->source[i]->label();
      return s + ")";
    }
    case Kind::compose:
      return "(" + node_->b->describe() + " ; " + node_->a->describe() + ")";
    case Kind::tensor:
      return node_->a->describe() + " * " + node_->b->describe();
  }
  return {};
}

MorphismExpr chain(std::initializer_list<MorphismExpr> steps) {
  if (steps.size() == 0) throw TypeMismatch("empty composite");
  auto it = steps.begin();
  MorphismExpr acc = *it++;
  for (; it != steps.end(); ++it) acc = MorphismExpr::compose(*it, acc);
  return acc;
}

MorphismExpr tensor_all(std::initializer_list<MorphismExpr> factors) {
  if (factors.size() == 0) throw TypeMismatch("empty tensor product");
  auto it = factors.begin();
  MorphismExpr acc = *it++;
  for (; it != factors.end(); ++it) acc = MorphismExpr::tensor(acc, *it);
  return acc;
}

namespace {

bool is_identity(const MorphismExpr& e) {
  const auto& n = e.node();
  if (n.kind == MorphismExpr::Kind::identity) return true;
  if (n.kind == MorphismExpr::Kind::tensor) return is_identity(*n.a) && is_identity(*n.b);
  return false;
}

// (I_outer (x) g) m: apply g to each row block.
Matrix apply_right_leg(const MorphismExpr& g, std::size_t outer, const Matrix& m) {
  const std::size_t sg = word_dim(g.source()), tg = word_dim(g.target());
  Matrix out(m.field(), outer * tg, m.cols());
  for (std::size_t i = 0; i < outer; ++i) {
    const Matrix r = apply(g, m.block(i * sg, 0, sg, m.cols()));
    for (std::size_t k = 0; k < tg; ++k)
      for (std::size_t c = 0; c < m.cols(); ++c) out(i * tg + k, c) = r(k, c);
  }
  return out;
}

// (f (x) I_inner) m: fold the inner index into the columns, apply f, unfold.
Matrix apply_left_leg(const MorphismExpr& f, std::size_t inner, const Matrix& m) {
  const std::size_t sf = word_dim(f.source()), tf = word_dim(f.target()), cols = m.cols();
  Matrix folded(m.field(), sf, inner * cols);
  for (std::size_t i = 0; i < sf; ++i)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t c = 0; c < cols; ++c) folded(i, k * cols + c) = m(i * inner + k, c);
  const Matrix r = apply(f, folded);
  Matrix out(m.field(), tf * inner, cols);
  for (std::size_t a = 0; a < tf; ++a)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t c = 0; c < cols; ++c) out(a * inner + k, c) = r(a, k * cols + c);
  return out;
}

}  // namespace

Matrix apply(const MorphismExpr& expr, const Matrix& m) {
  if (m.rows() != word_dim(expr.source()))
    throw DimensionMismatch("applying " + expr.describe() + " to a matrix with " + std::to_string(m.rows()) +
                            " rows");
  const auto& n = expr.node();
  switch (n.kind) {
    case MorphismExpr::Kind::primitive:
      return n.morphism->matrix * m;
    case MorphismExpr::Kind::identity:
      return m;
    case MorphismExpr::Kind::compose:
      return apply(*n.a, apply(*n.b, m));
    case MorphismExpr::Kind::tensor: {
      const MorphismExpr& f = *n.a;
      const MorphismExpr& g = *n.b;
      Matrix r = m;
      if (!is_identity(g)) r = apply_right_leg(g, word_dim(f.source()), r);
      if (!is_identity(f)) r = apply_left_leg(f, word_dim(g.target()), r);
      return r;
    }
  }
  return m;
}

Morphism evaluate(const MorphismExpr& expr) {
  const std::size_t d = word_dim(expr.source());
  return {expr.source(), expr.target(), apply(expr, Matrix::identity(expr.field(), d)), expr.describe()};
}

bool morphisms_equal(const Morphism& f, const Morphism& g) {
  if (!same_word(f.source, g.source) || !same_word(f.target, g.target))
    throw TypeMismatch("comparing " + word_label(f.source) + " -> " + word_label(f.target) + " with " +
                       word_label(g.source) + " -> " + word_label(g.target));
  return f.matrix == g.matrix;
}

namespace {

std::vector<std::size_t> reversed_index_map(const std::vector<std::size_t>& dims) {
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  std::vector<std::size_t> map(total);
  std::vector<std::size_t> digits(dims.size(), 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    for (std::size_t p = dims.size(); p-- > 0;) {
      digits[p] = rem % dims[p];
      rem /= dims[p];
    }
    std::size_t rev = 0;
    for (std::size_t p = dims.size(); p-- > 0;) rev = rev * dims[p] + digits[p];
    map[idx] = rev;
  }
  return map;
}

}  // namespace

Matrix reverse_factors(const Matrix& m, const std::vector<std::size_t>& source_dims,
                       const std::vector<std::size_t>& target_dims) {
  const auto rs = reversed_index_map(source_dims);
  const auto rt = reversed_index_map(target_dims);
  if (rs.size() != m.cols() || rt.size() != m.rows()) throw DimensionMismatch("reverse_factors: dimensions");
  Matrix out(m.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(rt[i], rs[j]) = m(i, j);
  return out;
}

}  // namespace hopfchrom
