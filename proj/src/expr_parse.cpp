#include "hopfchrom/expr_parse.hpp"

#include <cctype>

#include "hopfchrom/errors.hpp"

namespace hopfchrom {

ExprEnvironment::ExprEnvironment(const HopfContext& ctx) : ctx_(ctx) {
  modules_["H"] = ctx.regular;
  modules_["k"] = ctx.trivial;
  modules_["alpha"] = ctx.alpha;
  families_["H"] = regular_family(ctx);
  if (auto fam = idempotent_summand(ctx)) {
    modules_["He"] = fam->P;
    families_["He"] = std::move(*fam);
  }
}

void ExprEnvironment::add_module(const std::string& name, ModuleRef m) { modules_[name] = std::move(m); }

void ExprEnvironment::add_family(const std::string& name, RetractFamily family) {
  modules_[name] = family.P;
  families_[name] = std::move(family);
}

void ExprEnvironment::set_chromatic(ChromaticSide side, Morphism c) { chromatic_.insert_or_assign(side, std::move(c)); }

ModuleRef ExprEnvironment::module(const std::string& name) const {
  auto it = modules_.find(name);
  if (it == modules_.end()) throw ParseError("expression", "unknown module '" + name + "'");
  return it->second;
}

const RetractFamily& ExprEnvironment::family(const std::string& name) const {
  auto it = families_.find(name);
  if (it == families_.end()) throw ParseError("expression", "no retract family for module '" + name + "'");
  return it->second;
}

const PivotData& ExprEnvironment::pivot() const {
  if (!pivot_) {
    const SphericalVerdict v = is_spherical_hmod(ctx_.h(), ctx_.integrals);
    if (!v.spherical) throw NotSpherical(ctx_.h().name() + " is not spherical");
    pivot_ = v.pivot;
  }
  return *pivot_;
}

const Morphism& ExprEnvironment::chromatic(ChromaticSide side) const {
  auto it = chromatic_.find(side);
  if (it != chromatic_.end()) return it->second;
  Morphism c = side == ChromaticSide::spherical ? chromatic_spherical(ctx_, pivot()) : chromatic_hopf(ctx_, side);
  return chromatic_.emplace(side, std::move(c)).first->second;
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const ExprEnvironment& env) : s_(text), env_(env) {}

  MorphismExpr parse() {
    MorphismExpr e = sequence();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("expression at offset " + std::to_string(pos_), msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a name");
    return s_.substr(start, pos_ - start);
  }

  MorphismExpr sequence() {
    MorphismExpr e = tensor();
    while (accept(';')) e = MorphismExpr::compose(tensor(), e);
    return e;
  }

  MorphismExpr tensor() {
    MorphismExpr e = atom();
    while (accept('*')) e = MorphismExpr::tensor(e, atom());
    return e;
  }

  ModuleRef module_term() {
    const std::string name = identifier();
    if (name == "ld" || name == "rd") {
      expect('(');
      ModuleRef inner = module_term();
      expect(')');
      return dual_module(inner, name == "ld" ? Side::left : Side::right);
    }
    return env_.module(name);
  }

  TensorWord module_list() {
    TensorWord w;
    expect('(');
    if (accept(')')) return w;
    do {
      w.push_back(module_term());
    } while (accept(','));
    expect(')');
    return w;
  }

  ModuleRef single(const std::string& prim) {
    TensorWord w = module_list();
    if (w.size() != 1) fail(prim + " takes exactly one module");
    return w[0];
  }

  MorphismExpr chromatic(ChromaticSide side) {
    std::string fam_name = "H";
    skip();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      expect('(');
      fam_name = identifier();
      expect(')');
    }
    const Morphism& c = env_.chromatic(side);
    if (fam_name == "H") return MorphismExpr::primitive(c);
    return MorphismExpr::primitive(chromatic_retract(env_.context(), c, env_.family(fam_name), side));
  }

  MorphismExpr atom() {
    if (accept('(')) {
      MorphismExpr e = sequence();
      expect(')');
      return e;
    }
    const std::string name = identifier();
    const HopfContext& ctx = env_.context();
    const Field& f = ctx.h().field();
    if (name == "id") return MorphismExpr::identity(f, module_list());
    if (name == "ev") return MorphismExpr::primitive(evaluation_morphisms(single(name)).ev);
    if (name == "coev") return MorphismExpr::primitive(evaluation_morphisms(single(name)).coev);
    if (name == "evt") return MorphismExpr::primitive(evaluation_morphisms(single(name)).ev_tilde);
    if (name == "coevt") return MorphismExpr::primitive(evaluation_morphisms(single(name)).coev_tilde);
    if (name == "pcoevt") return MorphismExpr::primitive(pivotal_coev_tilde(ctx, single(name), env_.pivot()));
    if (name == "lamL") return MorphismExpr::primitive(lambda_transform(ctx, module_list(), Side::left));
    if (name == "lamR") return MorphismExpr::primitive(lambda_transform(ctx, module_list(), Side::right));
    if (name == "lamT") return MorphismExpr::primitive(lambda_endo(ctx, module_list()));
    if (name == "cL") return chromatic(ChromaticSide::left);
    if (name == "cR") return chromatic(ChromaticSide::right);
    if (name == "cSph") return chromatic(ChromaticSide::spherical);
    fail("unknown primitive '" + name + "'");
  }

  const std::string& s_;
  const ExprEnvironment& env_;
  std::size_t pos_ = 0;
};

}  // namespace

MorphismExpr parse_expr(const std::string& text, const ExprEnvironment& env) { return Parser(text, env).parse(); }

}  // namespace hopfchrom
