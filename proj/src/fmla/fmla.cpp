#include "dtspec/fmla.hpp"

#include <stdexcept>

namespace dtspec::fmla {

TermPtr var(std::string name) {
  return make_term("Var", {TermArg::literal("string", std::move(name))});
}
TermPtr not_(TermPtr f) { return make_term("Not", {TermArg::subterm(std::move(f))}); }
TermPtr true_() { return make_term("True"); }
TermPtr false_() { return make_term("False"); }
TermPtr and_(TermPtr l, TermPtr r) {
  return make_term("And", {TermArg::subterm(std::move(l)), TermArg::subterm(std::move(r))});
}
TermPtr or_(TermPtr l, TermPtr r) {
  return make_term("Or", {TermArg::subterm(std::move(l)), TermArg::subterm(std::move(r))});
}

namespace {

enum class Op { Var, Not, True, And, False, Or };

Op op_of(const Term &t) {
  const std::string &c = t.constructor();
  std::size_t n = t.args().size();
  if (c == "Var" && n == 1 && t.args()[0].kind == TermArg::Kind::BaseLit)
    return Op::Var;
  if (c == "True" && n == 0)
    return Op::True;
  if (c == "False" && n == 0)
    return Op::False;
  bool subs = true;
  for (const auto &a : t.args())
    subs = subs && a.kind == TermArg::Kind::Sub;
  if (subs && c == "Not" && n == 1)
    return Op::Not;
  if (subs && c == "And" && n == 2)
    return Op::And;
  if (subs && c == "Or" && n == 2)
    return Op::Or;
  throw std::invalid_argument("not a formula: " + to_text(t));
}

const Term &arg(const Term &t, std::size_t i) { return *t.args()[i].sub; }
const TermPtr &argp(const Term &t, std::size_t i) { return t.args()[i].sub; }

void collect(const Term &t, std::set<std::string> &out) {
  if (op_of(t) == Op::Var) {
    out.insert(t.args()[0].text);
    return;
  }
  for (const auto &a : t.args())
    collect(*a.sub, out);
}

// Negation normal form: Not only directly above Var.
TermPtr nnf(const TermPtr &t, bool negate) {
  switch (op_of(*t)) {
  case Op::Var:
    return negate ? not_(t) : t;
  case Op::Not:
    return nnf(argp(*t, 0), !negate);
  case Op::True:
    return negate ? false_() : true_();
  case Op::False:
    return negate ? true_() : false_();
  case Op::And: {
    auto l = nnf(argp(*t, 0), negate), r = nnf(argp(*t, 1), negate);
    return negate ? or_(l, r) : and_(l, r);
  }
  case Op::Or: {
    auto l = nnf(argp(*t, 0), negate), r = nnf(argp(*t, 1), negate);
    return negate ? and_(l, r) : or_(l, r);
  }
  }
  return t;
}

TermPtr lit_to_dnf(const TermPtr &lit) {
  return or_(and_(lit, true_()), false_());
}

TermPtr or_dnfs(const TermPtr &a, const TermPtr &b) {
  if (op_of(*a) == Op::False)
    return b;
  return or_(argp(*a, 0), or_dnfs(argp(*a, 1), b));
}

TermPtr and_conjs(const TermPtr &a, const TermPtr &b) {
  if (op_of(*a) == Op::True)
    return b;
  return and_(argp(*a, 0), and_conjs(argp(*a, 1), b));
}

TermPtr and_conj_dnf(const TermPtr &c, const TermPtr &d) {
  if (op_of(*d) == Op::False)
    return false_();
  return or_(and_conjs(c, argp(*d, 0)), and_conj_dnf(c, argp(*d, 1)));
}

TermPtr and_dnfs(const TermPtr &a, const TermPtr &b) {
  if (op_of(*a) == Op::False || op_of(*b) == Op::False)
    return false_();
  return or_dnfs(and_conj_dnf(argp(*a, 0), b), and_dnfs(argp(*a, 1), b));
}

TermPtr nnf_to_dnf(const TermPtr &t) {
  switch (op_of(*t)) {
  case Op::Var:
  case Op::Not:
    return lit_to_dnf(t);
  case Op::True:
    return or_(true_(), false_());
  case Op::False:
    return false_();
  case Op::And:
    return and_dnfs(nnf_to_dnf(argp(*t, 0)), nnf_to_dnf(argp(*t, 1)));
  case Op::Or:
    return or_dnfs(nnf_to_dnf(argp(*t, 0)), nnf_to_dnf(argp(*t, 1)));
  }
  return t;
}

} // namespace

std::string identify(const Term &t) {
  op_of(t);
  return t.constructor();
}

std::string to_string(const Term &t) {
  switch (op_of(t)) {
  case Op::Var:
    return t.args()[0].text;
  case Op::Not:
    return "(~ " + to_string(arg(t, 0)) + ")";
  case Op::True:
    return "T";
  case Op::False:
    return "F";
  case Op::And:
    return "(" + to_string(arg(t, 0)) + " /\\ " + to_string(arg(t, 1)) + ")";
  case Op::Or:
    return "(" + to_string(arg(t, 0)) + " \\/ " + to_string(arg(t, 1)) + ")";
  }
  return "";
}

bool eval(const Term &t, const Env &env) {
  switch (op_of(t)) {
  case Op::Var: {
    auto it = env.find(t.args()[0].text);
    if (it == env.end())
      throw std::invalid_argument("unbound variable '" + t.args()[0].text + "'");
    return it->second;
  }
  case Op::Not:
    return !eval(arg(t, 0), env);
  case Op::True:
    return true;
  case Op::False:
    return false;
  case Op::And:
    return eval(arg(t, 0), env) && eval(arg(t, 1), env);
  case Op::Or:
    return eval(arg(t, 0), env) || eval(arg(t, 1), env);
  }
  return false;
}

std::set<std::string> variables(const Term &t) {
  std::set<std::string> out;
  collect(t, out);
  return out;
}

TermPtr to_dnf(const TermPtr &t) { return nnf_to_dnf(nnf(t, false)); }

} // namespace dtspec::fmla
