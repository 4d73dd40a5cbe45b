#include "dtspec/ml_type.hpp"

namespace dtspec {

MlType MlType::var(std::string name) {
  return {Kind::Var, std::move(name), {}, {}};
}

MlType MlType::con(std::string name, std::vector<MlType> args) {
  return {Kind::Con, std::move(name), std::move(args), {}};
}

MlType MlType::tuple(std::vector<MlType> items) {
  if (items.empty())
    return con("unit");
  if (items.size() == 1)
    return std::move(items.front());
  return {Kind::Tuple, "", std::move(items), {}};
}

MlType MlType::arrow(MlType from, MlType to) {
  return {Kind::Arrow, "", {std::move(from), std::move(to)}, {}};
}

MlType MlType::record(std::vector<std::pair<std::string, MlType>> fields) {
  MlType t{Kind::Record, "", {}, {}};
  for (auto &[label, ty] : fields) {
    t.labels.push_back(label);
    t.args.push_back(std::move(ty));
  }
  return t;
}

MlType MlType::row(std::string label, MlType inner) {
  return {Kind::Row, std::move(label), {std::move(inner)}, {}};
}

namespace {

bool needs_parens_as_operand(const MlType &t) {
  return t.kind == MlType::Kind::Tuple || t.kind == MlType::Kind::Arrow;
}

std::string operand(const MlType &t) {
  return needs_parens_as_operand(t) ? "(" + render(t) + ")" : render(t);
}

} // namespace

std::string render(const MlType &t) {
  using K = MlType::Kind;
  switch (t.kind) {
  case K::Var:
    return "'" + t.name;
  case K::Con: {
    if (t.args.empty())
      return t.name;
    if (t.args.size() == 1)
      return operand(t.args.front()) + " " + t.name;
    std::string s = "(";
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      if (i)
        s += ", ";
      s += render(t.args[i]);
    }
    return s + ") " + t.name;
  }
  case K::Tuple: {
    std::string s;
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      if (i)
        s += " * ";
      s += operand(t.args[i]);
    }
    return s;
  }
  case K::Arrow: {
    const MlType &from = t.args[0];
    std::string lhs = from.kind == K::Arrow ? "(" + render(from) + ")"
                                            : render(from);
    return lhs + " -> " + render(t.args[1]);
  }
  case K::Record: {
    std::string s = "{";
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      if (i)
        s += ", ";
      s += t.labels[i] + " : " + render(t.args[i]);
    }
    return s + "}";
  }
  case K::Row:
    return "{" + t.name + ": " + render(t.args[0]) + "}";
  }
  return "";
}

std::vector<MlType> tyvar_args(const std::vector<std::string> &names) {
  std::vector<MlType> out;
  for (const auto &n : names)
    out.push_back(MlType::var(n));
  return out;
}

} // namespace dtspec
