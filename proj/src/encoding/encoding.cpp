#include "dtspec/encoding.hpp"

namespace dtspec {

EncodingType EncodingType::var(std::string name) {
  return {Kind::Var, std::move(name), {}, nullptr};
}

EncodingType EncodingType::unit() { return {Kind::Unit, "", {}, nullptr}; }

EncodingType EncodingType::record(std::string label, EncodingType inner) {
  return {Kind::Record, std::move(label), {},
          std::make_shared<const EncodingType>(std::move(inner))};
}

EncodingType EncodingType::carrier(std::vector<std::string> params,
                                   EncodingType phantom) {
  return {Kind::Carrier, "", std::move(params),
          std::make_shared<const EncodingType>(std::move(phantom))};
}

bool EncodingType::contains_var() const {
  switch (kind_) {
  case Kind::Var:
    return true;
  case Kind::Unit:
    return false;
  case Kind::Record:
  case Kind::Carrier:
    return inner_->contains_var();
  }
  return false;
}

bool EncodingType::occurs(const std::string &v) const {
  switch (kind_) {
  case Kind::Var:
    return name_ == v;
  case Kind::Unit:
    return false;
  case Kind::Record:
  case Kind::Carrier:
    return inner_->occurs(v);
  }
  return false;
}

bool operator==(const EncodingType &a, const EncodingType &b) {
  if (a.kind_ != b.kind_ || a.name_ != b.name_ || a.params_ != b.params_)
    return false;
  if (!a.inner_ || !b.inner_)
    return !a.inner_ && !b.inner_;
  return *a.inner_ == *b.inner_;
}

std::string render(const EncodingType &e) {
  using K = EncodingType::Kind;
  switch (e.kind()) {
  case K::Var:
    return "'" + e.name();
  case K::Unit:
    return "unit";
  case K::Record:
    return "{" + e.name() + ": " + render(e.inner()) + "}";
  case K::Carrier: {
    if (e.params().empty())
      return render(e.inner()) + " t";
    std::string s = "(";
    for (const auto &p : e.params())
      s += "'" + p + ", ";
    return s + render(e.inner()) + ") t";
  }
  }
  return "";
}

EncodingType substitute(const Substitution &s, const EncodingType &e) {
  using K = EncodingType::Kind;
  switch (e.kind()) {
  case K::Var: {
    auto it = s.find(e.name());
    return it == s.end() ? e : it->second;
  }
  case K::Unit:
    return e;
  case K::Record:
    return EncodingType::record(e.name(), substitute(s, e.inner()));
  case K::Carrier:
    return EncodingType::carrier(e.params(), substitute(s, e.inner()));
  }
  return e;
}

namespace {

class Unifier {
public:
  bool run(const EncodingType &a, const EncodingType &b) {
    using K = EncodingType::Kind;
    EncodingType x = substitute(result.subst, a);
    EncodingType y = substitute(result.subst, b);
    if (x.kind() == K::Var)
      return bind(x.name(), y);
    if (y.kind() == K::Var)
      return bind(y.name(), x);
    if (x.kind() != y.kind())
      return clash("cannot unify " + render(x) + " with " + render(y));
    switch (x.kind()) {
    case K::Unit:
      return true;
    case K::Record:
      if (x.name() != y.name())
        return clash("label '" + x.name() + "' does not match label '" +
                     y.name() + "'");
      return run(x.inner(), y.inner());
    case K::Carrier:
      if (x.params() != y.params())
        return clash("carrier parameters differ");
      return run(x.inner(), y.inner());
    case K::Var:
      break;
    }
    return true;
  }

  UnifyResult result;

private:
  bool bind(const std::string &v, const EncodingType &t) {
    if (t.kind() == EncodingType::Kind::Var && t.name() == v)
      return true;
    if (t.occurs(v)) {
      result.status = UnifyResult::Status::OccursCheck;
      result.reason = "'" + v + " occurs in " + render(t);
      return false;
    }
    Substitution single{{v, t}};
    for (auto &[name, bound] : result.subst)
      bound = substitute(single, bound);
    result.subst.insert_or_assign(v, t);
    return true;
  }

  bool clash(std::string why) {
    result.status = UnifyResult::Status::Clash;
    result.reason = std::move(why);
    return false;
  }
};

EncodingType encode_path(const SpecSet &set, const Hierarchy &h, SpecId s,
                         EncodingType leaf) {
  const auto &path = h.path(s);
  EncodingType phantom = std::move(leaf);
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    phantom = EncodingType::record(h.name(*it), std::move(phantom));
  return EncodingType::carrier(set.typarams(), std::move(phantom));
}

} // namespace

UnifyResult unify(const EncodingType &a, const EncodingType &b) {
  Unifier u;
  if (!u.run(a, b))
    u.result.subst.clear();
  return std::move(u.result);
}

EncodingType encode_abstract(const SpecSet &set, const Hierarchy &h, SpecId s,
                             const std::string &leaf) {
  return encode_path(set, h, s, EncodingType::var(leaf));
}

EncodingType encode_abstract(const SpecSet &set, const Hierarchy &h,
                             std::string_view s, const std::string &leaf) {
  return encode_abstract(set, h, h.id_of(s), leaf);
}

EncodingType encode_concrete(const SpecSet &set, const Hierarchy &h, SpecId s) {
  return encode_path(set, h, s, EncodingType::unit());
}

EncodingType encode_concrete(const SpecSet &set, const Hierarchy &h,
                             std::string_view s) {
  return encode_concrete(set, h, h.id_of(s));
}

} // namespace dtspec
