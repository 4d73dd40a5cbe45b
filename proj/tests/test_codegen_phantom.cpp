#include "support.hpp"

#include "dtspec/codegen.hpp"
#include "dtspec/encoding.hpp"

#include <doctest.h>

#include <set>

using namespace dtspec;

namespace {

std::string val_type(const PhantomInterface &p, const std::string &sub,
                     const std::string &name) {
  const auto &s = p.substructure(sub);
  if (name == "dest")
    return render(s.dest.type);
  if (name == "coerce")
    return render(s.coerce.type);
  for (const auto &v : s.constructors)
    if (v.name == name)
      return render(v.type);
  FAIL("no value " << sub << "." << name);
  return "";
}

std::string abbrev(const std::vector<TypeAbbrev> &list, const std::string &name) {
  for (const auto &a : list)
    if (a.name == name) {
      std::string head;
      if (a.params.size() == 1)
        head = "'" + a.params[0] + " ";
      else if (!a.params.empty()) {
        head = "(";
        for (std::size_t i = 0; i < a.params.size(); ++i)
          head += (i ? ", '" : "'") + a.params[i];
        head += ") ";
      }
      return head + a.name + " = " + render(a.rhs);
    }
  FAIL("no abbreviation " << name);
  return "";
}

bool is_abstract(const MlType &t) {
  return t.kind == MlType::Kind::Con && t.name.size() > 1 && t.name[0] == 'A' &&
         !t.args.empty() && t.args.back().kind == MlType::Kind::Var;
}

bool is_concrete(const MlType &t) {
  return t.kind == MlType::Kind::Con && t.name.size() > 1 && t.name[0] == 'C';
}

std::vector<MlType> tuple_items(const MlType &t) {
  if (t.kind == MlType::Kind::Tuple)
    return t.args;
  return {t};
}

} // namespace

TEST_CASE("fmla value types") {
  Analysis a = support::load("fmla");
  PhantomInterface p = phantom_interface(a.set, a.hierarchy);
  CHECK(p.sig_name == "FMLA");
  CHECK(p.struct_name == "Fmla");
  CHECK(val_type(p, "Atom", "Var") == "string -> CAtom");
  CHECK(val_type(p, "Lit", "Not") == "'a AAtom -> CLit");
  CHECK(val_type(p, "Conj", "And") == "'a ALit * 'b AConj -> CConj");
  CHECK(val_type(p, "Conj", "True") == "CConj");
  CHECK(val_type(p, "Dnf", "Or") == "'a AConj * 'b ADnf -> CDnf");
  CHECK(val_type(p, "Fmla", "And") == "'a AFmla * 'b AFmla -> CFmla");
  CHECK(val_type(p, "Conj", "dest") ==
        "'a AConj -> {True : unit -> 'b, And : CLit * CConj -> 'b} -> 'b");
  CHECK(val_type(p, "Dnf", "dest") ==
        "'a ADnf -> {False : unit -> 'b, Or : CConj * CDnf -> 'b} -> 'b");
  CHECK(val_type(p, "Atom", "dest") == "'a AAtom -> {Var : string -> 'b} -> 'b");
  CHECK(val_type(p, "Lit", "coerce") == "'a ALit -> CLit");
}

TEST_CASE("fmla type abbreviations") {
  Analysis a = support::load("fmla");
  PhantomInterface p = phantom_interface(a.set, a.hierarchy);
  CHECK(p.carrier_params == std::vector<std::string>{"a"});
  CHECK(abbrev(p.abstract_types, "AFmla") == "'a AFmla = {fmla: 'a} t");
  CHECK(abbrev(p.abstract_types, "ALit") == "'a ALit = {lit: 'a} AFmla");
  CHECK(abbrev(p.abstract_types, "AAtom") == "'a AAtom = {atom: 'a} ALit");
  CHECK(abbrev(p.concrete_types, "CAtom") == "CAtom = unit AAtom");
  std::vector<std::string> order;
  for (const auto &t : p.abstract_types)
    order.push_back(t.name);
  CHECK(order == std::vector<std::string>{"AFmla", "ALit", "AAtom", "AConj", "ADnf"});
}

TEST_CASE("even/odd list abbreviations") {
  Analysis a = support::load("evenodd");
  PhantomInterface p = phantom_interface(a.set, a.hierarchy);
  CHECK(p.carrier_params == std::vector<std::string>{"a", "b"});
  CHECK(abbrev(p.abstract_types, "AList") == "('a, 'b) AList = ('a, {list: 'b}) t");
  CHECK(abbrev(p.abstract_types, "AEven") == "('a, 'b) AEven = ('a, {even: 'b}) AList");
  CHECK(abbrev(p.abstract_types, "AOdd") == "('a, 'b) AOdd = ('a, {odd: 'b}) AList");
  CHECK(abbrev(p.concrete_types, "CEven") == "'a CEven = ('a, unit) AEven");
  CHECK(val_type(p, "Even", "Cons") == "'a * ('a, 'b) AOdd -> 'a CEven");
  CHECK(val_type(p, "Odd", "dest") == "('a, 'b) AOdd -> {Cons : 'a * 'a CEven -> 'c} -> 'c");
  CHECK(val_type(p, "Even", "Nil") == "'a CEven");
}

TEST_CASE("abbreviations expand to the encodings") {
  // Expanding A<S> along its parents yields encode_abstract(S).
  for (const auto &name : support::all_specs()) {
    CAPTURE(name);
    Analysis a = support::load(name);
    PhantomInterface p = phantom_interface(a.set, a.hierarchy);
    const std::string phantom = p.carrier_params.back();
    for (SpecId s = 0; s < a.set.size(); ++s) {
      std::vector<std::string> labels;
      std::string cur = abstract_name(a.set.name(s));
      for (;;) {
        const TypeAbbrev *ab = nullptr;
        for (const auto &t : p.abstract_types)
          if (t.name == cur)
            ab = &t;
        REQUIRE(ab);
        REQUIRE(ab->rhs.args.back().kind == MlType::Kind::Row);
        labels.insert(labels.begin(), ab->rhs.args.back().name);
        if (ab->rhs.name == "t")
          break;
        cur = ab->rhs.name;
      }
      EncodingType e = EncodingType::var(phantom);
      for (auto it = labels.rbegin(); it != labels.rend(); ++it)
        e = EncodingType::record(*it, e);
      e = EncodingType::carrier(a.set.typarams(), e);
      CHECK(e == encode_abstract(a.set, a.hierarchy, s, phantom));
    }
  }
}

TEST_CASE("structural shape of every substructure") {
  for (const auto &name : support::all_specs()) {
    CAPTURE(name);
    Analysis a = support::load(name);
    PhantomInterface p = phantom_interface(a.set, a.hierarchy);
    REQUIRE(p.substructures.size() == a.set.size());
    for (SpecId s = 0; s < a.set.size(); ++s) {
      const Specialization &sp = a.set.spec(s);
      const auto &sub = p.substructures[s];
      CHECK(sub.name == capitalize(sp.name));
      REQUIRE(sub.constructors.size() == sp.clauses.size());
      for (std::size_t k = 0; k < sp.clauses.size(); ++k) {
        const MlType &t = sub.constructors[k].type;
        const ConClause &c = sp.clauses[k];
        MlType result = t;
        if (!c.args.empty()) {
          REQUIRE(t.kind == MlType::Kind::Arrow);
          result = t.args[1];
          auto items = tuple_items(t.args[0]);
          REQUIRE(items.size() == c.args.size());
          std::set<std::string> vars;
          for (std::size_t i = 0; i < items.size(); ++i) {
            if (!c.args[i].is_recursive()) {
              CHECK(!is_abstract(items[i]));
              continue;
            }
            CHECK(is_abstract(items[i]));
            CHECK(items[i].name == abstract_name(a.set.name(a.set.target(c.args[i]))));
            CHECK(vars.insert(items[i].args.back().name).second);
          }
          for (const auto &v : vars)
            for (const auto &tp : a.set.typarams())
              CHECK(v != tp);
        }
        CHECK(is_concrete(result));
        CHECK(result.name == concrete_name(sp.name));
      }
      // dest : A<S> -> {branches} -> 'r, one branch per distinct constructor
      const MlType &dest = sub.dest.type;
      REQUIRE(dest.kind == MlType::Kind::Arrow);
      CHECK(is_abstract(dest.args[0]));
      const MlType &rest = dest.args[1];
      REQUIRE(rest.kind == MlType::Kind::Arrow);
      REQUIRE(rest.args[0].kind == MlType::Kind::Record);
      std::set<std::string> distinct;
      for (const auto &c : sp.clauses)
        distinct.insert(c.constructor);
      CHECK(rest.args[0].labels.size() == distinct.size());
      for (const auto &branch : rest.args[0].args) {
        REQUIRE(branch.kind == MlType::Kind::Arrow);
        CHECK(branch.args[1] == rest.args[1]);
        for (const auto &item : tuple_items(branch.args[0]))
          CHECK(!is_abstract(item));
      }
      CHECK(render(sub.coerce.type) == render(dest.args[0]) + " -> " +
                                           render(MlType::con(concrete_name(sp.name),
                                                              tyvar_args(a.set.typarams()))));
    }
  }
}

TEST_CASE("multi-clause constructors") {
  Analysis a = support::load("dnf_two_or");
  PhantomInterface p = phantom_interface(a.set, a.hierarchy);
  const auto &dnf = p.substructure("Dnf");
  REQUIRE(dnf.constructors.size() == 3);
  CHECK(dnf.constructors[1].name == "Or_1");
  CHECK(dnf.constructors[2].name == "Or_2");
  CHECK(render(dnf.constructors[1].type) == "'a AConj * 'b ADnf -> CDnf");
  CHECK(render(dnf.constructors[2].type) == "'a ADnf * 'b AConj -> CDnf");
  CHECK(render(dnf.dest.type) ==
        "'a ADnf -> {False : unit -> 'b, Or : CFmla * CFmla -> 'b} -> 'b");

  // The pointwise lub is taken per position: u and v meet at w, and the
  // second position agrees across clauses.
  Analysis l = support::analyze_text(
      "datatype t = A of t * t | B | C | D\n"
      "  withspec u = B\n"
      "       and v = C\n"
      "       and w = B | C | D\n"
      "       and s = A of u * w | A of v * w | D");
  PhantomInterface q = phantom_interface(l.set, l.hierarchy);
  CHECK(lub(l.hierarchy, "u", "v") == "w");
  CHECK(render(q.substructure("S").dest.type) ==
        "'a AS -> {A : CW * CW -> 'b, D : unit -> 'b} -> 'b");
}

TEST_CASE("omitted dest branches are unreachable under typing") {
  for (const auto &name : support::all_specs()) {
    CAPTURE(name);
    Analysis a = support::load(name);
    for (SpecId s = 0; s < a.set.size(); ++s) {
      std::set<std::string> present;
      for (const auto &c : a.set.spec(s).clauses)
        present.insert(c.constructor);
      for (const auto &rc : a.set.root().clauses) {
        if (present.count(rc.constructor))
          continue;
        // Any value built by this constructor has the concrete type of a
        // spec admitting it; none of those fits dest's argument type.
        for (SpecId sigma = 0; sigma < a.set.size(); ++sigma) {
          bool admits = false;
          for (const auto &c : a.set.spec(sigma).clauses)
            admits = admits || c.constructor == rc.constructor;
          if (!admits)
            continue;
          CHECK(!unify(encode_concrete(a.set, a.hierarchy, sigma),
                       encode_abstract(a.set, a.hierarchy, s)));
        }
      }
    }
  }
}

TEST_CASE("generated unit layout") {
  Analysis a = support::load("fmla");
  GeneratedUnit u = gen_phantom(a.set, a.hierarchy);
  CHECK(u.sig_file == "Fmla.sig");
  CHECK(u.struct_file == "Fmla.sml");
  CHECK(u.sig_text.find("signature FMLA = sig\n") != std::string::npos);
  CHECK(u.struct_text.find("structure Fmla :> FMLA = struct\n") != std::string::npos);
  CHECK(u.sig_text.find("    val Var : string -> CAtom\n") != std::string::npos);
  CHECK(u.struct_text.find("exception Unreachable") != std::string::npos);
  CHECK(u.sig_text.find("\t") == std::string::npos);
  CHECK(u.sig_text.back() == '\n');
  // Determinism
  CHECK(gen_phantom(a.set, a.hierarchy).struct_text == u.struct_text);
}

TEST_CASE("ML type rendering") {
  MlType a = MlType::var("a"), b = MlType::var("b");
  CHECK(render(MlType::arrow(MlType::arrow(a, b), a)) == "('a -> 'b) -> 'a");
  CHECK(render(MlType::arrow(a, MlType::arrow(b, a))) == "'a -> 'b -> 'a");
  CHECK(render(MlType::tuple({a, MlType::tuple({a, b})})) == "'a * ('a * 'b)");
  CHECK(render(MlType::tuple({})) == "unit");
  CHECK(render(MlType::tuple({a})) == "'a");
  CHECK(render(MlType::con("list", {MlType::tuple({a, b})})) == "('a * 'b) list");
  CHECK(render(MlType::con("t", {a, b})) == "('a, 'b) t");
  CHECK(render(MlType::con("t", {MlType::row("x", a)})) == "{x: 'a} t");
  CHECK(render(MlType::record({{"L", a}, {"R", MlType::arrow(a, b)}})) ==
        "{L : 'a, R : 'a -> 'b}");
}
