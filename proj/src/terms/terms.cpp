#include "dtspec/terms.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace dtspec {

TermArg TermArg::literal(std::string base, std::string text) {
  return {Kind::BaseLit, std::move(base), std::move(text), nullptr};
}

TermArg TermArg::hole() { return {Kind::TyHole, "", "", nullptr}; }

TermArg TermArg::subterm(TermPtr t) {
  return {Kind::Sub, "", "", std::move(t)};
}

Term::Term(std::string constructor, std::vector<TermArg> args)
    : constructor_(std::move(constructor)), args_(std::move(args)) {
  for (const auto &a : args_)
    if (a.kind == TermArg::Kind::Sub)
      depth_ = std::max(depth_, a.sub->depth() + 1);
}

TermPtr make_term(std::string constructor, std::vector<TermArg> args) {
  return std::make_shared<const Term>(std::move(constructor), std::move(args));
}

bool operator==(const TermArg &a, const TermArg &b) {
  if (a.kind != b.kind)
    return false;
  switch (a.kind) {
  case TermArg::Kind::BaseLit:
    return a.base == b.base && a.text == b.text;
  case TermArg::Kind::TyHole:
    return true;
  case TermArg::Kind::Sub:
    return a.sub == b.sub || *a.sub == *b.sub;
  }
  return false;
}

bool operator==(const Term &a, const Term &b) {
  return a.constructor() == b.constructor() && a.args() == b.args();
}

namespace {

int compare(const Term &a, const Term &b);

int compare(const TermArg &a, const TermArg &b) {
  if (a.kind != b.kind)
    return a.kind < b.kind ? -1 : 1;
  switch (a.kind) {
  case TermArg::Kind::BaseLit:
    if (int c = a.base.compare(b.base))
      return c;
    return a.text.compare(b.text);
  case TermArg::Kind::TyHole:
    return 0;
  case TermArg::Kind::Sub:
    return a.sub == b.sub ? 0 : compare(*a.sub, *b.sub);
  }
  return 0;
}

int compare(const Term &a, const Term &b) {
  if (int c = a.constructor().compare(b.constructor()))
    return c;
  if (a.args().size() != b.args().size())
    return a.args().size() < b.args().size() ? -1 : 1;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (int c = compare(a.args()[i], b.args()[i]))
      return c;
  return 0;
}

} // namespace

bool operator<(const Term &a, const Term &b) { return compare(a, b) < 0; }

// ---------------------------------------------------------------------------
// Fixture syntax

namespace {

void append_arg(std::string &out, const TermArg &a) {
  switch (a.kind) {
  case TermArg::Kind::BaseLit:
    if (a.base == "string")
      out += "\"" + a.text + "\"";
    else if (a.base == "int" || a.base == "bool")
      out += a.text;
    else
      out += "?" + a.base;
    break;
  case TermArg::Kind::TyHole:
    out += "_";
    break;
  case TermArg::Kind::Sub:
    out += to_text(*a.sub);
    break;
  }
}

class TermReader {
public:
  explicit TermReader(std::string_view s) : s_(s) {}

  TermPtr read() {
    TermPtr t = term();
    skip_ws();
    if (i_ != s_.size())
      fail("trailing input");
    return t;
  }

private:
  [[noreturn]] void fail(const std::string &what) const {
    throw std::invalid_argument("term syntax: " + what + " at offset " +
                                std::to_string(i_));
  }

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
  }

  std::string ident() {
    std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) ||
                              s_[i_] == '_' || s_[i_] == '\''))
      ++i_;
    return std::string(s_.substr(start, i_ - start));
  }

  TermPtr term() {
    skip_ws();
    if (i_ >= s_.size() || !std::isupper(static_cast<unsigned char>(s_[i_])))
      fail("expected constructor");
    std::string con = ident();
    std::vector<TermArg> args;
    skip_ws();
    if (i_ < s_.size() && s_[i_] == '(') {
      ++i_;
      skip_ws();
      if (i_ < s_.size() && s_[i_] == ')') {
        ++i_;
      } else {
        for (;;) {
          args.push_back(arg());
          skip_ws();
          if (i_ < s_.size() && s_[i_] == ',') {
            ++i_;
            continue;
          }
          if (i_ < s_.size() && s_[i_] == ')') {
            ++i_;
            break;
          }
          fail("expected ',' or ')'");
        }
      }
    }
    return make_term(std::move(con), std::move(args));
  }

  TermArg arg() {
    skip_ws();
    if (i_ >= s_.size())
      fail("unexpected end of input");
    char c = s_[i_];
    if (c == '"') {
      std::size_t close = s_.find('"', i_ + 1);
      if (close == std::string_view::npos)
        fail("unterminated string");
      std::string text(s_.substr(i_ + 1, close - i_ - 1));
      i_ = close + 1;
      return TermArg::literal("string", std::move(text));
    }
    if (c == '_') {
      ++i_;
      return TermArg::hole();
    }
    if (c == '?') {
      ++i_;
      std::string base = ident();
      if (base.empty())
        fail("expected base type name after '?'");
      return TermArg::literal(base, "?");
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_++;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
        ++i_;
      return TermArg::literal("int", std::string(s_.substr(start, i_ - start)));
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::string word = ident();
      if (word == "true" || word == "false")
        return TermArg::literal("bool", word);
      fail("unknown literal '" + word + "'");
    }
    return TermArg::subterm(term());
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

} // namespace

std::string to_text(const Term &t) {
  std::string out = t.constructor();
  if (t.args().empty())
    return out;
  out += "(";
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i)
      out += ", ";
    append_arg(out, t.args()[i]);
  }
  return out + ")";
}

std::string to_text(const TermPtr &t) { return to_text(*t); }

TermPtr parse_term(std::string_view text) { return TermReader(text).read(); }

std::vector<TermArg> base_pool(const std::string &base) {
  if (base == "string")
    return {TermArg::literal("string", "p"), TermArg::literal("string", "q")};
  if (base == "int")
    return {TermArg::literal("int", "0"), TermArg::literal("int", "1")};
  if (base == "bool")
    return {TermArg::literal("bool", "true"),
            TermArg::literal("bool", "false")};
  return {TermArg::literal(base, "?")};
}

// ---------------------------------------------------------------------------
// Membership

void check_well_formed(const SpecSet &set, const Term &t) {
  auto idx = set.root_clause_index(t.constructor());
  if (!idx)
    throw std::invalid_argument("malformed term: '" + t.constructor() +
                                "' is not a constructor of '" +
                                set.root_name() + "'");
  const ConClause &decl = set.root().clauses[*idx];
  if (decl.args.size() != t.args().size())
    throw std::invalid_argument(
        "malformed term: '" + t.constructor() + "' expects " +
        std::to_string(decl.args.size()) + " argument(s), got " +
        std::to_string(t.args().size()));
  for (std::size_t i = 0; i < decl.args.size(); ++i) {
    const TypeAtom &atom = decl.args[i];
    const TermArg &arg = t.args()[i];
    bool ok = false;
    switch (atom.kind) {
    case AtomKind::RecRef:
      ok = arg.kind == TermArg::Kind::Sub;
      if (ok)
        check_well_formed(set, *arg.sub);
      break;
    case AtomKind::Base:
      ok = arg.kind == TermArg::Kind::BaseLit && arg.base == atom.name;
      break;
    case AtomKind::TyVar:
      ok = arg.kind != TermArg::Kind::Sub;
      break;
    case AtomKind::Unresolved:
      break;
    }
    if (!ok)
      throw std::invalid_argument("malformed term: argument " +
                                  std::to_string(i + 1) + " of '" +
                                  t.constructor() + "' should be " +
                                  render_atom(atom));
  }
}

namespace {

bool member(const SpecSet &set, const Term &t, SpecId s) {
  for (const auto &clause : set.spec(s).clauses) {
    if (clause.constructor != t.constructor())
      continue;
    bool ok = true;
    for (std::size_t i = 0; ok && i < clause.args.size(); ++i)
      if (clause.args[i].is_recursive())
        ok = member(set, *t.args()[i].sub, set.target(clause.args[i]));
    if (ok)
      return true;
  }
  return false;
}

} // namespace

bool membership(const SpecSet &set, const Term &t, SpecId s) {
  if (s >= set.size())
    throw std::invalid_argument("unknown specialization id " +
                                std::to_string(s));
  check_well_formed(set, t);
  return member(set, t, s);
}

bool membership(const SpecSet &set, const Term &t, std::string_view s) {
  return membership(set, t, set.id_of(s));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

bool repeats_constructor(const Specialization &sp) {
  std::set<std::string> seen;
  for (const auto &c : sp.clauses)
    if (!seen.insert(c.constructor).second)
      return true;
  return false;
}

// Calls `emit` with every combination of per-position choices, leftmost
// position varying slowest.
template <typename F>
void cartesian(const std::vector<std::vector<TermArg>> &choices, F &&emit) {
  std::vector<std::size_t> idx(choices.size(), 0);
  for (const auto &c : choices)
    if (c.empty())
      return;
  for (;;) {
    std::vector<TermArg> args;
    args.reserve(choices.size());
    for (std::size_t i = 0; i < choices.size(); ++i)
      args.push_back(choices[i][idx[i]]);
    emit(std::move(args));
    std::size_t k = choices.size();
    while (k > 0) {
      --k;
      if (++idx[k] < choices[k].size())
        break;
      idx[k] = 0;
      if (k == 0)
        return;
    }
    if (choices.empty())
      return;
  }
}

class Enumerator {
public:
  explicit Enumerator(const SpecSet &set) : set_(set) {}

  const std::vector<TermPtr> &terms(SpecId s, int depth) {
    auto key = std::make_pair(s, depth);
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;
    std::vector<TermPtr> out;
    if (depth >= 1) {
      const Specialization &sp = set_.spec(s);
      for (const auto &clause : sp.clauses) {
        std::vector<std::vector<TermArg>> choices;
        for (const auto &atom : clause.args) {
          switch (atom.kind) {
          case AtomKind::RecRef: {
            std::vector<TermArg> subs;
            for (const auto &t : terms(set_.target(atom), depth - 1))
              subs.push_back(TermArg::subterm(t));
            choices.push_back(std::move(subs));
            break;
          }
          case AtomKind::Base:
            choices.push_back(base_pool(atom.name));
            break;
          default:
            choices.push_back({TermArg::hole()});
            break;
          }
        }
        cartesian(choices, [&](std::vector<TermArg> args) {
          out.push_back(make_term(clause.constructor, std::move(args)));
        });
      }
      if (repeats_constructor(sp)) {
        std::set<TermPtr, TermPtrLess> seen;
        std::vector<TermPtr> unique;
        for (auto &t : out)
          if (seen.insert(t).second)
            unique.push_back(t);
        out = std::move(unique);
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

private:
  const SpecSet &set_;
  std::map<std::pair<SpecId, int>, std::vector<TermPtr>> memo_;
};

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0)
    return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  return r < a ? std::numeric_limits<std::uint64_t>::max() : r;
}

} // namespace

std::vector<TermPtr> enumerate_terms(const SpecSet &set, SpecId s, int depth) {
  if (s >= set.size())
    throw std::invalid_argument("unknown specialization id " +
                                std::to_string(s));
  Enumerator e(set);
  return e.terms(s, depth);
}

std::vector<TermPtr> enumerate_terms(const SpecSet &set, std::string_view s,
                                     int depth) {
  return enumerate_terms(set, set.id_of(s), depth);
}

std::uint64_t enumeration_size_bound(const SpecSet &set, SpecId s, int depth) {
  // counts[d][spec]
  std::vector<std::uint64_t> prev(set.size(), 0), cur(set.size(), 0);
  for (int d = 1; d <= depth; ++d) {
    for (SpecId sp = 0; sp < set.size(); ++sp) {
      std::uint64_t total = 0;
      for (const auto &clause : set.spec(sp).clauses) {
        std::uint64_t n = 1;
        for (const auto &atom : clause.args) {
          if (atom.kind == AtomKind::RecRef)
            n = sat_mul(n, prev[set.target(atom)]);
          else if (atom.kind == AtomKind::Base)
            n = sat_mul(n, base_pool(atom.name).size());
        }
        total = sat_add(total, n);
      }
      cur[sp] = total;
    }
    prev = cur;
  }
  return depth >= 1 ? prev.at(s) : 0;
}

std::vector<TermClass> enumerate_classes(const SpecSet &set, int depth) {
  std::vector<TermClass> classes;
  std::map<std::vector<bool>, std::size_t> index;
  for (int d = 1; d <= depth; ++d) {
    // Arguments are drawn from the classes of depth <= d-1.
    const std::size_t available = classes.size();
    std::vector<TermClass> fresh;
    for (const auto &clause : set.root().clauses) {
      std::vector<std::vector<TermArg>> choices;
      for (const auto &atom : clause.args) {
        if (atom.kind == AtomKind::RecRef) {
          std::vector<TermArg> subs;
          for (std::size_t c = 0; c < available; ++c)
            subs.push_back(TermArg::subterm(classes[c].witness));
          choices.push_back(std::move(subs));
        } else if (atom.kind == AtomKind::Base) {
          choices.push_back({base_pool(atom.name).front()});
        } else {
          choices.push_back({TermArg::hole()});
        }
      }
      cartesian(choices, [&](std::vector<TermArg> args) {
        TermPtr t = make_term(clause.constructor, std::move(args));
        std::vector<bool> profile(set.size());
        for (SpecId s = 0; s < set.size(); ++s)
          profile[s] = member(set, *t, s);
        if (index.count(profile))
          return;
        index.emplace(profile, classes.size() + fresh.size());
        fresh.push_back({std::move(profile), std::move(t)});
      });
    }
    for (auto &c : fresh)
      classes.push_back(std::move(c));
  }
  return classes;
}

} // namespace dtspec
