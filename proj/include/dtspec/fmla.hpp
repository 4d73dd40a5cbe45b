#pragma once

// Reference formula programs over generic terms of
//   datatype fmla = Var of string | Not of fmla | True | And of fmla * fmla
//                 | False | Or of fmla * fmla

#include "dtspec/terms.hpp"

#include <map>
#include <set>
#include <string>

namespace dtspec::fmla {

using Env = std::map<std::string, bool>;

TermPtr var(std::string name);
TermPtr not_(TermPtr f);
TermPtr true_();
TermPtr false_();
TermPtr and_(TermPtr l, TermPtr r);
TermPtr or_(TermPtr l, TermPtr r);

// Top-level constructor name. Throws std::invalid_argument for anything
// that is not a formula constructor.
std::string identify(const Term &t);

// Fully parenthesized: p, (~ p), (p /\ q), (p \/ q), T, F.
std::string to_string(const Term &t);

// Throws std::invalid_argument for an unbound variable.
bool eval(const Term &t, const Env &env);

std::set<std::string> variables(const Term &t);

// Disjunctive normal form: negations pushed to the variables, then
// conjunctions distributed over disjunctions. The result is a member of
//   dnf = False | Or of conj * dnf,  conj = True | And of lit * conj,
//   lit = Var of string | Not of atom,  atom = Var of string
TermPtr to_dnf(const TermPtr &t);

} // namespace dtspec::fmla
