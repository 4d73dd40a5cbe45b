#pragma once

// Just enough of the ML type language to spell generated signatures.

#include <string>
#include <utility>
#include <vector>

namespace dtspec {

struct MlType {
  enum class Kind {
    Var,    // 'a
    Con,    // (args) name
    Tuple,  // a * b
    Arrow,  // a -> b
    Record, // {L : t, ...}
    Row,    // {label: t}, the phantom record of an encoding
  };

  Kind kind = Kind::Con;
  std::string name;
  std::vector<MlType> args;
  std::vector<std::string> labels; // Record field names, parallel to args

  static MlType var(std::string name);
  static MlType con(std::string name, std::vector<MlType> args = {});
  // A one-element tuple collapses to its element; zero elements give unit.
  static MlType tuple(std::vector<MlType> items);
  static MlType arrow(MlType from, MlType to);
  static MlType record(std::vector<std::pair<std::string, MlType>> fields);
  static MlType row(std::string label, MlType inner);

  friend bool operator==(const MlType &, const MlType &) = default;
};

std::string render(const MlType &t);

// Type variables as ML type arguments: "'a", "('a, 'b)".
std::vector<MlType> tyvar_args(const std::vector<std::string> &names);

} // namespace dtspec
