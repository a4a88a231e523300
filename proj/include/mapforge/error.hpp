#ifndef MAPFORGE_ERROR_HPP
#define MAPFORGE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mapforge {

enum class Errc {
  // flag system validation
  OutOfRange,
  NotInvolution,
  FixedPoint,
  NonCommuting,
  NotDisjoint,
  Disconnected,
  // preconditions shared by several modules
  RankNotTwo,
  RankMismatch,
  OddCharacteristicOrientable,
  NotAClosedCycle,
  ClosureViolation,
  ValidationFailure,
  // doubles
  VertexBipartite,
  NotDeck,
  HasFixedPoint,
  ConnectionCollision,
  // construct
  NotAnEdge,
  LoopEdge,
  FaceSizeMismatch,
  FaceSelfAdjacent,
  UnknownName,
  BadParameters,
  OrientabilityMismatch,
  ExceptionalPair,
  ConstructionFailed,
  // text formats
  Parse,
};

std::string_view errc_name(Errc code);

/// Every failure raised by the library. `index_a`, `index_b` and `flag`
/// carry the connection indices / flag named by the error kind, or -1.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, long index_a = -1, long index_b = -1,
        long flag = -1)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        index_a_(index_a),
        index_b_(index_b),
        flag_(flag) {}

  Errc code() const noexcept { return code_; }
  long index_a() const noexcept { return index_a_; }
  long index_b() const noexcept { return index_b_; }
  long flag() const noexcept { return flag_; }

 private:
  Errc code_;
  long index_a_;
  long index_b_;
  long flag_;
};

}  // namespace mapforge

#endif  // MAPFORGE_ERROR_HPP
