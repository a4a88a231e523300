#include "mapforge/error.hpp"

namespace mapforge {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NotInvolution: return "NotInvolution";
    case Errc::FixedPoint: return "FixedPoint";
    case Errc::NonCommuting: return "NonCommuting";
    case Errc::NotDisjoint: return "NotDisjoint";
    case Errc::Disconnected: return "Disconnected";
    case Errc::RankNotTwo: return "RankNotTwo";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::OddCharacteristicOrientable: return "OddCharacteristicOrientable";
    case Errc::NotAClosedCycle: return "NotAClosedCycle";
    case Errc::ClosureViolation: return "ClosureViolation";
    case Errc::ValidationFailure: return "ValidationFailure";
    case Errc::VertexBipartite: return "VertexBipartite";
    case Errc::NotDeck: return "NotDeck";
    case Errc::HasFixedPoint: return "HasFixedPoint";
    case Errc::ConnectionCollision: return "ConnectionCollision";
    case Errc::NotAnEdge: return "NotAnEdge";
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::FaceSizeMismatch: return "FaceSizeMismatch";
    case Errc::FaceSelfAdjacent: return "FaceSelfAdjacent";
    case Errc::UnknownName: return "UnknownName";
    case Errc::BadParameters: return "BadParameters";
    case Errc::OrientabilityMismatch: return "OrientabilityMismatch";
    case Errc::ExceptionalPair: return "ExceptionalPair";
    case Errc::ConstructionFailed: return "ConstructionFailed";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace mapforge
