#include "matroidlab/errors.hpp"

namespace matroidlab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::EmptyFamily: return "EmptyFamily";
    case Errc::NotEquicardinal: return "NotEquicardinal";
    case Errc::ExchangeAxiomViolated: return "ExchangeAxiomViolated";
    case Errc::CircuitAxiomViolated: return "CircuitAxiomViolated";
    case Errc::F1Violated: return "F1Violated";
    case Errc::F2PrimeViolated: return "F2PrimeViolated";
    case Errc::RankTableMismatch: return "RankTableMismatch";
    case Errc::ValidationError: return "ValidationError";
    case Errc::NotAFlat: return "NotAFlat";
    case Errc::NotRank2Flat: return "NotRank2Flat";
    case Errc::WrongRank: return "WrongRank";
    case Errc::WrongCorank: return "WrongCorank";
    case Errc::RankTooSmall: return "RankTooSmall";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::NotAModularCut: return "NotAModularCut";
    case Errc::NotHypermodular: return "NotHypermodular";
    case Errc::VamosFound: return "VamosFound";
    case Errc::NonTermination: return "NonTermination";
    case Errc::UnknownCatalogEntry: return "UnknownCatalogEntry";
    case Errc::UnsupportedParam: return "UnsupportedParam";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace matroidlab
