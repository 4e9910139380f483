#pragma once

#include <stdexcept>
#include <string>

namespace matroidlab {

enum class Errc {
  // construction / validation
  EmptyFamily,
  NotEquicardinal,
  ExchangeAxiomViolated,
  CircuitAxiomViolated,
  F1Violated,
  F2PrimeViolated,
  RankTableMismatch,
  ValidationError,
  // queries and preconditions
  NotAFlat,
  NotRank2Flat,
  WrongRank,
  WrongCorank,
  RankTooSmall,
  PreconditionViolated,
  HypothesisViolated,
  // cuts and completion
  NotAModularCut,
  NotHypermodular,
  VamosFound,
  NonTermination,
  // misc
  UnknownCatalogEntry,
  UnsupportedParam,
  BudgetExceeded,
  SyntaxError,
  InternalInvariant,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace matroidlab
