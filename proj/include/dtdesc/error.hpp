#pragma once

#include <stdexcept>
#include <string>

namespace dtdesc {

enum class Errc {
  OutOfRange,
  LoopEdge,
  DuplicateEdge,
  MalformedGraph6,
  TooLarge,
  Disconnected,
  InvalidSite,
  ImproperDoubleTriangle,
  WouldCreateMultiEdge,
  BadDegreeSequence,
  NotATriangle,
  NonTerminating,
  NotZigzagPartitionable,
  MixedChains,
  SwapConventionUnsatisfiable,
  NegativeEntry,
  ZeroInClosed,
  BudgetExceeded,
  NotPrime,
  TooFewVertices,
  TooManyEdges,
  NonUnitConstantTerm,
  UnsupportedLevel,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace dtdesc
