#pragma once

#include <stdexcept>
#include <string>

namespace pou {

// Three buckets so the CLI can map failures to exit codes:
//   Usage      -> 1 (bad input, IO, out-of-domain queries)
//   Violation  -> 2 (a validation check failed on a trace or instance)
//   Infeasible -> 3 (the requested instance cannot be built at this size)
enum class ErrorClass { Usage, Violation, Infeasible };

struct Error : std::runtime_error {
  ErrorClass cls;
  Error(ErrorClass c, const std::string& msg) : std::runtime_error(msg), cls(c) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(ErrorClass::Usage, "parse error: " + msg) {}
};

// A scheduled switch that the active rule forbids.
struct InvalidMove : Error {
  long long step;
  int vertex;
  long long b, g;
  InvalidMove(long long step_, int vertex_, long long b_, long long g_)
      : Error(ErrorClass::Violation,
              "invalid move at step " + std::to_string(step_) + ": vertex " +
                  std::to_string(vertex_) + " has b=" + std::to_string(b_) +
                  " g=" + std::to_string(g_)),
        step(step_), vertex(vertex_), b(b_), g(g_) {}
};

// A first response whose abstract-sequence transition is not a legal move.
struct IllegalTransition : Error {
  long long k;
  IllegalTransition(long long k_, const std::string& why)
      : Error(ErrorClass::Violation,
              "illegal transition at response " + std::to_string(k_) + ": " + why),
        k(k_) {}
};

struct ChainViolation : Error {
  explicit ChainViolation(const std::string& which)
      : Error(ErrorClass::Violation, "upper-bound chain violated: " + which) {}
};

struct ViolatedInequality : Error {
  long long step;
  ViolatedInequality(long long step_, const std::string& which)
      : Error(ErrorClass::Violation,
              "inequality violated at step " + std::to_string(step_) + ": " + which),
        step(step_) {}
};

struct InstanceTooSmall : Error {
  explicit InstanceTooSmall(const std::string& msg) : Error(ErrorClass::Infeasible, msg) {}
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& msg) : Error(ErrorClass::Infeasible, msg) {}
};

struct MTooSmall : Error {
  explicit MTooSmall(const std::string& msg) : Error(ErrorClass::Infeasible, msg) {}
};

struct StateLimitExceeded : Error {
  explicit StateLimitExceeded(long long limit)
      : Error(ErrorClass::Usage, "state limit exceeded: " + std::to_string(limit)) {}
};

struct ZeroInitialCost : Error {
  ZeroInitialCost() : Error(ErrorClass::Usage, "price of uncertainty undefined: initial bad edges = 0") {}
};

struct NoIncrease : Error {
  NoIncrease() : Error(ErrorClass::Usage, "trace contains no cost-increasing move") {}
};

struct DegenerateFit : Error {
  explicit DegenerateFit(const std::string& msg) : Error(ErrorClass::Usage, "degenerate fit: " + msg) {}
};

struct ZNotPresent : Error {
  explicit ZNotPresent(long long z)
      : Error(ErrorClass::Usage, "element " + std::to_string(z) + " not present in sequence") {}
};

struct WrongTargetCount : Error {
  explicit WrongTargetCount(const std::string& msg) : Error(ErrorClass::Usage, "bad target list: " + msg) {}
};

struct NonpositiveElement : Error {
  explicit NonpositiveElement(const std::string& msg)
      : Error(ErrorClass::Usage, "reversed move needs positive elements: " + msg) {}
};

}  // namespace pou
