#pragma once

#include <stdexcept>
#include <string>

namespace cgt {

enum class Err {
  NotAGroup,
  NotNormal,
  NotAbelian,
  NotSimple,
  OrderOutOfRange,
  FactorClassViolation,
  ComponentTooLarge,
  NotBilinear,
  NotIsometry,
  DoesNotFixA,
  NotASubcoset,
  DomainTooLarge,
  TopFactorNotIsomorphic,
  BadInput,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(Err kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Err kind() const { return kind_; }

private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace cgt
