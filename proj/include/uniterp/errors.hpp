#pragma once

#include <stdexcept>
#include <string>

namespace uniterp {

// Error taxonomy shared by the library and the CLI exit-code mapping:
//   IoError        -> exit 1 (missing/corrupt files)
//   usage errors   -> exit 2 (handled by the argument parser)
//   ContractError  -> exit 3 (valid files that violate an input contract)
//   NumericalError -> exit 4 (non-finite values, failed factorizations)
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

class ContractError : public Error {
 public:
  explicit ContractError(const std::string& what) : Error(what) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what) : Error(what) {}
};

}  // namespace uniterp
