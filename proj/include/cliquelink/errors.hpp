#pragma once

#include <stdexcept>
#include <string>

namespace cliquelink {

/// Raised when a caller violates an operation's precondition.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A vertex lies outside its graph or is not active in a subgrid.
class InvalidVertexError : public ContractError {
 public:
  using ContractError::ContractError;
};

/// A restriction removed every row or every column.
class EmptySubgridError : public ContractError {
 public:
  using ContractError::ContractError;
};

/// Connectivity asked of a graph with a single vertex.
class UndefinedConnectivityError : public ContractError {
 public:
  using ContractError::ContractError;
};

}  // namespace cliquelink
