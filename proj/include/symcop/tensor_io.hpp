#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "symcop/sym_tensor.hpp"

namespace symcop {

// Plain-text tensor file, indices 1-based:
//
//   # comment
//   tensor <order> <dim> symmetric|general
//   <i_1> ... <i_k> <value>
//   ...
//
// In symmetric mode each line sets the whole permutation orbit of its index;
// repeating an orbit with a different value is an error. In general mode each
// line sets one position and the tensor is symmetrized by averaging every
// orbit over its permutations.

class TensorParseError : public std::runtime_error {
public:
  TensorParseError(int line, const std::string &what);
  int line() const { return line_; }

private:
  int line_;
};

SymTensor parse_tensor(std::string_view text);
/// Symmetric-mode text; parse_tensor(emit_tensor(A)) == A exactly.
std::string emit_tensor(const SymTensor &a);

SymTensor read_tensor_file(const std::string &path);
void write_tensor_file(const std::string &path, const SymTensor &a);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

} // namespace symcop
