#pragma once

#include <stdexcept>
#include <string>

namespace acik {

enum class Errc {
  not_prime,
  reducible_modpoly,
  no_default_poly,
  zero_inverse,
  field_mismatch,
  cross_column_variable,
  empty_matrix,
  missing_assignment,
  foreign_assignment,
  singular_t,
  dimension_mismatch,
  empty_selection,
  index_out_of_range,
  budget_exceeded,
  subset_budget_exceeded,
  not_constant_rank,
  not_square_full_rank,
  precondition_violated,
  verification_failed,
  variable_clash,
  not_classified,
  infeasible_shape,
  syntax_error,
  unknown_field_element,
  bad_input,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace acik
