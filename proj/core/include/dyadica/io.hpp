#pragma once

#include "dyadica/refine.hpp"
#include "dyadica/stepfn.hpp"
#include "dyadica/theorem1.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace dyadica {

/// Structured parse failure with a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column = 0);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Step-function CSV:
///   rank,support_exp
///   <j>,<m>
///   index,re_num,re_den,im_num,im_den
///   <k>,<...>          (one dense row per atom; '#' lines are comments)
/// Round trips bit-exactly.  with_float appends a lossy decimal column.
std::string emit_step_csv(const StepFunction& f, bool with_float = false);
StepFunction parse_step_csv(std::istream& in);
StepFunction parse_step_csv_string(const std::string& text);

/// Mask JSON: {"coefficients": [[re_num, re_den, im_num, im_den], ...]}.
std::string emit_mask_json(const std::vector<ExactScalar>& coeffs);
std::vector<ExactScalar> parse_mask_coeffs_json(std::istream& in);
std::vector<ExactScalar> parse_mask_coeffs_json_string(const std::string& text);

std::string emit_theorem1_json(const Theorem1Report& report);
/// CSV table: n,computed_num,computed_den,paper_value_num,paper_value_den.
std::string emit_theorem1_csv(const Theorem1Report& report);

}  // namespace dyadica
