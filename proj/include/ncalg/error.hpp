#pragma once

#include <stdexcept>
#include <string>

namespace ncalg {

/// Base class of every error raised by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define NCALG_DEFINE_ERROR(Name)                                  \
    struct Name : error {                                         \
        explicit Name(const std::string& what) : error(what) {}   \
    }

NCALG_DEFINE_ERROR(division_by_zero);
NCALG_DEFINE_ERROR(variant_mismatch);
NCALG_DEFINE_ERROR(zero_scalar_q);
NCALG_DEFINE_ERROR(alphabet_mismatch);
NCALG_DEFINE_ERROR(size_mismatch);
NCALG_DEFINE_ERROR(non_orientable);
NCALG_DEFINE_ERROR(step_limit_exceeded);
NCALG_DEFINE_ERROR(bad_parameter);
NCALG_DEFINE_ERROR(non_quadratic_relation);
NCALG_DEFINE_ERROR(param_mismatch);
NCALG_DEFINE_ERROR(zero_norm);
NCALG_DEFINE_ERROR(non_unit_axis);
NCALG_DEFINE_ERROR(non_unit_versor);
NCALG_DEFINE_ERROR(dimension_too_large);
NCALG_DEFINE_ERROR(unsupported_field);
NCALG_DEFINE_ERROR(bad_order);
NCALG_DEFINE_ERROR(missing_antipode);
NCALG_DEFINE_ERROR(action_table_incomplete);
NCALG_DEFINE_ERROR(verification_failed);
NCALG_DEFINE_ERROR(size_not_square);
NCALG_DEFINE_ERROR(zero_q);
NCALG_DEFINE_ERROR(hecke_violation);

#undef NCALG_DEFINE_ERROR

/// Syntax error in textual input; carries a 1-based position.
struct parse_error : error {
    int line;
    int column;
    parse_error(const std::string& msg, int line_, int column_)
        : error("parse error at " + std::to_string(line_) + ":" + std::to_string(column_) + ": " + msg),
          line(line_),
          column(column_) {}
};

}  // namespace ncalg
