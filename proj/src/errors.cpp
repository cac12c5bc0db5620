#include "sdw/errors.hpp"

namespace sdw {

const char* errc_name(errc c) {
  switch (c) {
    case errc::budget_exceeded:
      return "budget exceeded";
    case errc::length_mismatch:
      return "length mismatch";
    case errc::invalid_argument:
      return "invalid argument";
    case errc::parse_error:
      return "parse error";
    case errc::not_self_dual:
      return "not self-dual";
    case errc::not_singly_even:
      return "not singly even";
    case errc::not_s_extremal:
      return "not s-extremal";
    case errc::length_not_multiple_of_8:
      return "length not a multiple of 8";
    case errc::precondition_failed:
      return "precondition failed";
    case errc::non_integral:
      return "non-integral result";
    case errc::inconsistent_system:
      return "inconsistent system";
    case errc::non_unique_solution:
      return "non-unique solution";
  }
  return "unknown error";
}

}  // namespace sdw
