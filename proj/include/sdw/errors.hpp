#ifndef SDW_ERRORS_HPP
#define SDW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sdw {

enum class errc {
  budget_exceeded,
  length_mismatch,
  invalid_argument,
  parse_error,
  not_self_dual,
  not_singly_even,
  not_s_extremal,
  length_not_multiple_of_8,
  precondition_failed,
  non_integral,
  inconsistent_system,
  non_unique_solution,
};

const char* errc_name(errc c);

// Single exception type with a machine-readable code; callers branch on
// code() rather than on a class hierarchy.
class error : public std::runtime_error {
 public:
  error(errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) {
  throw error(c, what);
}

}  // namespace sdw

#endif
