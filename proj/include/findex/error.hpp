#pragma once

#include <stdexcept>
#include <string>

namespace findex {

enum class errc {
  self_loop,
  duplicate_edge,
  out_of_range,
  parse_error,
  bad_param,
  bad_exponent,
  overflow,
  empty_subset,
  disconnected,
  too_small,
  generation_failure,
};

const char* errc_name(errc code);

/// Library error carrying a machine-checkable code alongside the message.
class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
  throw error(code, what);
}

} // namespace findex
