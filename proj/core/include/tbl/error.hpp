#pragma once

#include <stdexcept>
#include <string>

namespace tbl {

enum class Errc {
  bad_parameters,
  zero_vector,
  not_unit,
  unsupported_power,
  degenerate_draw,
  bad_interval,
  degenerate_angles,
  empty_sample,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace tbl
