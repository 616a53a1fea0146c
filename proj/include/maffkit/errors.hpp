#pragma once

#include <stdexcept>
#include <string>

namespace maff {

enum class errc {
  dimension_mismatch,
  not_hermitian,
  no_convergence,
  not_psd,
  not_projection,
  range_not_contained,
  ranges_differ,
  nullspace_violation,
  outside_domain,
  not_injective,
  not_in_algebra,
  not_affiliated,
  not_positive,
  not_in_f,
  not_an_extension,
  not_contractive,
  initial_not_in_f,
  no_extension_found,
  bad_input,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace maff
