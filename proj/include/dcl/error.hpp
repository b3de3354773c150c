#pragma once

#include <stdexcept>
#include <string>

namespace dcl {

// Stable error categories. The CLI maps these onto its documented exit codes.
enum class errc {
    invalid_parameter,        // bad family size, malformed input, precondition breach
    overflow_policy,          // exact-size cap exceeded; caller should switch representation
    non_unit,                 // label shares a factor with the modulus
    factorization_incomplete, // a cofactor resisted the iteration budget
    resource_budget,          // sieve index or closure budget exceeded
    not_bipartite,            // odd cycle found where a bipartition was required
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string &what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string &what) { throw error(code, what); }

} // namespace dcl
