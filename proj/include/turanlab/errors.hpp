#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace turanlab {

// Every failure mode the library reports deliberately.  Callers that care
// about a specific condition match on the code; the message carries context.
enum class Errc {
  oversize_graph,    // would exceed 64 vertices, or above a configured limit
  bad_spec,          // malformed construction expression or parameters
  parse_error,       // malformed graph6 record (offset() points at the byte)
  empty_graph,       // operation needs at least one vertex
  no_edges,          // operation needs at least one edge
  family_undefined,  // derived family undefined for this input
  corrupt_cache,     // result store failed an integrity check
  bad_k,             // path parameter out of range for the formula
  bad_range,         // numeric argument outside the formula's domain
  chi_too_small,     // formula needs chromatic number >= 3
  odd_k,             // formula needs even k
  even_k,            // formula needs odd k
  probe_too_small,   // brute-force probe order must exceed k
  no_witness_path,   // graph has no path of the required order
  has_pk,            // graph contains the forbidden path
  disconnected,      // operation needs a connected graph
  hamiltonian_path,  // graph has a spanning path where none is allowed
  invalid_argument,  // generic precondition failure
};

class TuranError : public std::runtime_error {
 public:
  TuranError(Errc code, const std::string& what, std::size_t offset = 0)
      : std::runtime_error(what), code_(code), offset_(offset) {}

  Errc code() const { return code_; }
  // Byte offset into the input for parse errors; 0 otherwise.
  std::size_t offset() const { return offset_; }

 private:
  Errc code_;
  std::size_t offset_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what,
                              std::size_t offset = 0) {
  throw TuranError(code, what, offset);
}

}  // namespace turanlab
