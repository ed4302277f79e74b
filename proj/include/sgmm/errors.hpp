#pragma once

#include <stdexcept>
#include <string>

namespace sgmm {

// Typed error codes; every contract violation raised by the library carries one.
enum class errc {
  empty_generators,
  non_coprime,
  invalid_argument,
  parent_mismatch,
  not_a_submodule,
  not_integral,
  no_unit,
  not_an_extension,
  not_proper,
  reduction_not_confirmed,
  zero_module,
  unsupported_index,
  regular_ring,
  unknown_suite,
  unknown_predicate,
  parse_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::empty_generators: return "EmptyGenerators";
    case errc::non_coprime: return "NonCoprime";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::parent_mismatch: return "ParentMismatch";
    case errc::not_a_submodule: return "NotASubmodule";
    case errc::not_integral: return "NotIntegral";
    case errc::no_unit: return "NoUnit";
    case errc::not_an_extension: return "NotAnExtension";
    case errc::not_proper: return "NotProper";
    case errc::reduction_not_confirmed: return "ReductionNotConfirmed";
    case errc::zero_module: return "ZeroModule";
    case errc::unsupported_index: return "UnsupportedIndex";
    case errc::regular_ring: return "RegularRing";
    case errc::unknown_suite: return "UnknownSuite";
    case errc::unknown_predicate: return "UnknownPredicate";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace sgmm
