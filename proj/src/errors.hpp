#pragma once

#include <stdexcept>
#include <string>

namespace ncorr {

// Error categories shared by the C++ core and the C surface. Codes are
// stable: the C header mirrors them one-to-one.
enum class errc : int {
    ok = 0,
    pole = 1,       // evaluation point within pole tolerance of a pole
    size = 2,       // combinatorial size guard tripped
    strip = 3,      // complex argument outside the permitted strip
    tail = 4,       // quadrature tail bound not met
    support = 5,    // test-function support budget violated
    parse = 6,      // malformed input file
    order = 7,      // input ordinates not sorted / not positive
    numerical = 8,  // conditioning or convergence failure
    invalid = 9,    // bad argument combination
    io = 10,        // file system failure
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void throw_pole(const std::string& w) { throw error(errc::pole, w); }
[[noreturn]] inline void throw_size(const std::string& w) { throw error(errc::size, w); }
[[noreturn]] inline void throw_strip(const std::string& w) { throw error(errc::strip, w); }
[[noreturn]] inline void throw_tail(const std::string& w) { throw error(errc::tail, w); }
[[noreturn]] inline void throw_support(const std::string& w) { throw error(errc::support, w); }
[[noreturn]] inline void throw_parse(const std::string& w) { throw error(errc::parse, w); }
[[noreturn]] inline void throw_order(const std::string& w) { throw error(errc::order, w); }
[[noreturn]] inline void throw_numerical(const std::string& w) { throw error(errc::numerical, w); }
[[noreturn]] inline void throw_invalid(const std::string& w) { throw error(errc::invalid, w); }
[[noreturn]] inline void throw_io(const std::string& w) { throw error(errc::io, w); }

}  // namespace ncorr
