#ifndef MALCEV_EXEC_HPP
#define MALCEV_EXEC_HPP

namespace malcev {

/// Execution policy for the data-parallel kernels. Every kernel has a plain
/// serial body and an OpenMP body producing bit-identical results; the serial
/// one is the reference the tests compare against.
enum class Exec { serial, parallel };

inline constexpr Exec kDefaultExec = Exec::parallel;

}  // namespace malcev

#endif
