#pragma once

#include <stdexcept>
#include <string>

namespace superharm {

enum class Errc {
	DivisionByZero,
	GammaPole,
	PoleAtPoint,
	ModeMismatch,
	IndexOutOfRange,
	NotSymplectic,
	NotOrthosymplectic,
	NotHomogeneous,
	BadDimension,
	DegreeOutOfRange,
	ParamOutOfRange,
	NotEigenfunction,
	HarmonicityViolated,
	RouteMismatch,
	MismatchAgainstPizzetti,
	GaussianPowerMismatch,
	NotStructured,
	BadOccupation,
	ZeroRoot,
	DegreeCapExceeded,
};

class Error : public std::runtime_error {
  public:
	Error(Errc code, std::string const &msg) : std::runtime_error(msg), code_(code) {}
	Errc code() const { return code_; }

  private:
	Errc code_;
};

[[noreturn]] inline void fail(Errc code, std::string const &msg) { throw Error(code, msg); }

} // namespace superharm
