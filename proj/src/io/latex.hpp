#pragma once

#include <string>

#include "radix/approx.hpp"
#include "radix/radical.hpp"

namespace cgr {

// LaTeX rendering of an exact scalar, e.g. "-\frac{\sqrt{14}}{7} + \frac{1}{2}".
std::string to_latex(const Radical& x);
std::string to_latex(const Approx& x);

// Parses the notation emitted by to_latex back into a Radical.
Radical radical_from_latex(const std::string& s);

}  // namespace cgr
