// Umbrella header for the C++ library.
#ifndef FPW_FPW_HPP
#define FPW_FPW_HPP

#include "fpw/bs.hpp"
#include "fpw/error.hpp"
#include "fpw/harness.hpp"
#include "fpw/oracle.hpp"
#include "fpw/presentation.hpp"
#include "fpw/search.hpp"
#include "fpw/serialize.hpp"
#include "fpw/smith.hpp"
#include "fpw/tietze.hpp"
#include "fpw/trivial_stream.hpp"
#include "fpw/word.hpp"

#endif  // FPW_FPW_HPP
