#pragma once

#include <string>

// The full table of simplest deformations of 2x2 and 3x3 matrices, rendered
// from the pattern engine (never stored): canonical matrix and star grid side
// by side for every canonical structure of total dimension 2 and 3. The
// `examples` subcommand diffs this against the vendored fixture as a
// regression guard.
std::string examples_table();
