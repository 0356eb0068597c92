#pragma once

namespace tourpack {

/// Selects the OpenMP kernel or the serial reference path. Both produce
/// identical results; the serial path is what the tests treat as reference.
enum class Execution
{
    serial,
    parallel,
};

} // namespace tourpack
