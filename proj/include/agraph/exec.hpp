#pragma once

namespace agraph {

/// Selects between the OpenMP kernel and the serial reference implementation.
/// Both produce identical, canonically ordered results.
enum class ExecPolicy { Serial, Parallel };

}  // namespace agraph
