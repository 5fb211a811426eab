#pragma once

namespace illum {

// Closed decides against the body itself, Interior against its interior.
enum class Mode { Closed, Interior };

}  // namespace illum
