#pragma once

namespace twoval {

// Scans come in a serial reference form and an OpenMP form. Both report the
// same witness: the first failure in enumeration order.
enum class Exec { serial, parallel };

}  // namespace twoval
