#pragma once

namespace descentlab {

inline constexpr const char* kVersion = "0.1.0";
// Identifier of the total order used for partitions: longest first,
// lexicographically ascending among equal lengths.
inline constexpr const char* kOrderId = "length-desc-lex-asc";

}  // namespace descentlab
