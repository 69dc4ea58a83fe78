#pragma once

#include "voganish/packets.hpp"

namespace voganish {

enum class ReportFormat { Markdown, Csv };

// Emits one of the bundle's tables. Known ids (D = display name): orbits-D,
// Evs-D, NEvs-D, AS-D, fourier-D, mrep-D, mgeo-D, ABV-D, twist-D.
// Output is byte-stable for a fixed bundle and format.
std::string report_table(const ExampleBundle& b, const std::string& table_id, ReportFormat fmt);

std::vector<std::string> known_table_ids(const ExampleBundle& b);

}  // namespace voganish
