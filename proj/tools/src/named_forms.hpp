#pragma once

#include "mfdr/oxring.hpp"
#include "mfdr/qseries.hpp"

#include <string>

namespace mfdr::cli {

// u, v, delta, j, G<k>, E<k>, f_<m>@<k> (or f_<m> with a weight); anything else is read as a file ("-" is stdin)
// holding an OX element or a q-series, in text or JSON.
OXElement resolve_form(const std::string& name);
// weight is only consulted for series payloads
OXElement resolve_form(const std::string& name, int weight);
QSeries resolve_series(const std::string& name, int trunc, int weight = 0);

std::string read_payload(const std::string& path);

} // namespace mfdr::cli
