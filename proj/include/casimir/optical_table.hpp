#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "casimir/constants.hpp"

namespace casimir {

// One measured point of the absorptive part of the dielectric function.
// omega in eV (canonical unit), eps2 dimensionless.
struct OpticalSample {
    double omega = 0.0;
    double eps2 = 0.0;
};

// Tabulated eps''(omega) for one material, sorted ascending in omega.
struct OpticalTable {
    std::string material;
    std::vector<OpticalSample> samples;
    std::string source;  // free-text provenance, carried through to outputs

    double omega_min() const { return samples.front().omega; }
    double omega_max() const { return samples.back().omega; }
};

enum class FrequencyUnit { ev, radps, micrometers_wavelength };
enum class ColumnLayout { omega_eps2, omega_n_k, omega_eps1_eps2 };

// eps = (n + i k)^2  ->  (n^2 - k^2, 2 n k)
std::pair<double, double> nk_to_eps(double n, double k);

// Parse delimited text (comma or whitespace, '#' comments) with a header row
// naming the columns.  The declared unit/layout must agree with the header.
// Rows are converted to eV, sorted ascending; duplicate omegas are rejected.
OpticalTable parse_table(std::istream& in, FrequencyUnit unit, ColumnLayout layout,
                         const std::string& material = "",
                         const PhysicalConstants& pc = kDefaultConstants);

// Same, but unit and layout are deduced from the header row.
OpticalTable parse_table_auto(std::istream& in, const std::string& material = "",
                              const PhysicalConstants& pc = kDefaultConstants);

OpticalTable load_table_file(const std::string& path, const std::string& material);

// Canonical serialization: omega_eV eps2 columns, 17 significant digits.
// parse(serialize(t)) == t bit-exactly.
void serialize_table(const OpticalTable& table, std::ostream& out);
std::string serialize_table(const OpticalTable& table);

const char* to_string(FrequencyUnit u);
const char* to_string(ColumnLayout c);
FrequencyUnit frequency_unit_from_string(const std::string& s);
ColumnLayout column_layout_from_string(const std::string& s);

}  // namespace casimir
